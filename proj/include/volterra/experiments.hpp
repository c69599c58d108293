// Copyright 2026 The Volterra Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VOLTERRA_EXPERIMENTS_HPP_
#define VOLTERRA_EXPERIMENTS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "volterra/config.hpp"
#include "volterra/interval.hpp"
#include "volterra/orbit.hpp"
#include "volterra/parallel.hpp"
#include "volterra/sixpoints.hpp"
#include "volterra/tournament.hpp"

namespace volterra {

enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitUndecided = 2, kExitUsage = 3 };

struct OutputFile {
  std::string name;
  std::string content;
};

struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::ordered_json report;
  std::vector<OutputFile> files;
};

// ---- orbit traces -------------------------------------------------------

struct OrbitRow {
  std::uint64_t step = 0;
  std::array<std::string, 3> coords;
  std::string phi;
  std::array<double, 3> approx{};
};

struct OrbitTrace {
  Backend backend = Backend::kInterval;
  std::vector<OrbitRow> rows;
  // Every step certified phi(V(p)) <= phi(p).
  bool phi_monotone = false;
  std::size_t bits = 0;
};

// The exact backend needs steps within the exact cap (Error(kExactBlowup)).
// The interval backend follows an OrbitTracker: exact rows while the
// denominators stay small, then lower endpoints of the enclosures.
OrbitTrace trace_orbit(const ExactPoint& start, std::uint64_t steps, Backend backend,
                       const EscalationPolicy& policy);
std::string orbit_csv(const OrbitTrace& trace);
// Barycentric projection with the x corner on top.
std::string orbit_svg(const OrbitTrace& trace);

// ---- property sweeps ----------------------------------------------------

struct SweepResult {
  std::string name;
  std::string eps;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  std::uint64_t undecided = 0;
  std::string detail;
};

struct PropsParams {
  std::vector<Rational> eps = {Rational(1, 20), Rational(1, 10)};
  std::uint64_t samples = 10000;
  std::uint64_t large_samples = 100000;
  std::uint64_t fvh_samples = 1000;
  Rational fvh_eps = Rational(3, 10);
  std::uint64_t fvh_cap = 10000;
  std::uint64_t skip_samples = 1000;
  Rational skip_eps = Rational(1, 10);
  std::uint64_t skip_D = 3;
  std::uint64_t seed = 1;
  std::size_t workers = default_workers();
  TrackerOptions options;
};

std::vector<SweepResult> verify_props(const PropsParams& params);
nlohmann::ordered_json sweep_to_json(const SweepResult& s);

// ---- root distribution versus sampling ----------------------------------

struct RptParams {
  Tournament tournament = Tournament::cycle3();
  unsigned d = 5;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  Rational tolerance = Rational(1, 100);
  std::size_t workers = default_workers();
};

struct RptReport {
  ExactPoint exact;
  // V^(d-1)(uniform), the alternative indexing; equals exact when d = 0.
  ExactPoint shifted;
  std::vector<std::uint64_t> counts;
  Rational tv;
  Rational tv_shifted;
  bool pass = false;
};

// Parses "cycle3", "pair" (1 beats 2), "transitive:N" or "code:N:C".
Tournament parse_tournament_spec(const std::string& spec);
RptReport run_rpt(const RptParams& params);

// ---- theorem demo -------------------------------------------------------

struct DemoParams {
  Rational delta = Rational(3, 10);
  std::size_t q = 1000;
  std::uint64_t window = 100;
  std::size_t picks = 6;
  // Explicit grid points replace the greedy pool when nonempty.
  std::vector<ExactPoint> points;
  std::uint64_t d_lo = 0;  // used with explicit points
  std::size_t cross_n = 30;
  std::uint64_t cross_d = 24;
  std::uint64_t cap = 100000;
  TrackerOptions options;
  std::size_t workers = default_workers();
};

struct DemoEntry {
  std::uint64_t d = 0;
  std::optional<std::size_t> witness;
  Interval best;
  bool meets = false;
};

struct CrossCheck {
  std::array<std::size_t, 3> sizes{};
  std::uint64_t max_d = 0;
  bool agree = false;
};

struct DemoTournament {
  ExactPoint point;
  std::array<std::size_t, 3> sizes{};
  // Largest out-degree inside part A; at most |A| - 1 + |B|.
  std::size_t a_outdeg_max = 0;
};

struct TheoremDemoReport {
  std::size_t n = 0;
  Rational delta;
  std::vector<DemoTournament> tournaments;
  std::uint64_t d0 = 0;
  std::uint64_t d_lo = 0;
  std::uint64_t d_hi = 0;
  std::vector<DemoEntry> entries;
  std::size_t meeting = 0;
  std::vector<CrossCheck> cross;
  bool sizes_ok = false;

  double fraction() const {
    return entries.empty() ? 0.0 : static_cast<double>(meeting) / entries.size();
  }
};

// Greedy mode: the pool is (k, k, q-2k)/q for 1 <= k <= delta q. The first
// pick is the grid point nearest (e/2, e/2, 1-e) with e = delta/2, d0 comes
// from its potential crossing (e/10)^3, and each later pick adds the most
// newly covered d in [d0, d0 + window], ties to the smaller k.
TheoremDemoReport theorem_demo(const DemoParams& params);

// Exact n-dimensional dynamics aggregated to parts versus the 3-dimensional
// spiral, d = 0..max_d, with a shared denominator.
bool cross_check_aggregation(const TripartiteTournament& t, std::uint64_t max_d);

nlohmann::ordered_json demo_to_json(const TheoremDemoReport& r);

// ---- commands -----------------------------------------------------------

CommandResult cmd_orbit(const RunConfig& config);
CommandResult cmd_plot(const RunConfig& config);
CommandResult cmd_verify_props(const RunConfig& config);
CommandResult cmd_rpt(const RunConfig& config);
CommandResult cmd_sixpoints(const RunConfig& config);
CommandResult cmd_theorem_demo(const RunConfig& config);

// Dispatches by name and maps errors to exit codes: undecided at the cap is
// 2, a cap or property failure 1, anything else 3.
CommandResult run_command(const std::string& name, const RunConfig& config);

// Writes the files and <name>_report.json into dir.
void write_outputs(const CommandResult& result, const std::string& name, const std::string& dir);

}  // namespace volterra

#endif  // VOLTERRA_EXPERIMENTS_HPP_
