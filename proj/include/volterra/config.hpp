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

#ifndef VOLTERRA_CONFIG_HPP_
#define VOLTERRA_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "volterra/rational.hpp"
#include "volterra/simplex.hpp"
#include "volterra/verdict.hpp"

namespace volterra {

enum class Backend { kExact, kInterval };

// Everything a subcommand reads. Values stay as text until a command asks
// for them with a type; bad values raise Error(kParse).
struct RunConfig {
  std::map<std::string, std::string> values;
  std::uint64_t seed = 1;
  Backend backend = Backend::kInterval;
  EscalationPolicy policy;
  std::string out_dir = ".";

  bool has(const std::string& key) const { return values.count(key) != 0; }
  std::string str(const std::string& key, const std::string& fallback) const;
  std::uint64_t u64(const std::string& key, std::uint64_t fallback) const;
  Rational rational(const std::string& key, const Rational& fallback) const;
  bool flag(const std::string& key, bool fallback) const;
  // Comma-separated rationals.
  std::vector<Rational> rationals(const std::string& key) const;
  // "x, y, z" on the simplex.
  ExactPoint point(const std::string& key, const ExactPoint& fallback) const;
  // Semicolon-separated points.
  std::vector<ExactPoint> points(const std::string& key) const;

  // Throws Error(kParse) naming the first key not in `known`.
  void check_keys(const std::set<std::string>& known) const;
};

// Flat "key = value" text; '#' starts a comment. The reserved keys seed,
// backend, precision_start, precision_cap and out are lifted into the
// typed fields.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Re-reads the reserved keys after values were overridden.
void apply_reserved(RunConfig& config);

std::string_view backend_name(Backend b);

}  // namespace volterra

#endif  // VOLTERRA_CONFIG_HPP_
