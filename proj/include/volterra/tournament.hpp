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

#ifndef VOLTERRA_TOURNAMENT_HPP_
#define VOLTERRA_TOURNAMENT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"

namespace volterra {

// Candidates are 0-based in the C++ API and 1-based in JSON.
struct Edge {
  std::size_t winner;
  std::size_t loser;
};

// Complete antisymmetric beat relation on n candidates, stored as a bit
// matrix (row i has bit j set iff i beats j).
class Tournament {
 public:
  Tournament() = default;

  // Exactly one orientation per unordered pair. Throws Error with kSelfLoop,
  // kIndexOutOfRange, kDuplicatePair or kMissingPair.
  static Tournament build(std::size_t n, const std::vector<Edge>& orientations);

  // Bit k of `code` orients the k-th pair in lexicographic order
  // (0,1), (0,2), ..., (n-2,n-1): 0 means the smaller index wins.
  static Tournament from_code(std::size_t n, std::uint64_t code);

  // i beats j whenever i < j.
  static Tournament transitive(std::size_t n);
  // 0 -> 1 -> 2 -> 0.
  static Tournament cycle3();

  std::size_t n() const { return n_; }
  bool beats(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  // Throws Error(kIndexOutOfRange).
  std::size_t outdeg(std::size_t i) const;
  std::vector<std::size_t> beaten_by(std::size_t i) const;
  std::vector<std::size_t> beaters_of(std::size_t i) const;
  std::vector<Edge> edges() const;

  // Relabels candidate i as perm[i].
  Tournament relabel(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  explicit Tournament(std::size_t n);
  void set(std::size_t winner, std::size_t loser);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Ordered parts: A beats B, B beats C, C beats A.
struct TripartitePartition {
  std::array<std::vector<std::size_t>, 3> parts;

  const std::vector<std::size_t>& a() const { return parts[0]; }
  const std::vector<std::size_t>& b() const { return parts[1]; }
  const std::vector<std::size_t>& c() const { return parts[2]; }
  std::array<std::size_t, 3> sizes() const {
    return {parts[0].size(), parts[1].size(), parts[2].size()};
  }
};

struct TripartiteTournament {
  Tournament tournament;
  TripartitePartition partition;
};

// Vertices 0..|A|-1 form A, the next |B| form B, the rest C. `intra` lists
// one orientation for every pair inside a part (global indices). Throws
// Error(kEmptyPart) or Error(kIncompleteIntra); malformed intra edges raise
// the same codes as Tournament::build.
TripartiteTournament build_tripartite(const std::array<std::size_t, 3>& sizes,
                                      const std::vector<Edge>& intra);

// Intra-part edges oriented transitively by index (lower index wins).
TripartiteTournament build_tripartite_transitive(const std::array<std::size_t, 3>& sizes);

// Throws Error(kBadPartition) unless p is a partition of [n] into nonempty
// parts.
void check_partition(const TripartitePartition& p, std::size_t n);
bool verify_tripartite(const Tournament& t, const TripartitePartition& p);

inline constexpr std::size_t kDefaultEnumerationCap = 7;

// All tournaments on n vertices, indexed by their code.
class TournamentSpace {
 public:
  // Throws Error(kTooLarge) if n > cap.
  explicit TournamentSpace(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

  std::size_t n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << pairs_; }
  Tournament at(std::uint64_t code) const { return Tournament::from_code(n_, code); }

 private:
  std::size_t n_;
  std::size_t pairs_;
};

nlohmann::json tournament_to_json(const Tournament& t);
// Throws Error(kParse) for malformed JSON and the build() errors otherwise.
Tournament tournament_from_json(const nlohmann::json& j);

}  // namespace volterra

#endif  // VOLTERRA_TOURNAMENT_HPP_
