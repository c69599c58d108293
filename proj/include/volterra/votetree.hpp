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

#ifndef VOLTERRA_VOTETREE_HPP_
#define VOLTERRA_VOTETREE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "volterra/simplex.hpp"
#include "volterra/tournament.hpp"

namespace volterra {

// Counter-based hash used for all randomness: the output depends only on the
// two inputs, so any leaf of any sample can be generated independently.
std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter);

// Complete binary tree of height d whose 2^d leaves carry candidate labels.
// Labels are either stored or derived on demand from a seed.
class VotingTree {
 public:
  static constexpr unsigned kMaxDepth = 62;

  // Labels are 0-based. Throws Error(kPrecondition) if the length is not 2^d
  // and Error(kIndexOutOfRange) for a label >= n.
  static VotingTree from_labels(unsigned d, std::size_t n, std::vector<std::size_t> labels);
  // Leaf i gets label mix64(seed, i) reduced to [0, n).
  static VotingTree lazy(unsigned d, std::size_t n, std::uint64_t seed);

  unsigned depth() const { return d_; }
  std::size_t n() const { return n_; }
  std::uint64_t leaf_count() const { return std::uint64_t{1} << d_; }
  bool materialized() const { return labels_.has_value(); }
  std::optional<std::uint64_t> seed() const { return seed_; }
  std::size_t label(std::uint64_t leaf) const;
  std::vector<std::size_t> labels() const;

 private:
  unsigned d_ = 0;
  std::size_t n_ = 1;
  std::optional<std::vector<std::size_t>> labels_;
  std::optional<std::uint64_t> seed_;
};

// d-RPT: labels i.i.d. uniform on [n]. Deterministic in the seed.
VotingTree sample_rpt(unsigned d, std::size_t n, std::uint64_t seed);

// Plays the tree out leaf by leaf with at most d + 1 pending winners.
// Throws Error(kUniverseMismatch) if tree.n() != t.n().
std::size_t evaluate(const VotingTree& tree, const Tournament& t);

struct GuaranteeReport {
  std::size_t value = 0;
  Tournament witness;
  std::uint64_t witness_code = 0;
};

// Exact minimum winner out-degree over all tournaments on n vertices; ties
// go to the smallest tournament code. Throws Error(kTooLarge).
GuaranteeReport guarantee(const VotingTree& tree, std::size_t cap = kDefaultEnumerationCap,
                          std::size_t workers = 1);

inline constexpr std::uint64_t kDefaultLeafBudget = std::uint64_t{1} << 36;

// Winner counts of `samples` independent d-RPTs on t. Sample s uses seed
// mix64(seed, s). Throws Error(kBudgetExceeded) when 2^d * samples exceeds
// the leaf budget.
std::vector<std::uint64_t> mc_winner_counts(unsigned d, const Tournament& t,
                                            std::uint64_t samples, std::uint64_t seed,
                                            std::uint64_t budget = kDefaultLeafBudget,
                                            std::size_t workers = 1);
// Same, normalized to an exact empirical distribution.
ExactPoint mc_winner_distribution(unsigned d, std::size_t n, const Tournament& t,
                                  std::uint64_t samples, std::uint64_t seed,
                                  std::uint64_t budget = kDefaultLeafBudget,
                                  std::size_t workers = 1);

std::vector<GuaranteeReport> guarantee_samples(unsigned d, std::size_t n,
                                               std::size_t tree_count, std::uint64_t seed,
                                               std::size_t cap = kDefaultEnumerationCap,
                                               std::size_t workers = 1);

// {"d", "n", "labels"} with 1-based labels, or {"d", "n", "seed"} for lazy
// trees.
nlohmann::json tree_to_json(const VotingTree& tree);
VotingTree tree_from_json(const nlohmann::json& j);

}  // namespace volterra

#endif  // VOLTERRA_VOTETREE_HPP_
