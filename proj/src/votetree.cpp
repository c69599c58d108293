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

#include "volterra/votetree.hpp"

#include <array>
#include <limits>
#include <string>

#include "volterra/error.hpp"
#include "volterra/parallel.hpp"

namespace volterra {

std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
  // SplitMix64 finalizer applied twice, keyed by seed.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  z += seed ^ 0xD1B54A32D192ED03ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::size_t reduce(std::uint64_t h, std::size_t n) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(h) * n) >> 64);
}

void check_shape(unsigned d, std::size_t n) {
  if (d > VotingTree::kMaxDepth) {
    throw Error(ErrorCode::kPrecondition, "tree depth " + std::to_string(d) + " too large");
  }
  if (n == 0) throw Error(ErrorCode::kPrecondition, "empty candidate universe");
}

}  // namespace

VotingTree VotingTree::from_labels(unsigned d, std::size_t n, std::vector<std::size_t> labels) {
  check_shape(d, n);
  if (labels.size() != (std::uint64_t{1} << d)) {
    throw Error(ErrorCode::kPrecondition, "expected " + std::to_string(std::uint64_t{1} << d) +
                                              " labels, got " + std::to_string(labels.size()));
  }
  for (std::size_t l : labels) {
    if (l >= n) throw Error(ErrorCode::kIndexOutOfRange, "label " + std::to_string(l + 1));
  }
  VotingTree t;
  t.d_ = d;
  t.n_ = n;
  t.labels_ = std::move(labels);
  return t;
}

VotingTree VotingTree::lazy(unsigned d, std::size_t n, std::uint64_t seed) {
  check_shape(d, n);
  VotingTree t;
  t.d_ = d;
  t.n_ = n;
  t.seed_ = seed;
  return t;
}

std::size_t VotingTree::label(std::uint64_t leaf) const {
  if (labels_) return (*labels_)[leaf];
  return reduce(mix64(*seed_, leaf), n_);
}

std::vector<std::size_t> VotingTree::labels() const {
  if (labels_) return *labels_;
  std::vector<std::size_t> out(leaf_count());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = label(i);
  return out;
}

VotingTree sample_rpt(unsigned d, std::size_t n, std::uint64_t seed) {
  return VotingTree::lazy(d, n, seed);
}

namespace {

template <typename LabelFn>
std::size_t play(unsigned d, const Tournament& t, LabelFn&& label) {
  std::array<std::size_t, VotingTree::kMaxDepth + 1> winner{};
  std::array<unsigned, VotingTree::kMaxDepth + 1> level{};
  std::size_t top = 0;
  std::uint64_t leaves = std::uint64_t{1} << d;
  for (std::uint64_t leaf = 0; leaf < leaves; ++leaf) {
    std::size_t w = label(leaf);
    unsigned lv = 0;
    while (top > 0 && level[top - 1] == lv) {
      std::size_t other = winner[--top];
      if (other != w && t.beats(other, w)) w = other;
      ++lv;
    }
    winner[top] = w;
    level[top] = lv;
    ++top;
  }
  return winner[0];
}

}  // namespace

std::size_t evaluate(const VotingTree& tree, const Tournament& t) {
  if (tree.n() != t.n()) {
    throw Error(ErrorCode::kUniverseMismatch, "tree over " + std::to_string(tree.n()) +
                                                  " candidates, tournament over " +
                                                  std::to_string(t.n()));
  }
  return play(tree.depth(), t, [&](std::uint64_t leaf) { return tree.label(leaf); });
}

GuaranteeReport guarantee(const VotingTree& tree, std::size_t cap, std::size_t workers) {
  TournamentSpace space(tree.n(), cap);
  std::vector<std::size_t> labels = tree.labels();
  struct Best {
    std::size_t value = std::numeric_limits<std::size_t>::max();
    std::uint64_t code = 0;
  };
  std::vector<Best> best(std::max<std::size_t>(workers, 1));
  parallel_ranges(space.size(), workers,
                  [&](std::uint64_t begin, std::uint64_t end, std::size_t slot) {
                    Best b;
                    for (std::uint64_t code = begin; code < end; ++code) {
                      Tournament t = space.at(code);
                      std::size_t w = play(tree.depth(), t,
                                           [&](std::uint64_t leaf) { return labels[leaf]; });
                      std::size_t od = t.outdeg(w);
                      if (od < b.value) {
                        b.value = od;
                        b.code = code;
                        if (od == 0) break;
                      }
                    }
                    best[slot] = b;
                  });
  Best overall;
  for (const Best& b : best) {
    if (b.value < overall.value) overall = b;
  }
  GuaranteeReport r;
  r.value = overall.value;
  r.witness_code = overall.code;
  r.witness = space.at(overall.code);
  return r;
}

std::vector<std::uint64_t> mc_winner_counts(unsigned d, const Tournament& t,
                                            std::uint64_t samples, std::uint64_t seed,
                                            std::uint64_t budget, std::size_t workers) {
  check_shape(d, t.n());
  std::uint64_t leaves = std::uint64_t{1} << d;
  if (samples != 0 && leaves > budget / samples) {
    throw Error(ErrorCode::kBudgetExceeded, std::to_string(samples) + " samples of 2^" +
                                                std::to_string(d) + " leaves exceed budget " +
                                                std::to_string(budget));
  }
  std::size_t n = t.n();
  std::size_t slots = std::max<std::size_t>(workers, 1);
  std::vector<std::vector<std::uint64_t>> partial(slots, std::vector<std::uint64_t>(n, 0));
  parallel_ranges(samples, workers,
                  [&](std::uint64_t begin, std::uint64_t end, std::size_t slot) {
                    auto& counts = partial[slot];
                    for (std::uint64_t s = begin; s < end; ++s) {
                      std::uint64_t tree_seed = mix64(seed, s);
                      ++counts[play(d, t, [&](std::uint64_t leaf) {
                        return reduce(mix64(tree_seed, leaf), n);
                      })];
                    }
                  });
  std::vector<std::uint64_t> counts(n, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < n; ++i) counts[i] += p[i];
  }
  return counts;
}

ExactPoint mc_winner_distribution(unsigned d, std::size_t n, const Tournament& t,
                                  std::uint64_t samples, std::uint64_t seed,
                                  std::uint64_t budget, std::size_t workers) {
  if (n != t.n()) throw Error(ErrorCode::kUniverseMismatch, "distribution dimension");
  if (samples == 0) throw Error(ErrorCode::kPrecondition, "zero samples");
  std::vector<std::uint64_t> counts = mc_winner_counts(d, t, samples, seed, budget, workers);
  std::vector<Rational> freq;
  freq.reserve(n);
  mpz_class total;
  mpz_set_ui(total.get_mpz_t(), samples);
  for (std::uint64_t c : counts) {
    mpz_class num;
    mpz_set_ui(num.get_mpz_t(), c);
    freq.push_back(make_rational(num, total));
  }
  return ExactPoint::unchecked(std::move(freq));
}

std::vector<GuaranteeReport> guarantee_samples(unsigned d, std::size_t n,
                                               std::size_t tree_count, std::uint64_t seed,
                                               std::size_t cap, std::size_t workers) {
  TournamentSpace check(n, cap);
  std::vector<GuaranteeReport> out;
  out.reserve(tree_count);
  for (std::size_t k = 0; k < tree_count; ++k) {
    VotingTree tree = VotingTree::from_labels(d, n, sample_rpt(d, n, mix64(seed, k)).labels());
    out.push_back(guarantee(tree, cap, workers));
  }
  return out;
}

nlohmann::json tree_to_json(const VotingTree& tree) {
  nlohmann::json j = {{"d", tree.depth()}, {"n", tree.n()}};
  if (tree.materialized()) {
    nlohmann::json labels = nlohmann::json::array();
    for (std::size_t l : tree.labels()) labels.push_back(l + 1);
    j["labels"] = labels;
  } else {
    j["seed"] = std::to_string(*tree.seed());
  }
  return j;
}

VotingTree tree_from_json(const nlohmann::json& j) {
  try {
    unsigned d = j.at("d").get<unsigned>();
    std::size_t n = j.at("n").get<std::size_t>();
    if (j.contains("labels")) {
      std::vector<std::size_t> labels;
      for (const auto& l : j.at("labels")) {
        long v = l.get<long>();
        if (v < 1) throw Error(ErrorCode::kIndexOutOfRange, "labels are 1-based");
        labels.push_back(static_cast<std::size_t>(v - 1));
      }
      return VotingTree::from_labels(d, n, std::move(labels));
    }
    std::uint64_t seed = std::stoull(j.at("seed").get<std::string>());
    return VotingTree::lazy(d, n, seed);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParse, std::string("tree JSON: ") + e.what());
  }
}

}  // namespace volterra
