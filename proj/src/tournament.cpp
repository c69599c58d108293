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

#include "volterra/tournament.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "volterra/error.hpp"

namespace volterra {

Tournament::Tournament(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void Tournament::set(std::size_t winner, std::size_t loser) {
  rows_[winner * words_ + loser / 64] |= std::uint64_t{1} << (loser % 64);
}

Tournament Tournament::build(std::size_t n, const std::vector<Edge>& orientations) {
  Tournament t(n);
  std::vector<std::uint8_t> seen(n * n, 0);
  for (const Edge& e : orientations) {
    if (e.winner >= n || e.loser >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge " + std::to_string(e.winner + 1) + "->" +
                      std::to_string(e.loser + 1) + " outside 1.." + std::to_string(n));
    }
    if (e.winner == e.loser) {
      throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(e.winner + 1));
    }
    std::size_t lo = std::min(e.winner, e.loser), hi = std::max(e.winner, e.loser);
    if (seen[lo * n + hi]) {
      throw Error(ErrorCode::kDuplicatePair, "pair {" + std::to_string(lo + 1) + "," +
                                                 std::to_string(hi + 1) + "}");
    }
    seen[lo * n + hi] = 1;
    t.set(e.winner, e.loser);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!seen[i * n + j]) {
        throw Error(ErrorCode::kMissingPair, "pair {" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + "}");
      }
    }
  }
  return t;
}

Tournament Tournament::from_code(std::size_t n, std::uint64_t code) {
  if (n * (n - (n > 0)) / 2 > 64) throw Error(ErrorCode::kTooLarge, "code too short");
  Tournament t(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if ((code >> k) & 1U) {
        t.set(j, i);
      } else {
        t.set(i, j);
      }
    }
  }
  return t;
}

Tournament Tournament::transitive(std::size_t n) {
  Tournament t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) t.set(i, j);
  }
  return t;
}

Tournament Tournament::cycle3() { return build(3, {{0, 1}, {1, 2}, {2, 0}}); }

std::size_t Tournament::outdeg(std::size_t i) const {
  if (i >= n_) throw Error(ErrorCode::kIndexOutOfRange, "candidate " + std::to_string(i + 1));
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(rows_[i * words_ + w]);
  return c;
}

std::vector<std::size_t> Tournament::beaten_by(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (beats(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> Tournament::beaters_of(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (beats(j, i)) out.push_back(j);
  }
  return out;
}

std::vector<Edge> Tournament::edges() const {
  std::vector<Edge> out;
  out.reserve(n_ * (n_ - (n_ > 0)) / 2);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      out.push_back(beats(i, j) ? Edge{i, j} : Edge{j, i});
    }
  }
  return out;
}

Tournament Tournament::relabel(const std::vector<std::size_t>& perm) const {
  Tournament t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && beats(i, j)) t.set(perm[i], perm[j]);
    }
  }
  return t;
}

namespace {

TripartitePartition consecutive_parts(const std::array<std::size_t, 3>& sizes) {
  TripartitePartition p;
  std::size_t v = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < sizes[k]; ++i) p.parts[k].push_back(v++);
  }
  return p;
}

void check_sizes(const std::array<std::size_t, 3>& sizes) {
  static const char* kNames[3] = {"A", "B", "C"};
  for (std::size_t k = 0; k < 3; ++k) {
    if (sizes[k] == 0) throw Error(ErrorCode::kEmptyPart, std::string("part ") + kNames[k]);
  }
}

}  // namespace

TripartiteTournament build_tripartite(const std::array<std::size_t, 3>& sizes,
                                      const std::vector<Edge>& intra) {
  check_sizes(sizes);
  TripartitePartition p = consecutive_parts(sizes);
  std::size_t n = sizes[0] + sizes[1] + sizes[2];
  std::vector<int> part_of(n);
  for (int k = 0; k < 3; ++k) {
    for (std::size_t v : p.parts[k]) part_of[v] = k;
  }
  std::vector<Edge> all;
  all.reserve(n * (n - 1) / 2);
  for (const Edge& e : intra) {
    if (e.winner < n && e.loser < n && part_of[e.winner] != part_of[e.loser]) {
      throw Error(ErrorCode::kIncompleteIntra,
                  "edge " + std::to_string(e.winner + 1) + "->" + std::to_string(e.loser + 1) +
                      " crosses parts");
    }
    all.push_back(e);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int pi = part_of[i], pj = part_of[j];
      if (pi == pj) continue;
      // Part k beats part k+1 (mod 3).
      if ((pi + 1) % 3 == pj) {
        all.push_back({i, j});
      } else {
        all.push_back({j, i});
      }
    }
  }
  try {
    return {Tournament::build(n, all), p};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMissingPair) {
      throw Error(ErrorCode::kIncompleteIntra, e.what());
    }
    throw;
  }
}

TripartiteTournament build_tripartite_transitive(const std::array<std::size_t, 3>& sizes) {
  check_sizes(sizes);
  TripartitePartition p = consecutive_parts(sizes);
  std::size_t n = sizes[0] + sizes[1] + sizes[2];
  std::vector<int> part_of(n);
  for (int k = 0; k < 3; ++k) {
    for (std::size_t v : p.parts[k]) part_of[v] = k;
  }
  // Transitive by index already has A -> B and B -> C; only C -> A is flipped.
  std::vector<Edge> all = Tournament::transitive(n).edges();
  for (Edge& e : all) {
    if (part_of[e.winner] == 0 && part_of[e.loser] == 2) std::swap(e.winner, e.loser);
  }
  return {Tournament::build(n, all), p};
}

void check_partition(const TripartitePartition& p, std::size_t n) {
  std::vector<std::uint8_t> seen(n, 0);
  std::size_t total = 0;
  for (const auto& part : p.parts) {
    if (part.empty()) throw Error(ErrorCode::kBadPartition, "empty part");
    for (std::size_t v : part) {
      if (v >= n) throw Error(ErrorCode::kBadPartition, "index outside [n]");
      if (seen[v]) throw Error(ErrorCode::kBadPartition, "parts overlap");
      seen[v] = 1;
      ++total;
    }
  }
  if (total != n) throw Error(ErrorCode::kBadPartition, "parts do not cover [n]");
}

bool verify_tripartite(const Tournament& t, const TripartitePartition& p) {
  check_partition(p, t.n());
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i : p.parts[k]) {
      for (std::size_t j : p.parts[(k + 1) % 3]) {
        if (!t.beats(i, j)) return false;
      }
    }
  }
  return true;
}

TournamentSpace::TournamentSpace(std::size_t n, std::size_t cap) : n_(n) {
  if (n > cap || n > 11) {
    throw Error(ErrorCode::kTooLarge,
                "n = " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  }
  pairs_ = n * (n - (n > 0)) / 2;
}

nlohmann::json tournament_to_json(const Tournament& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : t.edges()) edges.push_back({e.winner + 1, e.loser + 1});
  return {{"n", t.n()}, {"edges", edges}};
}

Tournament tournament_from_json(const nlohmann::json& j) {
  std::size_t n = 0;
  std::vector<Edge> edges;
  try {
    n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
      long w = e.at(0).get<long>(), l = e.at(1).get<long>();
      if (w < 1 || l < 1) throw Error(ErrorCode::kIndexOutOfRange, "candidates are 1-based");
      edges.push_back({static_cast<std::size_t>(w - 1), static_cast<std::size_t>(l - 1)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("tournament JSON: ") + e.what());
  }
  return Tournament::build(n, edges);
}

}  // namespace volterra
