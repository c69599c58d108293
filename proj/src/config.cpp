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

#include "volterra/config.hpp"

#include <fstream>
#include <sstream>

#include "volterra/error.hpp"

namespace volterra {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::kParse, key + ": expected a nonnegative integer, got '" + v + "'");
  }
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, key + ": integer out of range");
  }
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::kExact ? "exact" : "interval"; }

std::string RunConfig::str(const std::string& key, const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

std::uint64_t RunConfig::u64(const std::string& key, std::uint64_t fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : parse_u64(key, it->second);
}

Rational RunConfig::rational(const std::string& key, const Rational& fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    return parse_rational(it->second);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, key + ": " + e.what());
  }
}

bool RunConfig::flag(const std::string& key, bool fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  if (it->second == "true" || it->second == "1" || it->second == "yes") return true;
  if (it->second == "false" || it->second == "0" || it->second == "no") return false;
  throw Error(ErrorCode::kParse, key + ": expected true or false");
}

std::vector<Rational> RunConfig::rationals(const std::string& key) const {
  std::vector<Rational> out;
  auto it = values.find(key);
  if (it == values.end()) return out;
  for (const std::string& part : split(it->second, ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, key + ": " + e.what());
    }
  }
  return out;
}

ExactPoint RunConfig::point(const std::string& key, const ExactPoint& fallback) const {
  if (!has(key)) return fallback;
  std::vector<Rational> c = rationals(key);
  if (c.size() != 3) throw Error(ErrorCode::kParse, key + ": expected three coordinates");
  return make_simplex(c);
}

std::vector<ExactPoint> RunConfig::points(const std::string& key) const {
  std::vector<ExactPoint> out;
  auto it = values.find(key);
  if (it == values.end()) return out;
  for (const std::string& part : split(it->second, ';')) {
    if (part.empty()) continue;
    std::vector<Rational> c;
    for (const std::string& x : split(part, ',')) c.push_back(parse_rational(x));
    if (c.size() != 3) throw Error(ErrorCode::kParse, key + ": expected three coordinates per point");
    out.push_back(make_simplex(c));
  }
  return out;
}

void RunConfig::check_keys(const std::set<std::string>& known) const {
  static const std::set<std::string> reserved = {"seed", "backend", "precision_start",
                                                 "precision_cap", "out"};
  for (const auto& [k, v] : values) {
    if (!known.count(k) && !reserved.count(k)) {
      throw Error(ErrorCode::kParse, "unknown config key '" + k + "'");
    }
  }
}

void apply_reserved(RunConfig& c) {
  c.seed = c.u64("seed", c.seed);
  if (c.has("backend")) {
    std::string b = c.str("backend", "");
    if (b == "exact") {
      c.backend = Backend::kExact;
    } else if (b == "interval") {
      c.backend = Backend::kInterval;
    } else {
      throw Error(ErrorCode::kParse, "backend must be exact or interval, got '" + b + "'");
    }
  }
  c.policy.start_bits = c.u64("precision_start", c.policy.start_bits);
  c.policy.cap_bits = c.u64("precision_cap", c.policy.cap_bits);
  c.out_dir = c.str("out", c.out_dir);
  try {
    c.policy.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": empty key");
    if (c.values.count(key)) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    c.values[key] = value;
  }
  apply_reserved(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace volterra
