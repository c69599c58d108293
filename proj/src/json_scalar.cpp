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

#include "volterra/json_scalar.hpp"

#include <stdexcept>
#include <string>

#include "volterra/error.hpp"

namespace volterra {

nlohmann::json scalar_to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

nlohmann::json scalar_to_json(const Interval& v) {
  return {{"lo", v.lo().to_hex()}, {"hi", v.hi().to_hex()}, {"prec", v.prec()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  try {
    mpz_class num(j.at("num").get<std::string>(), 10);
    mpz_class den(j.at("den").get<std::string>(), 10);
    return make_rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParse, std::string("rational JSON: ") + e.what());
  }
}

Interval interval_from_json(const nlohmann::json& j) {
  try {
    return Interval(BigFloat::from_hex(j.at("lo").get<std::string>()),
                    BigFloat::from_hex(j.at("hi").get<std::string>()),
                    j.at("prec").get<std::size_t>());
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParse, std::string("interval JSON: ") + e.what());
  }
}

nlohmann::json point_to_json(const ExactPoint& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rational& q : p.coords()) a.push_back(scalar_to_json(q));
  return a;
}

nlohmann::json point_to_json(const IntervalPoint& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const Interval& v : p.coords()) a.push_back(scalar_to_json(v));
  return a;
}

}  // namespace volterra
