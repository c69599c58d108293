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

#ifndef VOLTERRA_JSON_SCALAR_HPP_
#define VOLTERRA_JSON_SCALAR_HPP_

#include "json.hpp"
#include "volterra/interval.hpp"
#include "volterra/rational.hpp"
#include "volterra/simplex.hpp"

namespace volterra {

// {"num": "3", "den": "20"}
nlohmann::json scalar_to_json(const Rational& q);
// {"lo": "0x1.3333p-3", "hi": "0x1.3334p-3", "prec": 128}
nlohmann::json scalar_to_json(const Interval& v);

// Throws Error(kParse) on malformed input.
Rational rational_from_json(const nlohmann::json& j);
Interval interval_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const ExactPoint& p);
nlohmann::json point_to_json(const IntervalPoint& p);

}  // namespace volterra

#endif  // VOLTERRA_JSON_SCALAR_HPP_
