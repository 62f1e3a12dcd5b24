/*
   Copyright 2026 The idealab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IDEALAB_JSON_IO_HPP
#define IDEALAB_JSON_IO_HPP

#include <json.hpp>

#include "idealab/poly.hpp"
#include "idealab/varieties.hpp"

namespace idealab {

/// {"vars": [...], "domain": "q", "terms": [{"exps": [..], "coeff": "3/2"}]},
/// terms in descending lex order.
nlohmann::json to_json(const Polynomial& f);
/// Inverse of to_json. Throws SyntaxError on schema violations.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// A point as an array of integer strings.
nlohmann::json to_json(const Point& x);
nlohmann::json to_json(const PointSet& x);

}  // namespace idealab

#endif
