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

#include "idealab/json_io.hpp"

namespace idealab {

using nlohmann::json;

json to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) terms.push_back({{"exps", t.exponents}, {"coeff", t.coeff.get_str()}});
    return {{"vars", f.ring()->variables()}, {"domain", f.domain().descriptor()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
    try {
        auto ring = make_ring(Domain::parse(j.at("domain").get<std::string>()), j.at("vars").get<std::vector<std::string>>());
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            const auto text = t.at("coeff").get<std::string>();
            mpq_class c(text);
            if (c.get_den() == 0) throw Error(ErrorKind::BadCoefficient, "zero denominator in coefficient '" + text + "'");
            c.canonicalize();
            auto exps = t.at("exps").get<Monomial>();
            if (exps.size() != ring->arity())
                throw Error(ErrorKind::SyntaxError, "exponent vector of length " + std::to_string(exps.size()) + " in a ring of " +
                                                        std::to_string(ring->arity()) + " variables");
            terms.push_back({std::move(exps), c});
        }
        return Polynomial::from_terms(ring, std::move(terms));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::SyntaxError, std::string("malformed polynomial JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorKind::BadCoefficient, std::string("malformed coefficient: ") + e.what());
    }
}

json to_json(const Point& x) {
    json out = json::array();
    for (auto c : x) out.push_back(std::to_string(c));
    return out;
}

json to_json(const PointSet& x) {
    json out = json::array();
    for (const auto& pt : x.points()) out.push_back(to_json(pt));
    return out;
}

}  // namespace idealab
