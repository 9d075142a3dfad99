/*
 * Copyright 2026 The qsplit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QSPLIT_SERIALIZATION_HPP
#define QSPLIT_SERIALIZATION_HPP

#include <json.hpp>

#include "qsplit/extension.hpp"
#include "qsplit/oracle.hpp"

namespace qsplit {

using Json = nlohmann::json;

// Elements are arrays of m*n integers in [0,p); polynomials are arrays of
// element arrays indexed by degree; a field context is {"p","m","n","modulus"}.
// Parsing is strict: unknown keys and malformed shapes raise InvalidInputError.

Json element_to_json(const FFElement& a);
FFElement element_from_json(const FieldCtx& ctx, const Json& j);

Json ctx_to_json(const FieldCtx& ctx);
FieldCtx ctx_from_json(const Json& j);

Json poly_to_json(const Poly& f);
Poly poly_from_json(const FieldCtx& ctx, const Json& j);

Json spec_to_json(const ExtensionSpec& spec);
ExtensionSpec spec_from_json(const Json& j);

Json place_to_json(const PlaceId& place);
Json report_to_json(const ExtensionReport& report);
Json oracle_to_json(const OracleCount& oracle);
Json verify_to_json(const VerifyResult& result);
Json orbits_to_json(const std::vector<std::vector<FFElement>>& orbits);
Json tower_report_to_json(const TowerReport& report);
Json tower_steps_to_json(const std::vector<TowerStep>& steps);

// deterministic text renderings of the same data
std::string report_to_text(const ExtensionReport& report, const FieldCtx& ctx);
std::string oracle_to_text(const OracleCount& oracle);
std::string verify_to_text(const VerifyResult& result);
std::string orbits_to_text(const std::vector<std::vector<FFElement>>& orbits, const FieldCtx& ctx);
std::string tower_report_to_text(const TowerReport& report, const FieldCtx& ctx);

} // namespace qsplit

#endif // QSPLIT_SERIALIZATION_HPP
