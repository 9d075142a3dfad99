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

#ifndef QSPLIT_ORACLE_HPP
#define QSPLIT_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsplit/extension.hpp"

namespace qsplit {

/// Brute-force solution counts, independent of the analysis theory: the
/// counting loops enumerate field elements and test the defining equation
/// directly.
struct OracleCount {
    /// per_alpha[v] = number of y with equation satisfied at alpha =
    /// from_value(v); -1 where the oracle abstains (poles of h/g, and
    /// zeros of h for Kummer specs, where affine solution counts are not
    /// place counts).
    std::vector<Int> per_alpha;
    /// Count above infinity via the substitution x -> 1/x when v_inf >= 0;
    /// absent (delegated to analysis) when v_inf < 0.
    std::optional<Int> infinity_count;
    /// Sum of all counted entries (abstentions excluded).
    Int total_degree1 = 0;
};

/// Number of y in F_{q^n} with l(y) = c, by exhaustive enumeration.
Int count_lhs_solutions(const FieldCtx& ctx, const LinearizedLhs& lhs, const FFElement& c);

/// Number of y in F_{q^n} with y^d = c, by exhaustive enumeration.
Int count_kummer_solutions(const FieldCtx& ctx, Int d, const FFElement& c);

OracleCount brute_force_count(const ExtensionSpec& spec, Int size_guard = kDefaultSizeGuard);

struct VerifyMismatch {
    std::string place; // rendered place name
    Int analysis = 0;
    Int oracle = 0;
};

struct VerifyResult {
    bool verified = false;
    std::vector<VerifyMismatch> mismatches;
    /// places where the oracle abstained and the analysis value was accepted
    std::vector<std::string> delegated;
    Int analysis_total = 0;
    Int combined_total = 0; // oracle counts plus analysis values at delegated places
};

/// Compares per-rational-place degree-1 counts and the totals. The oracle is
/// authoritative wherever it counted; abstentions fall back to the analysis
/// verdict and are listed.
VerifyResult verify_report(const ExtensionReport& report, const OracleCount& oracle,
                           const ExtensionSpec& spec);

} // namespace qsplit

#endif // QSPLIT_ORACLE_HPP
