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

#include "qsplit/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qsplit {

Int count_lhs_solutions(const FieldCtx& ctx, const LinearizedLhs& lhs, const FFElement& c) {
    Int count = 0;
    for (Int v = 0; v < ctx.order(); ++v)
        if (lhs.apply(ctx, ctx.from_value(v)) == c) ++count;
    return count;
}

Int count_kummer_solutions(const FieldCtx& ctx, Int d, const FFElement& c) {
    Int count = 0;
    for (Int v = 0; v < ctx.order(); ++v)
        if (ctx.pow(ctx.from_value(v), d) == c) ++count;
    return count;
}

namespace {

std::string render_place_name(const FieldCtx& ctx, const PlaceId& place) {
    if (place.at_infinity) return "infinity";
    if (place.degree == 1) {
        FFElement alpha = ctx.neg(place.prime->coeff(0));
        std::ostringstream os;
        os << "x - alpha, alpha value " << ctx.value_of(alpha);
        return os.str();
    }
    std::ostringstream os;
    os << "finite place of degree " << place.degree;
    return os.str();
}

} // namespace

OracleCount brute_force_count(const ExtensionSpec& spec, Int size_guard) {
    const FieldCtx& K = spec.ctx;
    Int Q = K.order();
    if (Q > size_guard) throw SizeGuardError("field too large for the brute-force oracle");

    // one full enumeration of y builds the solution-count table for all c
    std::vector<Int> table(static_cast<std::size_t>(Q), 0);
    if (spec.kind == ExtensionSpec::Kind::artin_schreier) {
        for (Int v = 0; v < Q; ++v) {
            FFElement image = spec.lhs.apply(K, K.from_value(v));
            ++table[static_cast<std::size_t>(K.value_of(image))];
        }
    } else {
        Int d = spec.kummer_d.value_or((Q - 1) / (K.q() - 1));
        for (Int v = 0; v < Q; ++v) {
            FFElement image = K.pow(K.from_value(v), d);
            ++table[static_cast<std::size_t>(K.value_of(image))];
        }
    }

    bool kummer = spec.kind == ExtensionSpec::Kind::kummer;
    OracleCount out;
    out.per_alpha.assign(static_cast<std::size_t>(Q), -1);
    Int total = 0;
    for (Int v = 0; v < Q; ++v) {
        FFElement alpha = K.from_value(v);
        FFElement ga = spec.g.eval(alpha);
        if (K.is_zero(ga)) continue; // pole: ramification site, analysis territory
        FFElement ha = spec.h.eval(alpha);
        if (kummer && K.is_zero(ha)) continue; // singular affine point for y^d = 0
        FFElement c = K.mul(ha, K.inv(ga));
        Int cnt = table[static_cast<std::size_t>(K.value_of(c))];
        out.per_alpha[static_cast<std::size_t>(v)] = cnt;
        total += cnt;
    }

    Int vinf = spec.g.degree() - spec.h.degree();
    if (vinf >= 0) {
        // substitute x -> 1/X and clear denominators: h/g = H(X)/G(X) with
        // H(X) = X^D h(1/X), G(X) = X^D g(1/X), D = max degree; the point at
        // infinity is X = 0 and G(0) = lc(g) != 0 exactly when v_inf >= 0
        Int D = std::max(spec.h.degree(), spec.g.degree());
        auto reversed = [&](const Poly& f) {
            std::vector<FFElement> v(static_cast<std::size_t>(D) + 1, K.zero());
            for (Int e = 0; e <= f.degree(); ++e)
                v[static_cast<std::size_t>(D - e)] = f.coeff(e);
            return Poly(K, std::move(v));
        };
        FFElement numer = reversed(spec.h).eval(K.zero());
        FFElement denom = reversed(spec.g).eval(K.zero());
        FFElement c = K.mul(numer, K.inv(denom));
        Int cnt = table[static_cast<std::size_t>(K.value_of(c))];
        out.infinity_count = cnt;
        total += cnt;
    }
    out.total_degree1 = total;
    return out;
}

VerifyResult verify_report(const ExtensionReport& report, const OracleCount& oracle,
                           const ExtensionSpec& spec) {
    const FieldCtx& K = spec.ctx;
    VerifyResult res;
    Int combined = 0;

    for (const PlaceVerdict& v : report.verdicts) {
        if (v.place.degree != 1) continue;
        if (v.place.at_infinity) {
            if (oracle.infinity_count.has_value()) {
                combined += *oracle.infinity_count;
                if (*oracle.infinity_count != v.places_above_degree1)
                    res.mismatches.push_back(
                        {render_place_name(K, v.place), v.places_above_degree1,
                         *oracle.infinity_count});
            } else {
                combined += v.places_above_degree1;
                res.delegated.push_back(render_place_name(K, v.place));
            }
            continue;
        }
        FFElement alpha = K.neg(v.place.prime->coeff(0));
        Int idx = K.value_of(alpha);
        Int counted = oracle.per_alpha[static_cast<std::size_t>(idx)];
        if (counted >= 0) {
            combined += counted;
            if (counted != v.places_above_degree1)
                res.mismatches.push_back(
                    {render_place_name(K, v.place), v.places_above_degree1, counted});
        } else {
            combined += v.places_above_degree1;
            res.delegated.push_back(render_place_name(K, v.place));
        }
    }

    res.analysis_total = report.n_rational;
    res.combined_total = combined;
    if (report.counts_complete && combined != report.n_rational)
        res.mismatches.push_back({"total", report.n_rational, combined});
    res.verified = res.mismatches.empty();
    return res;
}

} // namespace qsplit
