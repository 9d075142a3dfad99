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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsplit/oracle.hpp"

using namespace qsplit;

namespace {

ExtensionSpec as_spec(const FieldCtx& K, const Poly& h, const Poly& g, bool qs) {
    return ExtensionSpec{ExtensionSpec::Kind::artin_schreier, K, LinearizedLhs::full_trace(),
                         std::nullopt, h, g, qs};
}

ExtensionSpec kummer_spec(const FieldCtx& K, std::optional<Int> d, const Poly& h, const Poly& g) {
    return ExtensionSpec{ExtensionSpec::Kind::kummer, K, LinearizedLhs::full_trace(), d, h, g,
                         false};
}

} // namespace

TEST_CASE("solution counts for linearized operators") {
    FieldCtx f25(5, 1, 2);
    LinearizedLhs full = LinearizedLhs::full_trace();
    CHECK(count_lhs_solutions(f25, full, f25.zero()) == 5); // kernel of the trace
    CHECK(count_lhs_solutions(f25, full, f25.from_value(5)) == 0); // u is not a trace value

    FieldCtx f4(2, 1, 2);
    LinearizedLhs step = LinearizedLhs::p_step(f4, f4.one()); // T^2 + T
    CHECK(count_lhs_solutions(f4, step, f4.one()) == 2); // roots of y^2+y+1

    // counts partition the field
    Int total = 0;
    for (Int v = 0; v < f25.order(); ++v)
        total += count_lhs_solutions(f25, full, f25.from_value(v));
    CHECK(total == 25);
}

TEST_CASE("solution counts for power maps") {
    FieldCtx f9(3, 1, 2);
    CHECK(count_kummer_solutions(f9, 4, f9.one()) == 4);
    CHECK(count_kummer_solutions(f9, 4, f9.zero()) == 1);
    CHECK(count_kummer_solutions(f9, 4, f9.from_int(2)) == 4); // 2^2 = 1 in F_9

    // closed form: d solutions iff c^((q^n-1)/d) = 1, else 0
    for (Int v = 1; v < f9.order(); ++v) {
        FFElement c = f9.from_value(v);
        Int expect = f9.pow(c, 2) == f9.one() ? 4 : 0;
        CHECK(count_kummer_solutions(f9, 4, c) == expect);
    }

    // partition of the domain of y -> y^d
    Int total = 0;
    for (Int v = 0; v < f9.order(); ++v)
        total += count_kummer_solutions(f9, 4, f9.from_value(v));
    CHECK(total == 9);
}

TEST_CASE("brute force counts for the golden extensions") {
    // all-split q=5 example: 130
    FieldCtx f25(5, 1, 2);
    Poly h6 = Poly::monomial(f25, 6, f25.one());
    Poly gden = Poly::from_ints(f25, {3, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1});
    OracleCount c1 = brute_force_count(as_spec(f25, h6, gden, true));
    CHECK(c1.total_degree1 == 130);
    CHECK(c1.infinity_count.has_value());
    CHECK(*c1.infinity_count == 5);

    // Hermitian: 125 affine, infinity delegated
    OracleCount c2 = brute_force_count(as_spec(f25, h6, Poly::constant(f25, f25.one()), true));
    CHECK_FALSE(c2.infinity_count.has_value());
    CHECK(c2.total_degree1 == 125);

    // Example 4.2 at q=2: 32 affine, infinity delegated
    FieldCtx f8(2, 1, 3);
    Poly fam = Poly::monomial(f8, 3, f8.one()) + Poly::monomial(f8, 6, f8.one()) +
               Poly::monomial(f8, 5, f8.one());
    OracleCount c3 = brute_force_count(as_spec(f8, fam, Poly::constant(f8, f8.one()), true));
    CHECK(c3.total_degree1 == 32);
    CHECK_FALSE(c3.infinity_count.has_value());

    // Kummer final example: 36 affine, infinity delegated
    FieldCtx f9(3, 1, 2);
    Poly h8 = Poly::monomial(f9, 8, f9.one()) + Poly::constant(f9, f9.one());
    OracleCount c4 = brute_force_count(kummer_spec(f9, std::nullopt, h8,
                                                   Poly::constant(f9, f9.one())));
    CHECK(c4.total_degree1 == 36);
    CHECK_FALSE(c4.infinity_count.has_value());
}

TEST_CASE("verify_report on the golden extensions") {
    FieldCtx f25(5, 1, 2);
    Poly h6 = Poly::monomial(f25, 6, f25.one());
    Poly gden = Poly::from_ints(f25, {3, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1});
    ExtensionSpec spec = as_spec(f25, h6, gden, true);
    ExtensionReport rep = analyze(spec);
    OracleCount oracle = brute_force_count(spec);
    VerifyResult res = verify_report(rep, oracle, spec);
    CHECK(res.verified);
    CHECK(res.combined_total == 130);
    CHECK(res.delegated.empty());

    // Hermitian: infinity is delegated, totals still reconcile
    ExtensionSpec herm = as_spec(f25, h6, Poly::constant(f25, f25.one()), true);
    ExtensionReport hrep = analyze(herm);
    OracleCount horacle = brute_force_count(herm);
    VerifyResult hres = verify_report(hrep, horacle, herm);
    CHECK(hres.verified);
    CHECK(hres.combined_total == 126);
    REQUIRE(hres.delegated.size() == 1);
    CHECK(hres.delegated[0] == "infinity");
}

TEST_CASE("verify_report flags a fudged verdict") {
    FieldCtx f25(5, 1, 2);
    Poly h6 = Poly::monomial(f25, 6, f25.one());
    ExtensionSpec spec = as_spec(f25, h6, Poly::constant(f25, f25.one()), true);
    ExtensionReport rep = analyze(spec);
    OracleCount oracle = brute_force_count(spec);
    // corrupt one rational split verdict
    for (PlaceVerdict& v : rep.verdicts) {
        if (!v.place.at_infinity && v.place.degree == 1 &&
            v.status == PlaceStatus::splits_completely) {
            v.places_above_degree1 = 0;
            v.status = PlaceStatus::unramified_nonsplit;
            break;
        }
    }
    VerifyResult res = verify_report(rep, oracle, spec);
    CHECK_FALSE(res.verified);
    REQUIRE_FALSE(res.mismatches.empty());
    CHECK(res.mismatches[0].place.find("alpha") != std::string::npos);
}

TEST_CASE("theorem 4.3 family totals: zero-free qs denominators split everything") {
    // (q, n) = (2, 2): g reduces to the constant function 1
    FieldCtx f4(2, 1, 2);
    Poly g4 = Poly::from_ints(f4, {1, 1, 0, 0, 1}); // t^4 + t + 1
    ExtensionSpec s4 = as_spec(f4, Poly::constant(f4, f4.one()), g4, true);
    OracleCount c4 = brute_force_count(s4);
    CHECK(c4.total_degree1 == 2 * (4 + 1));

    // (q, n) = (3, 2)
    FieldCtx f9(3, 1, 2);
    Poly g9 = Poly::from_ints(f9, {1, 0, 1, 0, 2, 0, 1}); // (t^3+t)^2 + 1
    ExtensionSpec s9 = as_spec(f9, Poly::constant(f9, f9.one()), g9, true);
    CHECK(brute_force_count(s9).total_degree1 == 3 * (9 + 1));

    // (q, n) = (2, 3)
    FieldCtx f8(2, 1, 3);
    Poly g8 = Poly::from_ints(f8, {1, 1, 0, 0, 0, 0, 0, 0, 1}); // t^8 + t + 1
    ExtensionSpec s8 = as_spec(f8, Poly::constant(f8, f8.one()), g8, true);
    CHECK(brute_force_count(s8).total_degree1 == 4 * (8 + 1));
}

TEST_CASE("oracle abstains at Kummer zeros of h") {
    FieldCtx f9(3, 1, 2);
    // y^4 = x^4 * (x^2 + 1): h has rational zeros with multiplicity 4
    Poly h = poly_pow(Poly::x(f9), 4) * Poly::from_ints(f9, {1, 0, 1});
    ExtensionSpec spec = kummer_spec(f9, 4, h, Poly::constant(f9, f9.one()));
    OracleCount oracle = brute_force_count(spec);
    CHECK(oracle.per_alpha[0] == -1); // x = 0 is a singular affine point
}

TEST_CASE("size guard") {
    FieldCtx K(2, 1, 10); // 1024 elements
    Poly h = Poly::monomial(K, 3, K.one());
    ExtensionSpec spec = as_spec(K, h, Poly::constant(K, K.one()), false);
    CHECK_THROWS_AS(brute_force_count(spec, 512), SizeGuardError);
}
