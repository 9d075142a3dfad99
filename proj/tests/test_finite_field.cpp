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

#include "qsplit/finite_field.hpp"

using namespace qsplit;

TEST_CASE("deterministic modulus selection") {
    FieldCtx f25(5, 1, 2);
    CHECK(f25.modulus() == std::vector<Int>{2, 0, 1}); // u^2 + 2
    CHECK(f25.q() == 5);
    CHECK(f25.order() == 25);

    FieldCtx f8(2, 1, 3);
    CHECK(f8.modulus() == std::vector<Int>{1, 1, 0, 1}); // u^3 + u + 1

    // repeated construction is bit-identical
    FieldCtx f25b(5, 1, 2);
    CHECK(f25.modulus() == f25b.modulus());

    CHECK_THROWS_AS(FieldCtx(2, 1, 1), InvalidInputError); // n must exceed 1
    CHECK_THROWS_AS(FieldCtx(4, 1, 2), InvalidInputError); // p not prime
    CHECK_THROWS_AS(FieldCtx(2, 1, 40), InvalidInputError); // overflow
}

TEST_CASE("user-supplied modulus") {
    // u^2 + u + 1 is irreducible over F_5 as well
    FieldCtx f25(5, 1, 2, {1, 1, 1});
    CHECK(f25.order() == 25);
    CHECK_THROWS_AS(FieldCtx(5, 1, 2, {1, 0, 1}), InvalidInputError); // u^2+1 = (u+2)(u+3)
    CHECK_THROWS_AS(FieldCtx(5, 1, 2, {2, 0, 2}), InvalidInputError); // not monic
}

TEST_CASE("arithmetic in F_25") {
    FieldCtx K(5, 1, 2);
    FFElement u = K.from_value(5); // the residue class of u
    CHECK(K.inv(K.one()) == K.one());
    CHECK(K.mul(u, u) == K.from_int(3)); // u^2 = -2 = 3
    CHECK(K.pow(u, 24) == K.one());
    CHECK_THROWS_AS(K.inv(K.zero()), InvalidInputError);

    // field axioms on a few elements
    FFElement a = K.from_value(7), b = K.from_value(13);
    CHECK(K.mul(a, K.inv(a)) == K.one());
    CHECK(K.add(a, K.neg(a)) == K.zero());
    CHECK(K.mul(K.add(a, b), u) == K.add(K.mul(a, u), K.mul(b, u)));
}

TEST_CASE("frobenius, trace, norm in F_25") {
    FieldCtx K(5, 1, 2);
    FFElement u = K.from_value(5);
    CHECK(K.frobenius_q(K.zero()) == K.zero());
    FFElement fourU = K.mul(K.from_int(4), u);
    CHECK(K.frobenius_q(u) == fourU); // u^5 = 4u
    CHECK(K.trace_to_Fq(K.zero()) == K.zero());
    CHECK(K.trace_to_Fq(u) == K.zero());
    CHECK(K.trace_to_Fq(K.one()) == K.from_int(2));
    CHECK(K.norm_to_Fq(K.one()) == K.one());
    CHECK(K.norm_to_Fq(u) == K.from_int(2)); // u^6 = 27 = 2
    CHECK(K.norm_to_Fq(K.zero()) == K.zero());
    CHECK(K.is_in_Fq(K.zero()));
    CHECK_FALSE(K.is_in_Fq(u));
    CHECK(K.is_in_Fq(K.from_int(3)));
}

TEST_CASE("frobenius is a field automorphism fixing F_q (exhaustive)") {
    for (auto [p, m, n] : {std::tuple<Int, Int, Int>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
        FieldCtx K(p, m, n);
        for (Int va = 0; va < K.order(); ++va) {
            FFElement a = K.from_value(va);
            // n-fold application is the identity
            FFElement it = a;
            for (Int i = 0; i < K.n(); ++i) it = K.frobenius_q(it);
            CHECK(it == a);
            CHECK(K.is_in_Fq(K.trace_to_Fq(a)));
            CHECK(K.is_in_Fq(K.norm_to_Fq(a)));
            for (Int vb = 0; vb < K.order(); vb += 3) {
                FFElement b = K.from_value(vb);
                CHECK(K.frobenius_q(K.add(a, b)) == K.add(K.frobenius_q(a), K.frobenius_q(b)));
                CHECK(K.frobenius_q(K.mul(a, b)) == K.mul(K.frobenius_q(a), K.frobenius_q(b)));
            }
        }
    }
}

TEST_CASE("trace and norm are surjective at desk scale") {
    FieldCtx K(3, 1, 2);
    std::set<Int> trace_values, norm_values;
    for (Int v = 0; v < K.order(); ++v) {
        FFElement a = K.from_value(v);
        trace_values.insert(K.value_of(K.trace_to_Fq(a)));
        if (!K.is_zero(a)) norm_values.insert(K.value_of(K.norm_to_Fq(a)));
    }
    CHECK(trace_values.size() == 3);
    CHECK(norm_values.size() == 2); // F_3^*
}

TEST_CASE("trace is F_q-linear") {
    FieldCtx K(2, 2, 2); // F_16 over F_4
    auto fq = K.subfield_Fq_elements();
    for (Int va = 0; va < K.order(); va += 3) {
        FFElement a = K.from_value(va);
        for (Int vb = 0; vb < K.order(); vb += 5) {
            FFElement b = K.from_value(vb);
            CHECK(K.trace_to_Fq(K.add(a, b)) == K.add(K.trace_to_Fq(a), K.trace_to_Fq(b)));
        }
        for (const FFElement& c : fq)
            CHECK(K.trace_to_Fq(K.mul(c, a)) == K.mul(c, K.trace_to_Fq(a)));
    }
}

TEST_CASE("galois orbits") {
    FieldCtx f4(2, 1, 2);
    auto orbits4 = f4.galois_orbits();
    REQUIRE(orbits4.size() == 3);
    CHECK(orbits4[0] == std::vector<FFElement>{f4.zero()});
    CHECK(orbits4[1] == std::vector<FFElement>{f4.one()});
    CHECK(orbits4[2].size() == 2);

    FieldCtx f25(5, 1, 2);
    auto orbits25 = f25.galois_orbits();
    CHECK(orbits25.size() == 15);
    Int singletons = 0, pairs = 0;
    for (auto& o : orbits25) (o.size() == 1 ? singletons : pairs)++;
    CHECK(singletons == 5);
    CHECK(pairs == 10);
}

TEST_CASE("orbit count formula") {
    CHECK(orbit_count_formula(2, 2) == 3);
    CHECK(orbit_count_formula(5, 2) == 15);
    CHECK(orbit_count_formula(7, 1) == 7);
    CHECK(orbit_count_formula(4, 3) == 24); // 4 + (16-4)/2 + (64-4)/3
}

TEST_CASE("orbit count matches the formula across small fields") {
    for (auto [p, m, n] : {std::tuple<Int, Int, Int>{2, 1, 2}, {2, 1, 4}, {2, 2, 2}, {3, 1, 3},
                           {5, 1, 2}, {7, 1, 2}, {2, 1, 6}}) {
        FieldCtx K(p, m, n);
        auto orbits = K.galois_orbits();
        CHECK(static_cast<Int>(orbits.size()) == orbit_count_formula(K.q(), K.n()));
        for (auto& o : orbits) CHECK(K.n() % static_cast<Int>(o.size()) == 0);
    }
}

TEST_CASE("subfield basis and trace-zero basis") {
    FieldCtx K(2, 2, 2); // F_16 over F_4
    auto fq = K.subfield_Fq_elements();
    CHECK(fq.size() == 4);
    for (const FFElement& a : fq) CHECK(K.is_in_Fq(a));
    auto tz = K.trace_zero_basis();
    CHECK(tz.size() == 2); // m*(n-1)
    for (const FFElement& b : tz) CHECK(K.trace_to_Fq(b) == K.zero());
}
