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

#include <random>

#include "qsplit/extension.hpp"

using namespace qsplit;

namespace {

// t^{1+iq} + t^{q+iq^2} + t^{q^2+i}, the cyclic family over F_{q^3}
Poly cyclic_family(const FieldCtx& K, Int i) {
    Int q = K.q();
    return Poly::monomial(K, 1 + i * q, K.one()) +
           Poly::monomial(K, q + i * q * q, K.one()) +
           Poly::monomial(K, q * q + i, K.one());
}

const PlaceVerdict& verdict_at_infinity(const ExtensionReport& rep) {
    REQUIRE(rep.verdicts.front().place.at_infinity);
    return rep.verdicts.front();
}

void check_riemann_hurwitz(const ExtensionReport& rep) {
    if (!rep.genus.has_value()) return;
    CHECK(2 * *rep.genus - 2 == rep.degree * (-2) + rep.deg_different);
    CHECK(*rep.genus >= 0);
}

void check_splitting_bound(const ExtensionReport& rep, const FieldCtx& K) {
    CHECK(rep.n_rational <= rep.degree * (K.order() + 1));
    CHECK((rep.n_rational == rep.degree * (K.order() + 1)) == max_ratio_check(rep, K));
}

} // namespace

TEST_CASE("coprime degree criterion") {
    FieldCtx f25(5, 1, 2);
    CHECK(coprime_degree_criterion(Poly::monomial(f25, 6, f25.one())) ==
          IrreducibilityVerdict::irreducible_certified);
    // x^p alone: no coprime term
    CHECK(coprime_degree_criterion(Poly::monomial(f25, 5, f25.one())) ==
          IrreducibilityVerdict::inconclusive);
    // x + x^p: the coprime term of degree 1 clashes with the degree-p term
    CHECK(coprime_degree_criterion(Poly::x(f25) + Poly::monomial(f25, 5, f25.one())) ==
          IrreducibilityVerdict::inconclusive);
    // the Example 4.2 right-hand side over F_8
    FieldCtx f8(2, 1, 3);
    CHECK(coprime_degree_criterion(cyclic_family(f8, 1)) ==
          IrreducibilityVerdict::irreducible_certified);
}

TEST_CASE("subgroup image test on knowns") {
    FieldCtx f4(2, 1, 2);
    LinearizedLhs step = LinearizedLhs::p_step(f4, f4.one()); // T^2 + T

    auto r1 = subgroup_image_test(f4, step, Poly::monomial(f4, 3, f4.one()));
    CHECK(r1.kind == SubgroupImageResult::Kind::irreducible_certified);

    // f = L_V(x) = x^2 + x is the image of g = x
    Poly img = Poly::monomial(f4, 2, f4.one()) + Poly::x(f4);
    auto r2 = subgroup_image_test(f4, step, img);
    REQUIRE(r2.kind == SubgroupImageResult::Kind::reducible_witness);
    CHECK(*r2.witness_g == Poly::x(f4));
}

TEST_CASE("subgroup image test agrees with exhaustive search (F_4, dim 1)") {
    FieldCtx K(2, 1, 2);
    LinearizedLhs step = LinearizedLhs::p_step(K, K.one());
    auto is_image_exhaustive = [&](const Poly& f) {
        if (f.degree() % 2 != 0) return false;
        Int D = f.degree() / 2;
        Int total = 1;
        for (Int i = 0; i <= D; ++i) total *= 4;
        for (Int code = 0; code < total; ++code) {
            std::vector<FFElement> cs;
            Int c = code;
            for (Int i = 0; i <= D; ++i) {
                cs.push_back(K.from_value(c % 4));
                c /= 4;
            }
            Poly g(K, cs);
            if (poly_frobenius_p(g) + g == f) return true; // g^2 + g
        }
        return false;
    };
    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 120; ++iter) {
        std::vector<FFElement> cs;
        for (int i = 0; i < 5; ++i) cs.push_back(K.from_value(static_cast<Int>(rng() % 4)));
        Poly f(K, cs);
        if (f.is_zero()) continue;
        auto verdict = subgroup_image_test(K, step, f);
        bool image = is_image_exhaustive(f);
        if (verdict.kind == SubgroupImageResult::Kind::reducible_witness) {
            CHECK(image);
            // and the witness reconstructs f
            Poly g = *verdict.witness_g;
            CHECK(poly_frobenius_p(g) + g == f);
        } else {
            CHECK(verdict.kind == SubgroupImageResult::Kind::irreducible_certified);
            CHECK_FALSE(image);
        }
    }
}

TEST_CASE("subgroup image test with the full trace space (dim 2)") {
    FieldCtx f8(2, 1, 3);
    LinearizedLhs full = LinearizedLhs::full_trace();
    // the Example 4.2 RHS is certified
    auto r = subgroup_image_test(f8, full, cyclic_family(f8, 1));
    CHECK(r.kind == SubgroupImageResult::Kind::irreducible_certified);
    // an actual image of the trace operator is flagged with its witness
    Poly g = Poly::monomial(f8, 2, f8.from_value(3)) + Poly::x(f8);
    Poly f = poly_frobenius_p(poly_frobenius_p(g)) + poly_frobenius_p(g) + g; // l(g), q = 2
    auto r2 = subgroup_image_test(f8, full, f);
    REQUIRE(r2.kind == SubgroupImageResult::Kind::reducible_witness);
}

TEST_CASE("valuations") {
    FieldCtx K(5, 1, 2);
    Poly h = Poly::monomial(K, 6, K.one());
    Poly g = Poly::from_ints(K, {3, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1});
    CHECK(valuation_at(h, g, PlaceId::infinity()) == 4); // 2q - (q+1) = q-1
    CHECK(valuation_at(h, Poly::constant(K, K.one()), PlaceId::infinity()) == -6);
    PlaceId p0 = PlaceId::rational(K, K.from_int(1));
    CHECK(valuation_at(h, g, p0) == 0);
    PlaceId pz = PlaceId::rational(K, K.zero());
    CHECK(valuation_at(h, g, pz) == 6);
}

TEST_CASE("pole reduction at infinity") {
    FieldCtx f8(2, 1, 3);
    // any nonzero trace-zero element works as the step parameter
    FFElement B = f8.trace_zero_basis()[0];
    REQUIRE_FALSE(f8.is_zero(B));

    Poly w = cyclic_family(f8, 1); // x^3 + x^6 + x^5
    PoleReduction red = as_reduce_pole(f8, B, w);
    CHECK(red.status == PoleReduction::Status::coprime_pole);
    CHECK(red.reduced.degree() == 5);
    REQUIRE(red.log.size() == 1);
    CHECK(red.log[0].first == 3);
    CHECK(red.log[0].second == f8.one());
    // w' = x^5 + (1+B)x^3
    Poly expect = Poly::monomial(f8, 5, f8.one()) +
                  Poly::monomial(f8, 3, f8.add(f8.one(), B));
    CHECK(red.reduced == expect);

    // already coprime: unchanged
    PoleReduction r2 = as_reduce_pole(f8, B, Poly::monomial(f8, 5, f8.one()));
    CHECK(r2.status == PoleReduction::Status::coprime_pole);
    CHECK(r2.reduced == Poly::monomial(f8, 5, f8.one()));
    CHECK(r2.log.empty());

    // w = x^p reduces to B^(p-1) x with pole order 1
    PoleReduction r3 = as_reduce_pole(f8, B, Poly::monomial(f8, 2, f8.one()));
    CHECK(r3.status == PoleReduction::Status::coprime_pole);
    CHECK(r3.reduced == Poly::x(f8).scaled(B));
}

TEST_CASE("tower construction") {
    // F_4 over F_2: single step with B = 1
    FieldCtx f4(2, 1, 2);
    auto spec4 = ArtinSchreierSpec::make(f4, LinearizedLhs::full_trace(),
                                         Poly::monomial(f4, 3, f4.one()),
                                         Poly::constant(f4, f4.one()), false);
    auto steps4 = build_tower(spec4);
    REQUIRE(steps4.size() == 1);
    CHECK(steps4[0].B == f4.one());

    // F_8 over F_2: two degree-2 steps
    FieldCtx f8(2, 1, 3);
    auto spec8 = ArtinSchreierSpec::make(f8, LinearizedLhs::full_trace(), cyclic_family(f8, 1),
                                         Poly::constant(f8, f8.one()), true);
    auto steps8 = build_tower(spec8);
    REQUIRE(steps8.size() == 2);
    for (const TowerStep& s : steps8) CHECK_FALSE(f8.is_zero(s.B));
    // the top step kills a line inside the trace-zero space
    CHECK(f8.trace_to_Fq(steps8.back().B) == f8.zero());

    // F_16 over F_2: three steps
    FieldCtx f16(2, 1, 4);
    auto spec16 = ArtinSchreierSpec::make(f16, LinearizedLhs::full_trace(),
                                          Poly::monomial(f16, 3, f16.one()),
                                          Poly::constant(f16, f16.one()), false);
    CHECK(build_tower(spec16).size() == 3);
}

TEST_CASE("all-rational-places-split example at q = 5") {
    FieldCtx K(5, 1, 2);
    Poly h = Poly::monomial(K, 6, K.one());
    Poly g = Poly::from_ints(K, {3, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1});
    auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), h, g, true);
    ExtensionReport rep = analyze_artin_schreier(spec);

    CHECK(rep.degree == 5);
    CHECK(rep.deg_different == 80);
    REQUIRE(rep.genus.has_value());
    CHECK(*rep.genus == 36);
    CHECK(rep.n_rational == 130);
    CHECK(rep.counts_complete);
    CHECK(max_ratio_check(rep, K));
    check_riemann_hurwitz(rep);

    // two degree-5 places, each totally ramified with different exponent 8
    Int ram = 0;
    for (const PlaceVerdict& v : rep.verdicts) {
        if (v.status != PlaceStatus::totally_ramified) continue;
        ++ram;
        CHECK(v.place.degree == 5);
        CHECK(v.valuation == -1);
        CHECK(v.different_exponent == 8);
    }
    CHECK(ram == 2);
    // every rational place carries the theorem-backed splitting certificate
    for (const PlaceVerdict& v : rep.verdicts)
        if (v.place.degree == 1 && v.status == PlaceStatus::splits_completely)
            CHECK(v.theorem_backed);
}

TEST_CASE("Hermitian comparison at q = 5") {
    FieldCtx K(5, 1, 2);
    auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(),
                                        Poly::monomial(K, 6, K.one()),
                                        Poly::constant(K, K.one()), true);
    ExtensionReport rep = analyze_artin_schreier(spec);
    CHECK(rep.degree == 5);
    CHECK(rep.deg_different == 28);
    REQUIRE(rep.genus.has_value());
    CHECK(*rep.genus == 10);
    CHECK(rep.n_rational == 126);
    CHECK_FALSE(max_ratio_check(rep, K));
    check_riemann_hurwitz(rep);

    const PlaceVerdict& inf = verdict_at_infinity(rep);
    CHECK(inf.status == PlaceStatus::totally_ramified);
    CHECK(inf.valuation == -6);
    CHECK(inf.different_exponent == 28);
    CHECK(inf.places_above_degree1 == 1);
}

TEST_CASE("wild infinity through the tower: N and genus of the q=2 example") {
    FieldCtx K(2, 1, 3);
    auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), cyclic_family(K, 1),
                                        Poly::constant(K, K.one()), true);
    ExtensionReport rep = analyze_artin_schreier(spec);
    CHECK(rep.degree == 4);
    CHECK(rep.deg_different == 18);
    REQUIRE(rep.genus.has_value());
    CHECK(*rep.genus == 6);
    CHECK(rep.n_rational == 33); // q^5 + 1
    check_riemann_hurwitz(rep);

    const PlaceVerdict& inf = verdict_at_infinity(rep);
    CHECK(inf.status == PlaceStatus::totally_ramified);
    CHECK(inf.different_exponent == 18);
}

TEST_CASE("tower report for the q=2 example") {
    FieldCtx K(2, 1, 3);
    auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), cyclic_family(K, 1),
                                        Poly::constant(K, K.one()), true);
    TowerReport rep = analyze_tower(spec);
    REQUIRE(rep.steps.size() == 2);
    REQUIRE(rep.infinity_steps.size() == 2);
    CHECK(rep.infinity_steps[0].pole_order == 5);
    CHECK(rep.infinity_steps[0].different_exponent == 6);
    CHECK(rep.infinity_steps[1].pole_order == 5);
    CHECK(rep.infinity_steps[1].different_exponent == 6);
    CHECK(rep.composite_infinity_different == 18);
    CHECK(rep.deg_different == 18);
    REQUIRE(rep.genus.has_value());
    CHECK(*rep.genus == 6);
    CHECK(rep.n_rational == 33);

    // every affine rational place splits completely in each prefix
    for (Int i = 0; i < 2; ++i) {
        const auto& counts = rep.degree1_counts[static_cast<std::size_t>(i)];
        REQUIRE(counts.size() == 9); // 8 affine + infinity
        for (std::size_t a = 0; a < 8; ++a) CHECK(counts[a] == (i == 0 ? 2 : 4));
        CHECK(counts[8] == 1); // totally ramified infinity
    }
}

TEST_CASE("first tower step different exponents across the cyclic family") {
    // small i: d = (q-1)(q^2 + i + 1); large coprime i: d = (q-1)(2 + iq)
    for (auto [q, i] : {std::pair<Int, Int>{2, 1}, {3, 1}, {3, 2}}) {
        FieldCtx K(q, 1, 3);
        auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), cyclic_family(K, i),
                                            Poly::constant(K, K.one()), false);
        auto steps = build_tower(spec);
        PoleReduction red = as_reduce_pole(K, steps[0].B, cyclic_family(K, i));
        REQUIRE(red.status == PoleReduction::Status::coprime_pole);
        Int m = red.reduced.degree();
        CHECK((q - 1) * (m + 1) == (q - 1) * (q * q + i + 1));
    }
    for (auto [q, i] : {std::pair<Int, Int>{2, 5}, {3, 5}}) {
        FieldCtx K(q, 1, 3);
        auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), cyclic_family(K, i),
                                            Poly::constant(K, K.one()), false);
        auto steps = build_tower(spec);
        PoleReduction red = as_reduce_pole(K, steps[0].B, cyclic_family(K, i));
        REQUIRE(red.status == PoleReduction::Status::coprime_pole);
        Int m = red.reduced.degree();
        CHECK((q - 1) * (m + 1) == (q - 1) * (2 + i * q));
    }
}

TEST_CASE("one-step tower matches the direct analysis") {
    FieldCtx K(5, 1, 2);
    Poly h = Poly::monomial(K, 6, K.one());
    Poly g = Poly::from_ints(K, {3, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1});
    auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), h, g, true);
    ExtensionReport direct = analyze_artin_schreier(spec);
    TowerReport tower = analyze_tower(spec);
    CHECK(tower.deg_different == direct.deg_different);
    CHECK(tower.genus == direct.genus);
    CHECK(tower.n_rational == direct.n_rational);
}

TEST_CASE("tower consistency for the wild q=2 example") {
    FieldCtx K(2, 1, 3);
    auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), cyclic_family(K, 1),
                                        Poly::constant(K, K.one()), true);
    ExtensionReport direct = analyze_artin_schreier(spec);
    TowerReport tower = analyze_tower(spec);
    CHECK(tower.deg_different == direct.deg_different);
    CHECK(tower.genus == direct.genus);
    CHECK(tower.n_rational == direct.n_rational);
}

TEST_CASE("p-step analysis (single Artin-Schreier step)") {
    FieldCtx K(5, 1, 2);
    FFElement B = K.trace_zero_basis()[0];
    auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::p_step(K, B),
                                        Poly::monomial(K, 6, K.one()),
                                        Poly::constant(K, K.one()), false);
    ExtensionReport rep = analyze_artin_schreier(spec);
    CHECK(rep.degree == 5);
    CHECK(rep.deg_different == 28);
    check_riemann_hurwitz(rep);
}

TEST_CASE("rejected Artin-Schreier inputs") {
    FieldCtx K(2, 1, 2);
    Poly one = Poly::constant(K, K.one());
    // zero RHS
    CHECK_THROWS_AS(
        ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), Poly::zero(K), one, false),
        InvalidInputError);
    // constant RHS
    CHECK_THROWS_AS(ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), one, one, false),
                    InvalidInputError);
    // reducible RHS: x^2 + x is the image of x
    auto spec = ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(),
                                        Poly::monomial(K, 2, K.one()) + Poly::x(K), one, false);
    CHECK_THROWS_AS(analyze_artin_schreier(spec), InvalidInputError);
    // qs-certification check
    CHECK_THROWS_AS(ArtinSchreierSpec::make(K, LinearizedLhs::full_trace(), Poly::x(K), one, true),
                    InvalidInputError);
}

TEST_CASE("Kummer final example: q = 9, d = 4, y^4 = x^8 - 2") {
    FieldCtx K(3, 1, 2);
    Poly h = Poly::monomial(K, 8, K.one()) + Poly::constant(K, K.one()); // x^8 + 1 = x^8 - 2
    Poly g = Poly::constant(K, K.one());
    auto spec = KummerSpec::make(K, std::nullopt, h, g, true);
    CHECK(spec.d == 4); // (9-1)/(3-1)
    ExtensionReport rep = analyze_kummer(spec);
    CHECK(rep.degree == 4);
    CHECK(rep.n_rational == 40);
    CHECK(rep.counts_complete);
    CHECK(max_ratio_check(rep, K));
    check_riemann_hurwitz(rep);
    CHECK(rep.deg_different == 24);
    REQUIRE(rep.genus.has_value());
    CHECK(*rep.genus == 9);

    // all ten rational places split completely; ramification is tame
    Int split = 0;
    for (const PlaceVerdict& v : rep.verdicts) {
        if (v.place.degree == 1) {
            CHECK(v.status == PlaceStatus::splits_completely);
            CHECK(v.places_above_degree1 == 4);
            ++split;
        } else {
            CHECK(v.status == PlaceStatus::tame_ramified);
            CHECK(v.ramification_index == 4);
            CHECK(v.different_exponent == 3);
            CHECK(v.ramification_index % K.p() != 0);
        }
    }
    CHECK(split == 10);
}

TEST_CASE("Kummer rejects d-th powers") {
    FieldCtx K(3, 1, 2);
    Poly x = Poly::x(K);
    // h/g = x^4 is a perfect 4th power
    CHECK_THROWS_AS(analyze_kummer(KummerSpec::make(K, 4, poly_pow(x, 4),
                                                    Poly::constant(K, K.one()), false)),
                    InvalidInputError);
    // d must divide q^n - 1
    CHECK_THROWS_AS(KummerSpec::make(K, 3, x, Poly::constant(K, K.one()), false),
                    InvalidInputError);
}

TEST_CASE("Kummer corollary case: infinity splits when d divides the valuation") {
    FieldCtx K(3, 1, 2);
    // y^4 = x^8 - 2 has v_inf = -8, divisible by 4, with unit residue 1
    Poly h = Poly::monomial(K, 8, K.one()) + Poly::constant(K, K.one());
    auto spec = KummerSpec::make(K, std::nullopt, h, Poly::constant(K, K.one()), false);
    ExtensionReport rep = analyze_kummer(spec);
    const PlaceVerdict& inf = verdict_at_infinity(rep);
    CHECK(inf.status == PlaceStatus::splits_completely);
    CHECK(inf.valuation == -8);
    CHECK(inf.places_above_degree1 == 4);
}

TEST_CASE("Riemann-Hurwitz and the splitting bound hold on every report produced here") {
    // a small sweep of legal specs
    FieldCtx K(3, 1, 2);
    std::vector<ExtensionReport> reps;
    reps.push_back(analyze_artin_schreier(ArtinSchreierSpec::make(
        K, LinearizedLhs::full_trace(), Poly::monomial(K, 4, K.one()),
        Poly::constant(K, K.one()), false)));
    reps.push_back(analyze_kummer(KummerSpec::make(
        K, std::nullopt, Poly::monomial(K, 8, K.one()) + Poly::constant(K, K.one()),
        Poly::constant(K, K.one()), false)));
    for (const auto& rep : reps) {
        check_riemann_hurwitz(rep);
        check_splitting_bound(rep, K);
    }
}
