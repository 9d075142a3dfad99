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

#ifndef QSPLIT_EXTENSION_HPP
#define QSPLIT_EXTENSION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsplit/poly.hpp"
#include "qsplit/quasisym.hpp"

namespace qsplit {

/// Left-hand side of an Artin-Schreier-type equation l(y) = h/g.
///   full_trace:  l(T) = T^(q^(n-1)) + ... + T^q + T, roots = trace-zero set
///   p_step:      l(T) = T^p - B^(p-1) T with B != 0, roots = F_p * B
struct LinearizedLhs {
    enum class Kind { full_trace, p_step };
    Kind kind = Kind::full_trace;
    FFElement b; // p_step only

    static LinearizedLhs full_trace() { return LinearizedLhs{Kind::full_trace, {}}; }
    static LinearizedLhs p_step(const FieldCtx& ctx, FFElement B);

    /// Extension degree [E:F]: q^(n-1) or p.
    Int degree(const FieldCtx& ctx) const;
    /// l(a) for a in the field.
    FFElement apply(const FieldCtx& ctx, const FFElement& a) const;
    /// l(T) as an explicit polynomial in T.
    Poly as_poly(const FieldCtx& ctx) const;
    /// F_p-basis of the root space V.
    std::vector<FFElement> root_space_basis(const FieldCtx& ctx) const;

    bool operator==(const LinearizedLhs&) const = default;
};

/// E = F(y), l(y) = h(x)/g(x) over F = F_{q^n}(x). Construction reduces the
/// fraction to lowest terms with g monic and rejects a zero RHS. When
/// qs_certified is set, h and g are checked against V_qs membership.
struct ArtinSchreierSpec {
    FieldCtx ctx;
    LinearizedLhs lhs;
    Poly h;
    Poly g;
    bool qs_certified = false;

    static ArtinSchreierSpec make(const FieldCtx& ctx, LinearizedLhs lhs, Poly h, Poly g,
                                  bool qs_certified);
};

/// E = F(y), y^d = h(x)/g(x) with d | q^n - 1 (default (q^n-1)/(q-1)).
struct KummerSpec {
    FieldCtx ctx;
    Int d = 0;
    Poly h;
    Poly g;
    bool qs_certified = false;

    static KummerSpec make(const FieldCtx& ctx, std::optional<Int> d, Poly h, Poly g,
                           bool qs_certified);
};

/// Either kind, as read from an extension spec file.
struct ExtensionSpec {
    enum class Kind { artin_schreier, kummer };
    Kind kind = Kind::artin_schreier;
    FieldCtx ctx;
    LinearizedLhs lhs;           // artin_schreier
    std::optional<Int> kummer_d; // kummer
    Poly h;
    Poly g;
    bool qs_certified = false;

    ArtinSchreierSpec as_artin_schreier() const;
    KummerSpec as_kummer() const;
};

/// A place of F = F_{q^n}(x): a monic irreducible polynomial or infinity.
struct PlaceId {
    bool at_infinity = false;
    std::optional<Poly> prime; // monic irreducible, finite places only
    Int degree = 1;

    static PlaceId infinity() { return PlaceId{true, std::nullopt, 1}; }
    static PlaceId finite(Poly prime);
    static PlaceId rational(const FieldCtx& ctx, const FFElement& alpha); // x - alpha
};

enum class PlaceStatus {
    splits_completely,
    totally_ramified,
    tame_ramified,
    unramified_nonsplit,
    unresolved,
};

std::string to_string(PlaceStatus s);

struct PlaceVerdict {
    PlaceId place;
    Int valuation = 0;                 // v_P(h/g)
    PlaceStatus status = PlaceStatus::unresolved;
    Int ramification_index = 1;        // e(P'|P), common to all places above
    Int different_exponent = 0;        // d(P'|P) per place above (0 if unramified)
    Int places_above_degree1 = 0;
    bool theorem_backed = false;       // splitting guaranteed by the qs theorems
};

struct ExtensionReport {
    Int degree = 0; // [E:F]
    std::vector<PlaceVerdict> verdicts;
    Int deg_different = 0;
    std::optional<Int> genus;  // absent when a wild place stayed unresolved
    Int n_rational = 0;
    bool counts_complete = true;
    std::pair<Int, Int> ratio; // N(E) / [E:F], reduced
};

// ---- irreducibility ----------------------------------------------------------

enum class IrreducibilityVerdict { irreducible_certified, inconclusive };

/// Certifies L_V(T) - f irreducible for every additive subgroup V when f has
/// a term of degree d coprime to p and no terms of degree d*p^i, i > 0.
IrreducibilityVerdict coprime_degree_criterion(const Poly& f);

struct SubgroupImageResult {
    enum class Kind { irreducible_certified, reducible_witness, inconclusive };
    Kind kind = Kind::inconclusive;
    // witness data: f = L_{W'}(g) for W' = L_W(V)
    std::vector<FFElement> witness_subgroup; // F_p-basis of W
    std::optional<Poly> witness_g;
};

/// Full reducibility decision for L_V(T) - f via proper-subgroup images.
/// Enumerates proper F_p-subspaces W of V (dimension capped), forms
/// W' = L_W(V) and solves f = L_{W'}(g) coefficient by coefficient.
SubgroupImageResult subgroup_image_test(const FieldCtx& ctx, const LinearizedLhs& lhs,
                                        const Poly& f, Int dim_cap = 12);

// ---- valuations and pole reduction -------------------------------------------

/// v_P(h/g): multiplicity difference at a finite place, deg g - deg h at
/// infinity.
Int valuation_at(const Poly& h, const Poly& g, const PlaceId& place);

/// Result of removing p-th-power pole terms at infinity from a polynomial
/// right-hand side of a single p-step, by substitutions z = y - c' x^k.
struct PoleReduction {
    enum class Status {
        coprime_pole,   // deg(reduced) >= 1 and coprime to p
        nonnegative,    // reduced to a constant (possibly zero): no pole left
        degenerate,     // reduced to a constant inside the image of the step
                        // map on K: the step polynomial is reducible
    };
    Status status = Status::nonnegative;
    Poly reduced;
    // substitution log: (k, c') for each removed term c*x^(pk)
    std::vector<std::pair<Int, FFElement>> log;
};

PoleReduction as_reduce_pole(const FieldCtx& ctx, const FFElement& B, Poly w);

// ---- tower -------------------------------------------------------------------

struct TowerStep {
    Int index = 0;  // 1-based; step i is y_i^p - B_i^(p-1) y_i = y_{i-1}
    FFElement B;
};

/// Degree-p subextension tower of the full-trace extension: computes an
/// F_p-basis of the trace-zero subspace and runs the elimination recursion.
/// The resulting chain of step maps composes exactly to the full-trace
/// operator; basis orderings that degenerate are skipped.
std::vector<TowerStep> build_tower(const ArtinSchreierSpec& spec);

struct TowerStepInfinity {
    Int step = 0;
    Int pole_order = 0;         // m_i at the chain place, 0 when unramified
    Int different_exponent = 0; // (p-1)(m_i+1) for the single step
};

struct TowerReport {
    std::vector<TowerStep> steps;
    // per-prefix rational splitting: counts[i][alpha-index] = number of
    // degree-1 places of E^(i+1) above the place (infinity last)
    std::vector<std::vector<Int>> degree1_counts;
    std::vector<TowerStepInfinity> infinity_steps; // only when infinity ramifies
    Int composite_infinity_different = 0;
    Int deg_different = 0;
    std::optional<Int> genus;
    Int n_rational = 0; // of the full extension E^r
};

TowerReport analyze_tower(const ArtinSchreierSpec& spec, Int size_guard = kDefaultSizeGuard);

// ---- analyzers ---------------------------------------------------------------

ExtensionReport analyze_artin_schreier(const ArtinSchreierSpec& spec,
                                       Int size_guard = kDefaultSizeGuard);
ExtensionReport analyze_kummer(const KummerSpec& spec, Int size_guard = kDefaultSizeGuard);
ExtensionReport analyze(const ExtensionSpec& spec, Int size_guard = kDefaultSizeGuard);

/// True iff every rational place of F split completely:
/// N(E) = [E:F] * (q^n + 1).
bool max_ratio_check(const ExtensionReport& report, const FieldCtx& ctx);

} // namespace qsplit

#endif // QSPLIT_EXTENSION_HPP
