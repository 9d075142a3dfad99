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

#include "qsplit/quasisym.hpp"

#include <algorithm>
#include <string>

namespace qsplit {

Poly elementary_symmetric_poly(const FieldCtx& ctx, Int i) {
    Int n = ctx.n();
    if (i < 1 || i > n) throw InvalidInputError("elementary symmetric index out of range");
    // exponents are sums over i-subsets of {1, q, ..., q^(n-1)}; all distinct
    std::vector<Int> powers(static_cast<std::size_t>(n));
    powers[0] = 1;
    for (Int k = 1; k < n; ++k) powers[static_cast<std::size_t>(k)] = powers[static_cast<std::size_t>(k - 1)] * ctx.q();
    Int maxdeg = 0;
    for (Int k = n - i; k < n; ++k) maxdeg += powers[static_cast<std::size_t>(k)];
    if (maxdeg > (1LL << 22)) throw SizeGuardError("elementary symmetric polynomial too dense");
    std::vector<FFElement> v(static_cast<std::size_t>(maxdeg) + 1, ctx.zero());
    // enumerate i-subsets of {0..n-1}
    std::vector<Int> idx(static_cast<std::size_t>(i));
    for (Int k = 0; k < i; ++k) idx[static_cast<std::size_t>(k)] = k;
    while (true) {
        Int e = 0;
        for (Int k : idx) e += powers[static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(e)] = ctx.one();
        Int pos = i - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - i + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (Int k = pos + 1; k < i; ++k)
            idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
    return Poly(ctx, std::move(v));
}

bool is_quasisymmetric_semantic(const Poly& f, Int size_guard) {
    const FieldCtx& K = f.ctx();
    if (K.order() > size_guard) throw SizeGuardError("field too large for the semantic test");
    for (const auto& orbit : K.galois_orbits()) {
        // constancy along the whole orbit cycle
        FFElement v0 = f.eval(orbit.front());
        FFElement a = orbit.front();
        for (std::size_t k = 1; k < orbit.size(); ++k) {
            a = K.frobenius_q(a);
            if (!(f.eval(a) == v0)) return false;
        }
    }
    return true;
}

bool is_quasisymmetric_syntactic(const Poly& f) {
    const FieldCtx& K = f.ctx();
    Int Q = K.order();
    if (f.degree() >= Q) throw InvalidInputError("syntactic test requires deg f < q^n");
    if (f.is_zero()) return true;
    // f(t^q) reduced mod t^Q - t, compared against f
    std::map<Int, FFElement> acc;
    for (Int e = 0; e <= f.degree(); ++e) {
        FFElement c = f.coeff(e);
        if (K.is_zero(c)) continue;
        Int shifted = e * K.q();
        Int red = shifted < Q ? shifted : 1 + (shifted - 1) % (Q - 1);
        auto it = acc.find(red);
        if (it == acc.end())
            acc.emplace(red, c);
        else
            it->second = K.add(it->second, c);
    }
    Int maxdeg = acc.empty() ? 0 : acc.rbegin()->first;
    std::vector<FFElement> v(static_cast<std::size_t>(maxdeg) + 1, K.zero());
    for (auto& [e, c] : acc) v[static_cast<std::size_t>(e)] = c;
    return Poly(K, std::move(v)) == f;
}

QsLift lift(const Poly& f) {
    const FieldCtx& K = f.ctx();
    if (f.degree() >= K.order()) throw InvalidInputError("lift requires deg f < q^n");
    QsLift L;
    L.n = K.n();
    for (Int e = 0; e <= f.degree(); ++e) {
        FFElement c = f.coeff(e);
        if (K.is_zero(c)) continue;
        std::vector<Int> digits(static_cast<std::size_t>(K.n()), 0);
        Int t = e;
        for (Int k = 0; k < K.n(); ++k) {
            digits[static_cast<std::size_t>(k)] = t % K.q();
            t /= K.q();
        }
        L.terms.emplace(std::move(digits), c);
    }
    return L;
}

namespace {
std::vector<Int> rotate_right(const std::vector<Int>& v) {
    std::vector<Int> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[(i + 1) % v.size()] = v[i];
    return r;
}
} // namespace

bool lift_is_cyclic_invariant(const QsLift& L) {
    for (const auto& [exps, coeff] : L.terms) {
        auto it = L.terms.find(rotate_right(exps));
        if (it == L.terms.end() || !(it->second == coeff)) return false;
    }
    return true;
}

bool lift_is_fully_symmetric(const QsLift& L) {
    if (!lift_is_cyclic_invariant(L)) return false;
    if (L.n < 2) return true;
    for (const auto& [exps, coeff] : L.terms) {
        std::vector<Int> swapped = exps;
        std::swap(swapped[0], swapped[1]);
        auto it = L.terms.find(swapped);
        if (it == L.terms.end() || !(it->second == coeff)) return false;
    }
    return true;
}

bool maps_into_Fq(const Poly& f, Int size_guard) {
    const FieldCtx& K = f.ctx();
    if (K.order() > size_guard) throw SizeGuardError("field too large for the value sweep");
    for (Int v = 0; v < K.order(); ++v)
        if (!K.is_in_Fq(f.eval(K.from_value(v)))) return false;
    return true;
}

bool in_Vqs(const Poly& f, Int /*size_guard*/) {
    const FieldCtx& K = f.ctx();
    Poly rep = reduce_mod_field_poly(f);
    if (!is_quasisymmetric_syntactic(rep)) return false;
    for (Int e = 0; e <= rep.degree(); ++e)
        if (!K.is_in_Fq(rep.coeff(e))) return false;
    return true;
}

Poly interpolate_orbit_assignment(const FieldCtx& ctx, const OrbitAssignment& assign,
                                  Int size_guard) {
    if (ctx.order() > size_guard || ctx.order() > (1LL << 13))
        throw SizeGuardError("field too large for orbit interpolation");
    auto orbits = ctx.galois_orbits();
    if (assign.values.size() != orbits.size())
        throw InvalidInputError("orbit assignment length must equal the orbit count, expected " +
                                std::to_string(orbits.size()));
    std::vector<std::pair<FFElement, FFElement>> points;
    points.reserve(static_cast<std::size_t>(ctx.order()));
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (const FFElement& a : orbits[i]) points.emplace_back(a, assign.values[i]);
    return lagrange_interpolate(ctx, points);
}

Poly compose_with_irreducible(const Poly& i, const Poly& s, Int size_guard) {
    const FieldCtx& K = i.ctx();
    if (i.degree() < 1) throw InvalidInputError("composition needs a non-constant polynomial");
    for (Int e = 0; e <= i.degree(); ++e)
        if (!K.is_in_Fq(i.coeff(e)))
            throw InvalidInputError("outer polynomial must have coefficients in F_q");
    for (const FFElement& c : K.subfield_Fq_elements(size_guard))
        if (K.is_zero(i.eval(c)))
            throw InvalidInputError("outer polynomial has a root in F_q");
    if (!in_Vqs(s, size_guard)) throw InvalidInputError("inner polynomial is not in V_qs");
    return compose(i, s);
}

Poly power_minus_nonresidue(const Poly& s, Int mexp, const FFElement& beta, Int size_guard) {
    const FieldCtx& K = s.ctx();
    if (mexp < 2) throw InvalidInputError("exponent must be at least 2");
    if (!K.is_in_Fq(beta)) throw InvalidInputError("beta must lie in F_q");
    for (const FFElement& c : K.subfield_Fq_elements(size_guard))
        if (K.pow(c, mexp) == beta)
            throw InvalidInputError("beta is an m-th power in F_q");
    if (!in_Vqs(s, size_guard)) throw InvalidInputError("inner polynomial is not in V_qs");
    return poly_pow(s, mexp) - Poly::constant(K, beta);
}

Int count_zero_free_orbit_functions(const FieldCtx& ctx, Int size_guard) {
    if (ctx.order() > size_guard) throw SizeGuardError("field too large to enumerate orbits");
    Int orbits = orbit_count_formula(ctx.q(), ctx.n());
    Int base = ctx.q() - 1;
    Int result = 1;
    for (Int i = 0; i < orbits; ++i) {
        if (base != 0 && result > (1LL << 62) / base)
            throw SizeGuardError("zero-free function count overflows 64 bits");
        result *= base;
    }
    return result;
}

} // namespace qsplit
