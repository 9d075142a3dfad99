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

#ifndef QSPLIT_FINITE_FIELD_HPP
#define QSPLIT_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "qsplit/errors.hpp"

namespace qsplit {

using Int = std::int64_t;

/// Element of F_{q^n} = F_p[u]/(modulus), stored as the coefficient vector of
/// its residue: c[i] is the coefficient of u^i, 0 <= c[i] < p, length m*n.
/// Representation is canonical: equal vectors <=> equal elements.
struct FFElement {
    std::vector<Int> c;
    bool operator==(const FFElement&) const = default;
};

/// The field tower F_p < F_q = F_{p^m} < F_{q^n}, all arithmetic in the single
/// quotient ring F_p[u]/(modulus) with deg(modulus) = m*n. F_q is recognised
/// as the fixed field of a -> a^q rather than as a separate ring.
///
/// Construction picks the least monic irreducible modulus of degree m*n over
/// F_p, candidates ordered by the integer value sum(c_i * p^i) of their
/// non-leading coefficients, so repeated construction is bit-identical.
class FieldCtx {
  public:
    /// Deterministic construction with the auto-selected modulus.
    FieldCtx(Int p, Int m, Int n);
    /// Construction with a user-supplied monic irreducible modulus
    /// (coefficient vector of length m*n+1, low degree first).
    FieldCtx(Int p, Int m, Int n, std::vector<Int> modulus);

    Int p() const { return p_; }
    Int m() const { return m_; }
    Int n() const { return n_; }
    Int q() const { return q_; }          // p^m
    Int order() const { return order_; }  // q^n
    Int ext_degree() const { return m_ * n_; }
    const std::vector<Int>& modulus() const { return modulus_; }

    bool operator==(const FieldCtx& other) const {
        return p_ == other.p_ && m_ == other.m_ && n_ == other.n_ &&
               modulus_ == other.modulus_;
    }

    // -- element construction ------------------------------------------------
    FFElement zero() const;
    FFElement one() const;
    /// Constant p-prime-field element k mod p.
    FFElement from_int(Int k) const;
    /// Element with value v = sum(c_i p^i); the inverse of value_of.
    FFElement from_value(Int v) const;
    Int value_of(const FFElement& a) const;
    /// Validates length and entry ranges; throws InvalidInputError.
    FFElement element_from_coeffs(const std::vector<Int>& coeffs) const;

    // -- arithmetic ----------------------------------------------------------
    FFElement add(const FFElement& a, const FFElement& b) const;
    FFElement sub(const FFElement& a, const FFElement& b) const;
    FFElement neg(const FFElement& a) const;
    FFElement mul(const FFElement& a, const FFElement& b) const;
    /// Multiplicative inverse via a^(q^n - 2); throws on zero.
    FFElement inv(const FFElement& a) const;
    /// Square-and-multiply, e >= 0.
    FFElement pow(const FFElement& a, Int e) const;

    bool is_zero(const FFElement& a) const;
    /// Canonical element order: compare by value_of.
    int compare(const FFElement& a, const FFElement& b) const;

    // -- tower structure -----------------------------------------------------
    /// a^q. Applying it n times is the identity.
    FFElement frobenius_q(const FFElement& a) const;
    /// a^p.
    FFElement frobenius_p(const FFElement& a) const;
    /// The unique b with b^p = a.
    FFElement pth_root(const FFElement& a) const;
    /// a + a^q + ... + a^(q^(n-1)); lands in F_q.
    FFElement trace_to_Fq(const FFElement& a) const;
    /// a^(1 + q + ... + q^(n-1)); lands in F_q.
    FFElement norm_to_Fq(const FFElement& a) const;
    /// True iff a^q = a.
    bool is_in_Fq(const FFElement& a) const;

    /// Orbits of a -> a^q on all of F_{q^n}, ordered by least element value,
    /// members sorted. Orbit sizes divide n.
    std::vector<std::vector<FFElement>> galois_orbits() const;

    /// F_p-basis of F_q inside the quotient ring (kernel of frobenius_q - id).
    std::vector<FFElement> subfield_Fq_basis() const;
    /// All q elements of F_q, sorted canonically. Guarded.
    std::vector<FFElement> subfield_Fq_elements(Int size_guard = kDefaultSizeGuard) const;
    /// F_p-basis of the kernel of trace_to_Fq; dimension m*(n-1).
    std::vector<FFElement> trace_zero_basis() const;

  private:
    Int p_, m_, n_, q_, order_;
    std::vector<Int> modulus_;

    void validate_params() const;
    std::vector<Int> reduce_vec(std::vector<Int> raw) const;
};

/// Number of Galois orbits of F_{q^n} over F_q: sum over d | n of the count
/// of monic irreducibles of degree d over F_q (Moebius formula). Must equal
/// galois_orbits().size().
Int orbit_count_formula(Int q, Int n);

/// F_p linear algebra on coefficient vectors, used for kernel bases and for
/// membership tests in images of additive maps.
struct FpLinearMap {
    Int p = 0;
    // columns[j] = image of the j-th standard basis vector.
    std::vector<std::vector<Int>> columns;

    /// Matrix of an F_p-linear map a -> f(a) on the quotient ring.
    template <typename F>
    static FpLinearMap from_map(const FieldCtx& ctx, F&& f) {
        FpLinearMap lm;
        lm.p = ctx.p();
        Int d = ctx.ext_degree();
        lm.columns.resize(static_cast<std::size_t>(d));
        for (Int j = 0; j < d; ++j) {
            FFElement e = ctx.zero();
            e.c[static_cast<std::size_t>(j)] = 1;
            lm.columns[static_cast<std::size_t>(j)] = f(e).c;
        }
        return lm;
    }

    std::vector<std::vector<Int>> kernel_basis() const;
    /// One solution of M x = rhs if it exists (columns as matrix), plus the
    /// kernel dimension; empty optional-like flag on no solution.
    bool solve(const std::vector<Int>& rhs, std::vector<Int>& solution,
               Int& kernel_dim) const;
};

} // namespace qsplit

#endif // QSPLIT_FINITE_FIELD_HPP
