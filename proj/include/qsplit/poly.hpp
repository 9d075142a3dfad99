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

#ifndef QSPLIT_POLY_HPP
#define QSPLIT_POLY_HPP

#include <memory>
#include <utility>
#include <vector>

#include "qsplit/finite_field.hpp"

namespace qsplit {

/// Dense univariate polynomial over F_{q^n}. Trailing zero coefficients are
/// stripped; the zero polynomial is the empty coefficient vector and reports
/// degree() == kZeroPolyDegree. The field context is held by shared pointer,
/// so polynomials stay valid independently of the context they were built
/// from; contexts compare by value.
class Poly {
  public:
    static constexpr Int kZeroPolyDegree = -1; // sentinel for deg(0)

    explicit Poly(const FieldCtx& ctx)
        : ctx_(std::make_shared<FieldCtx>(ctx)) {}
    Poly(const FieldCtx& ctx, std::vector<FFElement> coeffs);
    Poly(std::shared_ptr<const FieldCtx> ctx, std::vector<FFElement> coeffs);

    static Poly zero(const FieldCtx& ctx) { return Poly(ctx); }
    static Poly constant(const FieldCtx& ctx, const FFElement& c);
    static Poly monomial(const FieldCtx& ctx, Int degree, const FFElement& c);
    static Poly x(const FieldCtx& ctx);
    /// Polynomial with prime-field integer coefficients, low degree first.
    static Poly from_ints(const FieldCtx& ctx, const std::vector<Int>& ints);

    const FieldCtx& ctx() const { return *ctx_; }
    std::shared_ptr<const FieldCtx> ctx_ptr() const { return ctx_; }
    /// New polynomial over the same (shared) context.
    Poly spawn(std::vector<FFElement> coeffs) const { return Poly(ctx_, std::move(coeffs)); }

    Int degree() const { return static_cast<Int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const std::vector<FFElement>& coeffs() const { return coeffs_; }
    /// Coefficient of t^i (zero beyond the degree).
    FFElement coeff(Int i) const;
    FFElement leading() const; // throws on zero polynomial

    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator-() const;
    Poly scaled(const FFElement& c) const;

    /// Horner evaluation; the zero polynomial evaluates to 0.
    FFElement eval(const FFElement& a) const;

    Poly monic() const;     // throws on zero polynomial
    Poly derivative() const;

  private:
    std::shared_ptr<const FieldCtx> ctx_;
    std::vector<FFElement> coeffs_;
    void normalize();
};

/// a = q*b + r with deg r < deg b; throws on b = 0 or mixed contexts.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// base^e mod m, e >= 0.
Poly pow_mod(const Poly& base, Int e, const Poly& m);
/// f(g).
Poly compose(const Poly& f, const Poly& g);
/// f^e, e >= 0.
Poly poly_pow(const Poly& f, Int e);
/// Coefficient-wise p-th power with exponents multiplied by p: f(t)^p.
Poly poly_frobenius_p(const Poly& f);

/// Canonical order: by degree, then coefficient vectors compared low degree
/// first in the canonical element order. Stable across runs and platforms.
int poly_compare(const Poly& a, const Poly& b);

/// The unique polynomial of degree < q^n congruent to f mod (t^(q^n) - t);
/// agrees with f as a function on F_{q^n}.
Poly reduce_mod_field_poly(const Poly& f);

/// Irreducible factorization: squarefree split, then distinct-degree, then
/// Cantor-Zassenhaus equal-degree splitting driven by a deterministic stream
/// seeded with `seed`. Factors are monic, sorted canonically; multiplying
/// them out (times the leading coefficient) reproduces the input exactly.
std::vector<std::pair<Poly, Int>> factorize(const Poly& f,
                                            unsigned long long seed = kDefaultFactorSeed);

/// All roots of f in F_{q^n}, sorted canonically. f != 0.
std::vector<FFElement> roots_in_field(const Poly& f,
                                      unsigned long long seed = kDefaultFactorSeed);

/// Unique polynomial of degree < #points through the given points; abscissae
/// must be pairwise distinct.
Poly lagrange_interpolate(const FieldCtx& ctx,
                          const std::vector<std::pair<FFElement, FFElement>>& points);

} // namespace qsplit

#endif // QSPLIT_POLY_HPP
