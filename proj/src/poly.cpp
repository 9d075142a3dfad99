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

#include "qsplit/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace qsplit {

namespace {
constexpr Int kKaratsubaThreshold = 64;

void require_same_ctx(const Poly& a, const Poly& b) {
    if (!(a.ctx() == b.ctx())) throw InvalidInputError("polynomials from different field contexts");
}
} // namespace

Poly::Poly(const FieldCtx& ctx, std::vector<FFElement> coeffs)
    : Poly(std::make_shared<FieldCtx>(ctx), std::move(coeffs)) {}

Poly::Poly(std::shared_ptr<const FieldCtx> ctx, std::vector<FFElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const FFElement& c : coeffs_)
        if (static_cast<Int>(c.c.size()) != ctx_->ext_degree())
            throw InvalidInputError("coefficient does not belong to the field context");
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && ctx_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::constant(const FieldCtx& ctx, const FFElement& c) {
    return Poly(ctx, std::vector<FFElement>{c});
}

Poly Poly::monomial(const FieldCtx& ctx, Int degree, const FFElement& c) {
    if (degree < 0) throw InvalidInputError("monomial degree must be non-negative");
    if (ctx.is_zero(c)) return Poly(ctx);
    std::vector<FFElement> v(static_cast<std::size_t>(degree) + 1, ctx.zero());
    v.back() = c;
    return Poly(ctx, std::move(v));
}

Poly Poly::x(const FieldCtx& ctx) { return monomial(ctx, 1, ctx.one()); }

Poly Poly::from_ints(const FieldCtx& ctx, const std::vector<Int>& ints) {
    std::vector<FFElement> v;
    v.reserve(ints.size());
    for (Int k : ints) v.push_back(ctx.from_int(k));
    return Poly(ctx, std::move(v));
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == ctx_->one(); }

FFElement Poly::coeff(Int i) const {
    if (i < 0 || i > degree()) return ctx_->zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

FFElement Poly::leading() const {
    if (is_zero()) throw InvalidInputError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::operator==(const Poly& other) const {
    return *ctx_ == *other.ctx_ && coeffs_ == other.coeffs_;
}

Poly Poly::operator+(const Poly& other) const {
    require_same_ctx(*this, other);
    const FieldCtx& K = *ctx_;
    std::vector<FFElement> v(std::max(coeffs_.size(), other.coeffs_.size()), K.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] = K.add(v[i], coeffs_[i]);
        if (i < other.coeffs_.size()) v[i] = K.add(v[i], other.coeffs_[i]);
    }
    return spawn(std::move(v));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
    std::vector<FFElement> v = coeffs_;
    for (FFElement& c : v) c = ctx_->neg(c);
    return spawn(std::move(v));
}

Poly Poly::scaled(const FFElement& c) const {
    std::vector<FFElement> v = coeffs_;
    for (FFElement& e : v) e = ctx_->mul(e, c);
    return spawn(std::move(v));
}

namespace {

std::vector<FFElement> mul_schoolbook(const FieldCtx& K, const std::vector<FFElement>& a,
                                      const std::vector<FFElement>& b) {
    std::vector<FFElement> r(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    return r;
}

// One Karatsuba tier above the schoolbook threshold.
std::vector<FFElement> mul_rec(const FieldCtx& K, const std::vector<FFElement>& a,
                               const std::vector<FFElement>& b) {
    if (a.empty() || b.empty()) return {};
    if (static_cast<Int>(std::min(a.size(), b.size())) <= kKaratsubaThreshold)
        return mul_schoolbook(K, a, b);
    std::size_t h = std::max(a.size(), b.size()) / 2;
    auto lo = [&](const std::vector<FFElement>& v) {
        return std::vector<FFElement>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(h, v.size())));
    };
    auto hi = [&](const std::vector<FFElement>& v) {
        return v.size() > h ? std::vector<FFElement>(v.begin() + static_cast<std::ptrdiff_t>(h), v.end())
                            : std::vector<FFElement>{};
    };
    auto addv = [&](std::vector<FFElement> x, const std::vector<FFElement>& y) {
        if (x.size() < y.size()) x.resize(y.size(), K.zero());
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = K.add(x[i], y[i]);
        return x;
    };
    std::vector<FFElement> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    std::vector<FFElement> z0 = mul_rec(K, a0, b0);
    std::vector<FFElement> z2 = (a1.empty() || b1.empty()) ? std::vector<FFElement>{}
                                                           : mul_rec(K, a1, b1);
    std::vector<FFElement> z1 = mul_rec(K, addv(a0, a1), addv(b0, b1));
    auto subv = [&](std::vector<FFElement>& x, const std::vector<FFElement>& y) {
        if (x.size() < y.size()) x.resize(y.size(), K.zero());
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = K.sub(x[i], y[i]);
    };
    subv(z1, z0);
    subv(z1, z2);
    std::vector<FFElement> r(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < z0.size(); ++i) r[i] = K.add(r[i], z0[i]);
    for (std::size_t i = 0; i < z1.size(); ++i)
        if (i + h < r.size()) r[i + h] = K.add(r[i + h], z1[i]);
    for (std::size_t i = 0; i < z2.size(); ++i)
        if (i + 2 * h < r.size()) r[i + 2 * h] = K.add(r[i + 2 * h], z2[i]);
    return r;
}

} // namespace

Poly Poly::operator*(const Poly& other) const {
    require_same_ctx(*this, other);
    if (is_zero() || other.is_zero()) return spawn({});
    return spawn(mul_rec(*ctx_, coeffs_, other.coeffs_));
}

FFElement Poly::eval(const FFElement& a) const {
    FFElement acc = ctx_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = ctx_->add(ctx_->mul(acc, a), coeffs_[i]);
    return acc;
}

Poly Poly::monic() const {
    FFElement lc = leading();
    if (lc == ctx_->one()) return *this;
    return scaled(ctx_->inv(lc));
}

Poly Poly::derivative() const {
    if (degree() < 1) return spawn({});
    std::vector<FFElement> v;
    v.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        FFElement k = ctx_->from_int(static_cast<Int>(i));
        v.push_back(ctx_->mul(coeffs_[i], k));
    }
    return spawn(std::move(v));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    if (b.is_zero()) throw InvalidInputError("division by the zero polynomial");
    const FieldCtx& K = a.ctx();
    if (a.degree() < b.degree()) return {a.spawn({}), a};
    FFElement inv_lc = K.inv(b.leading());
    std::vector<FFElement> rem = a.coeffs();
    std::vector<FFElement> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, K.zero());
    for (Int i = a.degree(); i >= b.degree(); --i) {
        FFElement c = rem[static_cast<std::size_t>(i)];
        if (K.is_zero(c)) continue;
        FFElement f = K.mul(c, inv_lc);
        quo[static_cast<std::size_t>(i - b.degree())] = f;
        for (Int j = 0; j <= b.degree(); ++j) {
            std::size_t idx = static_cast<std::size_t>(i - b.degree() + j);
            rem[idx] = K.sub(rem[idx], K.mul(f, b.coeff(j)));
        }
    }
    return {a.spawn(std::move(quo)), a.spawn(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

Poly pow_mod(const Poly& base, Int e, const Poly& m) {
    if (e < 0) throw InvalidInputError("pow_mod expects a non-negative exponent");
    const FieldCtx& K = base.ctx();
    Poly result = Poly::constant(K, K.one());
    Poly b = divrem(base, m).second;
    while (e > 0) {
        if (e & 1) result = divrem(result * b, m).second;
        b = divrem(b * b, m).second;
        e >>= 1;
    }
    return result;
}

Poly compose(const Poly& f, const Poly& g) {
    require_same_ctx(f, g);
    const FieldCtx& K = f.ctx();
    Poly acc = f.spawn({});
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * g + Poly::constant(K, f.coeffs()[i]);
    return acc;
}

Poly poly_pow(const Poly& f, Int e) {
    if (e < 0) throw InvalidInputError("poly_pow expects a non-negative exponent");
    const FieldCtx& K = f.ctx();
    Poly result = Poly::constant(K, K.one());
    Poly b = f;
    while (e > 0) {
        if (e & 1) result = result * b;
        b = b * b;
        e >>= 1;
    }
    return result;
}

Poly poly_frobenius_p(const Poly& f) {
    const FieldCtx& K = f.ctx();
    if (f.is_zero()) return f;
    Int p = K.p();
    std::vector<FFElement> v(static_cast<std::size_t>(f.degree() * p) + 1, K.zero());
    for (Int e = 0; e <= f.degree(); ++e)
        v[static_cast<std::size_t>(e * p)] = K.frobenius_p(f.coeff(e));
    return f.spawn(std::move(v));
}

int poly_compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const FieldCtx& K = a.ctx();
    for (Int i = 0; i <= a.degree(); ++i) {
        int c = K.compare(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

Poly reduce_mod_field_poly(const Poly& f) {
    const FieldCtx& K = f.ctx();
    Int Q = K.order();
    if (f.degree() < Q) return f;
    // t^e == t^(1 + (e-1) mod (Q-1)) for e >= Q
    std::map<Int, FFElement> acc;
    for (Int e = 0; e <= f.degree(); ++e) {
        FFElement c = f.coeff(e);
        if (K.is_zero(c)) continue;
        Int red = e < Q ? e : 1 + (e - 1) % (Q - 1);
        auto it = acc.find(red);
        if (it == acc.end())
            acc.emplace(red, c);
        else
            it->second = K.add(it->second, c);
    }
    Int maxdeg = acc.empty() ? 0 : acc.rbegin()->first;
    std::vector<FFElement> v(static_cast<std::size_t>(maxdeg) + 1, K.zero());
    for (auto& [e, c] : acc) v[static_cast<std::size_t>(e)] = c;
    return f.spawn(std::move(v));
}

// ---- factorization ----------------------------------------------------------

namespace {

// p-th root of a polynomial whose exponents are all multiples of p.
Poly poly_pth_root(const Poly& f) {
    const FieldCtx& K = f.ctx();
    Int p = K.p();
    std::vector<FFElement> v(static_cast<std::size_t>(f.degree() / p) + 1, K.zero());
    for (Int e = 0; e <= f.degree(); ++e) {
        if (K.is_zero(f.coeff(e))) continue;
        if (e % p != 0) throw Error("polynomial is not a p-th power");
        v[static_cast<std::size_t>(e / p)] = K.pth_root(f.coeff(e));
    }
    return f.spawn(std::move(v));
}

void squarefree_decompose(const Poly& f, Int mult, std::vector<std::pair<Poly, Int>>& out) {
    const FieldCtx& K = f.ctx();
    Int p = K.p();
    Poly df = f.derivative();
    if (df.is_zero()) {
        squarefree_decompose(poly_pth_root(f), mult * p, out);
        return;
    }
    Poly c = gcd(f, df);
    Poly w = divrem(f, c).first;
    Int i = 1;
    while (w.degree() != 0) {
        Poly y = gcd(w, c);
        Poly z = divrem(w, y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
        w = y;
        c = divrem(c, y).first;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(poly_pth_root(c), mult * p, out);
}

Poly random_poly_below(const FieldCtx& K, Int deg_bound, std::mt19937_64& rng) {
    std::vector<FFElement> v;
    v.reserve(static_cast<std::size_t>(deg_bound));
    for (Int i = 0; i < deg_bound; ++i)
        v.push_back(K.from_value(static_cast<Int>(rng() % static_cast<unsigned long long>(K.order()))));
    return Poly(K, std::move(v));
}

// Equal-degree splitting of a squarefree product of irreducibles of degree d.
void edf(const Poly& f, Int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const FieldCtx& K = f.ctx();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    Int Q = K.order();
    Poly one = Poly::constant(K, K.one());
    while (true) {
        Poly r = random_poly_below(K, f.degree(), rng);
        if (r.degree() < 1) continue;
        Poly g = gcd(r, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(divrem(f, g).first, d, rng, out);
            return;
        }
        Poly a(K);
        if (K.p() == 2) {
            // trace map over F_2: sum of r^(2^i), i < d*log2(Q)
            Int rounds = d * K.ext_degree();
            Poly t = divrem(r, f).second;
            a = t;
            for (Int i = 1; i < rounds; ++i) {
                t = divrem(t * t, f).second;
                a = a + t;
            }
        } else {
            // r^((Q^d - 1)/2) = (r^(1 + Q + ... + Q^(d-1)))^((Q-1)/2)
            Poly t = divrem(r, f).second;
            Poly norm = t;
            for (Int i = 1; i < d; ++i) {
                t = pow_mod(t, Q, f);
                norm = divrem(norm * t, f).second;
            }
            a = pow_mod(norm, (Q - 1) / 2, f) - one;
        }
        Poly g2 = gcd(a, f);
        if (g2.degree() > 0 && g2.degree() < f.degree()) {
            edf(g2, d, rng, out);
            edf(divrem(f, g2).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<Poly, Int>> factorize(const Poly& f, unsigned long long seed) {
    if (f.is_zero()) throw InvalidInputError("cannot factor the zero polynomial");
    const FieldCtx& K = f.ctx();
    std::vector<std::pair<Poly, Int>> result;
    if (f.degree() == 0) return result;

    std::vector<std::pair<Poly, Int>> squarefree;
    squarefree_decompose(f.monic(), 1, squarefree);

    std::mt19937_64 rng(seed);
    Int Q = K.order();
    for (auto& [sf, mult] : squarefree) {
        Poly rest = sf;
        Poly h = divrem(Poly::x(K), rest).second;
        Int d = 0;
        while (rest.degree() > 0 && 2 * (d + 1) <= rest.degree()) {
            ++d;
            h = pow_mod(h, Q, rest);
            Poly g = gcd(h - Poly::x(K), rest);
            if (g.degree() > 0) {
                std::vector<Poly> parts;
                edf(g, d, rng, parts);
                for (Poly& irr : parts) result.emplace_back(std::move(irr), mult);
                rest = divrem(rest, g).first;
                if (rest.degree() > 0) h = divrem(h, rest).second;
            }
        }
        if (rest.degree() > 0) result.emplace_back(rest.monic(), mult);
    }

    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        return poly_compare(a.first, b.first) < 0;
    });
    return result;
}

std::vector<FFElement> roots_in_field(const Poly& f, unsigned long long seed) {
    if (f.is_zero()) throw InvalidInputError("root finding on the zero polynomial");
    const FieldCtx& K = f.ctx();
    std::vector<FFElement> roots;
    if (f.degree() == 0) return roots;
    // gcd(f, t^Q - t) collects the distinct roots in the field
    Poly h = pow_mod(Poly::x(K), K.order(), f);
    Poly lin = gcd(h - Poly::x(K), f);
    if (lin.degree() <= 0) return roots;
    std::mt19937_64 rng(seed);
    std::vector<Poly> parts;
    edf(lin, 1, rng, parts);
    for (const Poly& l : parts) roots.push_back(K.neg(l.coeff(0)));
    std::sort(roots.begin(), roots.end(), [&K](const FFElement& a, const FFElement& b) {
        return K.compare(a, b) < 0;
    });
    return roots;
}

Poly lagrange_interpolate(const FieldCtx& ctx,
                          const std::vector<std::pair<FFElement, FFElement>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw InvalidInputError("duplicate abscissa in interpolation");
    // Newton form, built incrementally.
    Poly result(ctx);
    Poly basis = Poly::constant(ctx, ctx.one());
    for (const auto& [xi, yi] : points) {
        FFElement cur = result.eval(xi);
        FFElement denom = basis.eval(xi);
        FFElement coeff = ctx.mul(ctx.sub(yi, cur), ctx.inv(denom));
        result = result + basis.scaled(coeff);
        basis = basis * (Poly::x(ctx) - Poly::constant(ctx, xi));
    }
    return result;
}

} // namespace qsplit
