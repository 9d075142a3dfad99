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

#include "qsplit/extension.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace qsplit {

namespace {

Int gcd_int(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int ipow(Int base, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) r *= base;
    return r;
}

FFElement frob_p_iter(const FieldCtx& K, FFElement a, Int times) {
    for (Int i = 0; i < times; ++i) a = K.frobenius_p(a);
    return a;
}

Int multiplicity_of(Poly f, const Poly& prime) {
    Int m = 0;
    while (!f.is_zero() && f.degree() >= prime.degree()) {
        auto [q, r] = divrem(f, prime);
        if (!r.is_zero()) break;
        ++m;
        f = q;
    }
    return m;
}

} // namespace

// ---- LinearizedLhs ------------------------------------------------------------

LinearizedLhs LinearizedLhs::p_step(const FieldCtx& ctx, FFElement B) {
    if (ctx.is_zero(B)) throw InvalidInputError("p-step parameter B must be nonzero");
    return LinearizedLhs{Kind::p_step, std::move(B)};
}

Int LinearizedLhs::degree(const FieldCtx& ctx) const {
    if (kind == Kind::full_trace) return ipow(ctx.q(), ctx.n() - 1);
    return ctx.p();
}

FFElement LinearizedLhs::apply(const FieldCtx& ctx, const FFElement& a) const {
    if (kind == Kind::full_trace) return ctx.trace_to_Fq(a);
    FFElement bpow = ctx.pow(b, ctx.p() - 1);
    return ctx.sub(ctx.pow(a, ctx.p()), ctx.mul(bpow, a));
}

Poly LinearizedLhs::as_poly(const FieldCtx& ctx) const {
    if (kind == Kind::p_step) {
        FFElement bpow = ctx.pow(b, ctx.p() - 1);
        return Poly::monomial(ctx, ctx.p(), ctx.one()) - Poly::x(ctx).scaled(bpow);
    }
    Int deg = degree(ctx);
    if (deg > (1LL << 22)) throw SizeGuardError("trace operator too dense to expand");
    std::vector<FFElement> v(static_cast<std::size_t>(deg) + 1, ctx.zero());
    Int e = 1;
    for (Int i = 0; i < ctx.n(); ++i) {
        v[static_cast<std::size_t>(e)] = ctx.one();
        e *= ctx.q();
    }
    return Poly(ctx, std::move(v));
}

std::vector<FFElement> LinearizedLhs::root_space_basis(const FieldCtx& ctx) const {
    if (kind == Kind::full_trace) return ctx.trace_zero_basis();
    return {b};
}

// ---- spec construction ----------------------------------------------------------

namespace {
std::pair<Poly, Poly> normalize_rhs(const FieldCtx& ctx, Poly h, Poly g) {
    if (!(h.ctx() == ctx) || !(g.ctx() == ctx))
        throw InvalidInputError("RHS polynomials belong to a different field context");
    if (g.is_zero()) throw InvalidInputError("denominator g must be nonzero");
    if (h.is_zero()) throw InvalidInputError("RHS is zero (the image of 0): extension is reducible");
    Poly d = gcd(h, g);
    if (d.degree() > 0) {
        h = divrem(h, d).first;
        g = divrem(g, d).first;
    }
    FFElement lc = g.leading();
    if (!(lc == ctx.one())) {
        FFElement ilc = ctx.inv(lc);
        g = g.scaled(ilc);
        h = h.scaled(ilc);
    }
    return {std::move(h), std::move(g)};
}
} // namespace

ArtinSchreierSpec ArtinSchreierSpec::make(const FieldCtx& ctx, LinearizedLhs lhs, Poly h, Poly g,
                                          bool qs_certified) {
    auto [hh, gg] = normalize_rhs(ctx, std::move(h), std::move(g));
    if (hh.degree() < 1 && gg.degree() < 1) throw InvalidInputError("RHS must be non-constant");
    if (lhs.kind == LinearizedLhs::Kind::p_step) {
        if (static_cast<Int>(lhs.b.c.size()) != ctx.ext_degree())
            throw InvalidInputError("p-step parameter does not belong to the field context");
        if (ctx.is_zero(lhs.b)) throw InvalidInputError("p-step parameter B must be nonzero");
    }
    if (qs_certified && (!in_Vqs(hh) || !in_Vqs(gg)))
        throw InvalidInputError("qs-certified spec: h and g must lie in V_qs");
    return ArtinSchreierSpec{ctx, std::move(lhs), std::move(hh), std::move(gg), qs_certified};
}

KummerSpec KummerSpec::make(const FieldCtx& ctx, std::optional<Int> d, Poly h, Poly g,
                            bool qs_certified) {
    auto [hh, gg] = normalize_rhs(ctx, std::move(h), std::move(g));
    Int Q = ctx.order();
    Int dd = d.value_or((Q - 1) / (ctx.q() - 1));
    if (dd < 2) throw InvalidInputError("Kummer exponent d must be at least 2");
    if ((Q - 1) % dd != 0) throw InvalidInputError("Kummer exponent d must divide q^n - 1");
    if (qs_certified && (!in_Vqs(hh) || !in_Vqs(gg)))
        throw InvalidInputError("qs-certified spec: h and g must lie in V_qs");
    return KummerSpec{ctx, dd, std::move(hh), std::move(gg), qs_certified};
}

ArtinSchreierSpec ExtensionSpec::as_artin_schreier() const {
    if (kind != Kind::artin_schreier) throw InvalidInputError("spec is not Artin-Schreier");
    return ArtinSchreierSpec::make(ctx, lhs, h, g, qs_certified);
}

KummerSpec ExtensionSpec::as_kummer() const {
    if (kind != Kind::kummer) throw InvalidInputError("spec is not Kummer");
    return KummerSpec::make(ctx, kummer_d, h, g, qs_certified);
}

// ---- places -------------------------------------------------------------------

PlaceId PlaceId::finite(Poly prime) {
    if (prime.degree() < 1) throw InvalidInputError("finite place needs a non-constant prime");
    if (!(prime.leading() == prime.ctx().one()))
        throw InvalidInputError("finite place prime must be monic");
    Int deg = prime.degree();
    return PlaceId{false, std::move(prime), deg};
}

PlaceId PlaceId::rational(const FieldCtx& ctx, const FFElement& alpha) {
    return finite(Poly::x(ctx) - Poly::constant(ctx, alpha));
}

std::string to_string(PlaceStatus s) {
    switch (s) {
        case PlaceStatus::splits_completely: return "splits_completely";
        case PlaceStatus::totally_ramified: return "totally_ramified";
        case PlaceStatus::tame_ramified: return "tame_ramified";
        case PlaceStatus::unramified_nonsplit: return "unramified_nonsplit";
        case PlaceStatus::unresolved: return "unresolved";
    }
    return "unknown";
}

Int valuation_at(const Poly& h, const Poly& g, const PlaceId& place) {
    if (h.is_zero()) throw InvalidInputError("valuation of the zero function");
    if (place.at_infinity) return g.degree() - h.degree();
    return multiplicity_of(h, *place.prime) - multiplicity_of(g, *place.prime);
}

// ---- irreducibility criteria ----------------------------------------------------

IrreducibilityVerdict coprime_degree_criterion(const Poly& f) {
    const FieldCtx& K = f.ctx();
    Int p = K.p();
    std::set<Int> exps;
    for (Int e = 0; e <= f.degree(); ++e)
        if (!K.is_zero(f.coeff(e))) exps.insert(e);
    for (Int d : exps) {
        if (d < 1 || gcd_int(d, p) != 1) continue;
        bool clean = true;
        for (Int e = d * p; e <= f.degree(); e *= p) {
            if (exps.count(e)) {
                clean = false;
                break;
            }
        }
        if (clean) return IrreducibilityVerdict::irreducible_certified;
    }
    return IrreducibilityVerdict::inconclusive;
}

namespace {

// Yields one reduced-row-echelon basis per proper subspace of F_p^r
// (dimensions 0..r-1; dimension 0 yields the empty basis).
void enumerate_proper_subspaces(Int p, Int r,
                                const std::function<void(const std::vector<std::vector<Int>>&)>& yield) {
    yield({});
    for (Int k = 1; k < r; ++k) {
        std::vector<Int> piv(static_cast<std::size_t>(k));
        for (Int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<std::pair<Int, Int>> free_pos;
            std::vector<bool> is_piv(static_cast<std::size_t>(r), false);
            for (Int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
            for (Int i = 0; i < k; ++i)
                for (Int j = piv[static_cast<std::size_t>(i)] + 1; j < r; ++j)
                    if (!is_piv[static_cast<std::size_t>(j)]) free_pos.emplace_back(i, j);
            std::vector<Int> fill(free_pos.size(), 0);
            while (true) {
                std::vector<std::vector<Int>> basis(
                    static_cast<std::size_t>(k), std::vector<Int>(static_cast<std::size_t>(r), 0));
                for (Int i = 0; i < k; ++i)
                    basis[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
                for (std::size_t t = 0; t < free_pos.size(); ++t)
                    basis[static_cast<std::size_t>(free_pos[t].first)]
                         [static_cast<std::size_t>(free_pos[t].second)] = fill[t];
                yield(basis);
                std::size_t pos = 0;
                while (pos < fill.size() && ++fill[pos] == p) fill[pos++] = 0;
                if (pos == fill.size()) break;
            }
            Int i = k - 1;
            while (i >= 0 && piv[static_cast<std::size_t>(i)] == r - k + i) --i;
            if (i < 0) break;
            ++piv[static_cast<std::size_t>(i)];
            for (Int j = i + 1; j < k; ++j)
                piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

Int gaussian_subspace_count(Int p, Int r) {
    const Int kCap = 1LL << 40;
    Int total = 0;
    for (Int k = 0; k <= r; ++k) {
        Int val = 1;
        bool overflow = false;
        for (Int i = 0; i < k; ++i) {
            Int num = ipow(p, r - i) - 1;
            Int den = ipow(p, i + 1) - 1;
            if (num > 0 && val > kCap / num) {
                overflow = true;
                break;
            }
            val = val * num / den;
        }
        if (overflow) return kCap;
        total += val;
        if (total > kCap) return kCap;
    }
    return total;
}

FFElement combine(const FieldCtx& K, const std::vector<FFElement>& basis,
                  const std::vector<Int>& digits) {
    FFElement e = K.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (digits[i] == 0) continue;
        FFElement scaled = basis[i];
        for (Int& cc : scaled.c) cc = cc * digits[i] % K.p();
        e = K.add(e, scaled);
    }
    return e;
}

std::vector<FFElement> span_elements(const FieldCtx& K, const std::vector<FFElement>& basis) {
    std::vector<FFElement> out;
    std::vector<Int> digits(basis.size(), 0);
    while (true) {
        out.push_back(combine(K, basis, digits));
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == K.p()) digits[k++] = 0;
        if (k == digits.size()) break;
    }
    return out;
}

Poly product_of_linear(const FieldCtx& K, const std::vector<FFElement>& roots) {
    Poly acc = Poly::constant(K, K.one());
    Poly x = Poly::x(K);
    for (const FFElement& r : roots) acc = acc * (x - Poly::constant(K, r));
    return acc;
}

// additive coefficients c_j (on T^(p^j)); all other coefficients must vanish
std::vector<FFElement> additive_coefficients(const Poly& L) {
    const FieldCtx& K = L.ctx();
    Int p = K.p();
    std::set<Int> powers;
    Int e = 1;
    while (e <= L.degree()) {
        powers.insert(e);
        if (e > L.degree() / p) break;
        e *= p;
    }
    for (Int i = 0; i <= L.degree(); ++i)
        if (!powers.count(i) && !K.is_zero(L.coeff(i)))
            throw Error("subspace product is not an additive polynomial");
    std::vector<FFElement> cs;
    for (Int pe = 1; pe <= L.degree(); pe *= p) {
        cs.push_back(L.coeff(pe));
        if (pe > L.degree() / p) break;
    }
    return cs;
}

} // namespace

SubgroupImageResult subgroup_image_test(const FieldCtx& ctx, const LinearizedLhs& lhs,
                                        const Poly& f, Int dim_cap) {
    SubgroupImageResult out;
    if (f.is_zero()) {
        out.kind = SubgroupImageResult::Kind::reducible_witness;
        out.witness_g = Poly::zero(ctx);
        return out;
    }
    if (coprime_degree_criterion(f) == IrreducibilityVerdict::irreducible_certified) {
        out.kind = SubgroupImageResult::Kind::irreducible_certified;
        return out;
    }
    std::vector<FFElement> vbasis = lhs.root_space_basis(ctx);
    Int r = static_cast<Int>(vbasis.size());
    if (r > dim_cap) throw SizeGuardError("root space dimension exceeds the guard");
    Int p = ctx.p();
    if (ipow(p, r) > (1LL << 16) || gaussian_subspace_count(p, r) > (1LL << 20)) {
        out.kind = SubgroupImageResult::Kind::inconclusive;
        return out;
    }
    std::vector<FFElement> v_elements = span_elements(ctx, vbasis);

    bool found = false;
    std::vector<FFElement> witness_basis;
    Poly witness_g = Poly::zero(ctx);

    enumerate_proper_subspaces(p, r, [&](const std::vector<std::vector<Int>>& rows) {
        if (found) return;
        std::vector<FFElement> wbasis;
        for (const auto& row : rows) wbasis.push_back(combine(ctx, vbasis, row));
        Poly Lw = product_of_linear(ctx, span_elements(ctx, wbasis));
        std::set<Int> seen;
        std::vector<FFElement> wprime;
        for (const FFElement& v : v_elements) {
            FFElement img = Lw.eval(v);
            if (seen.insert(ctx.value_of(img)).second) wprime.push_back(img);
        }
        Poly Lwp = product_of_linear(ctx, wprime);
        std::vector<FFElement> cs = additive_coefficients(Lwp);
        Int s = static_cast<Int>(cs.size()) - 1; // deg L_{W'} = p^s
        Int ps = ipow(p, s);
        if (f.degree() % ps != 0) return;
        Int D = f.degree() / ps;
        // solve f = sum_j cs[j] * g^(p^j), top down; a_i is forced for i >= 1
        std::vector<FFElement> a(static_cast<std::size_t>(D) + 1, ctx.zero());
        for (Int i = D; i >= 1; --i) {
            FFElement rhs = f.coeff(i * ps);
            for (Int j = 0; j < s; ++j) {
                Int t = i * ipow(p, s - j);
                if (t > D) continue;
                rhs = ctx.sub(rhs, ctx.mul(cs[static_cast<std::size_t>(j)],
                                           ctx.pow(a[static_cast<std::size_t>(t)], ipow(p, j))));
            }
            FFElement val = rhs; // cs[s] = 1 (monic)
            for (Int k = 0; k < s; ++k) val = ctx.pth_root(val);
            a[static_cast<std::size_t>(i)] = val;
        }
        {
            auto lm = FpLinearMap::from_map(ctx, [&](const FFElement& e) {
                FFElement acc = ctx.zero();
                for (Int j = 0; j <= s; ++j)
                    acc = ctx.add(acc,
                                  ctx.mul(cs[static_cast<std::size_t>(j)], ctx.pow(e, ipow(p, j))));
                return acc;
            });
            std::vector<Int> sol;
            Int kd = 0;
            if (!lm.solve(f.coeff(0).c, sol, kd)) return;
            a[0] = FFElement{sol};
        }
        Poly g(ctx, a);
        Poly img = Poly::zero(ctx);
        Poly gp = g;
        for (Int j = 0; j <= s; ++j) {
            img = img + gp.scaled(cs[static_cast<std::size_t>(j)]);
            if (j < s) gp = poly_frobenius_p(gp);
        }
        if (img == f) {
            found = true;
            witness_basis = wbasis;
            witness_g = g;
        }
    });

    if (found) {
        out.kind = SubgroupImageResult::Kind::reducible_witness;
        out.witness_subgroup = witness_basis;
        out.witness_g = witness_g;
    } else {
        out.kind = SubgroupImageResult::Kind::irreducible_certified;
    }
    return out;
}

// ---- pole reduction at infinity ------------------------------------------------

PoleReduction as_reduce_pole(const FieldCtx& ctx, const FFElement& B, Poly w) {
    if (ctx.is_zero(B)) throw InvalidInputError("step parameter B must be nonzero");
    PoleReduction out{PoleReduction::Status::nonnegative, Poly::zero(ctx), {}};
    Int p = ctx.p();
    FFElement bpow = ctx.pow(B, p - 1);
    while (w.degree() >= 1) {
        Int d = w.degree();
        if (d % p != 0) {
            out.status = PoleReduction::Status::coprime_pole;
            out.reduced = w;
            return out;
        }
        FFElement c = w.leading();
        FFElement croot = ctx.pth_root(c);
        Int k = d / p;
        // w -= (c' x^k)^p - B^(p-1) c' x^k
        w = w - Poly::monomial(ctx, d, c) + Poly::monomial(ctx, k, ctx.mul(bpow, croot));
        out.log.emplace_back(k, croot);
    }
    FFElement c0 = w.is_zero() ? ctx.zero() : w.coeff(0);
    auto lm = FpLinearMap::from_map(ctx, [&](const FFElement& e) {
        return ctx.sub(ctx.pow(e, p), ctx.mul(bpow, e));
    });
    std::vector<Int> sol;
    Int kd = 0;
    out.status = lm.solve(c0.c, sol, kd) ? PoleReduction::Status::degenerate
                                         : PoleReduction::Status::nonnegative;
    out.reduced = w;
    return out;
}

// ---- tower construction ----------------------------------------------------------

namespace {

// additive polynomials as sparse maps: exponent j (for T^(p^j)) -> coefficient
using AdditiveForm = std::map<Int, FFElement>;

AdditiveForm additive_compose(const FieldCtx& K, const AdditiveForm& outer,
                              const AdditiveForm& inner) {
    AdditiveForm out;
    for (const auto& [i, fi] : outer) {
        for (const auto& [j, gj] : inner) {
            FFElement coeff = K.mul(fi, frob_p_iter(K, gj, i));
            auto it = out.find(i + j);
            if (it == out.end())
                out.emplace(i + j, coeff);
            else
                it->second = K.add(it->second, coeff);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = K.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

std::vector<TowerStep> build_tower(const ArtinSchreierSpec& spec) {
    const FieldCtx& K = spec.ctx;
    if (spec.lhs.kind != LinearizedLhs::Kind::full_trace)
        throw InvalidInputError("tower construction needs the full-trace form");
    Int p = K.p();
    Int r = K.m() * (K.n() - 1);
    std::vector<FFElement> basis = K.trace_zero_basis();
    if (static_cast<Int>(basis.size()) != r) throw Error("trace-zero space has unexpected dimension");

    AdditiveForm trace_form;
    for (Int i = 0; i < K.n(); ++i) trace_form.emplace(i * K.m(), K.one());

    std::vector<Int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    Int attempts = 0;
    do {
        if (++attempts > 40320) break;
        // b_1..b_r in permuted order; beta_{r,j} = b_{r-j+1}
        std::vector<FFElement> beta(static_cast<std::size_t>(r + 1), K.zero());
        for (Int j = 1; j <= r; ++j)
            beta[static_cast<std::size_t>(j)] =
                basis[static_cast<std::size_t>(perm[static_cast<std::size_t>(r - j)])];
        std::vector<FFElement> B(static_cast<std::size_t>(r + 1), K.zero());
        bool ok = true;
        for (Int i = r; i >= 1; --i) {
            B[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)];
            if (K.is_zero(B[static_cast<std::size_t>(i)])) {
                ok = false;
                break;
            }
            FFElement bpow = K.pow(B[static_cast<std::size_t>(i)], p - 1);
            for (Int j = 1; j < i; ++j) {
                const FFElement& x = beta[static_cast<std::size_t>(j)];
                beta[static_cast<std::size_t>(j)] = K.sub(K.pow(x, p), K.mul(bpow, x));
            }
        }
        if (!ok) continue;
        // the step maps must compose to the full trace operator
        AdditiveForm comp;
        comp.emplace(0, K.one());
        for (Int i = r; i >= 1; --i) {
            AdditiveForm step;
            step.emplace(1, K.one());
            step.emplace(0, K.neg(K.pow(B[static_cast<std::size_t>(i)], p - 1)));
            comp = additive_compose(K, step, comp);
        }
        if (comp == trace_form) {
            std::vector<TowerStep> steps;
            for (Int i = 1; i <= r; ++i) steps.push_back(TowerStep{i, B[static_cast<std::size_t>(i)]});
            return steps;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw Error("no basis ordering yields a valid subextension tower");
}

// ---- local analysis above infinity for multi-step towers -------------------------
//
// Elements of the chain of fields above P_infinity are represented as
// K-linear combinations of monomials z_1^{a_1} ... z_r^{a_r} x^b with
// 0 <= a_j < p and b any integer, where z_j is the normalized generator of
// step j (pole order m_j coprime to p at the chain place). Distinct reduced
// monomials have distinct valuations, so valuations of sums are exact.

namespace {

struct TowerKey {
    std::vector<Int> z;
    Int x = 0;
    bool operator<(const TowerKey& o) const {
        if (z != o.z) return z < o.z;
        return x < o.x;
    }
    bool operator==(const TowerKey& o) const = default;
};

using TowerElem = std::map<TowerKey, FFElement>;

class TowerEngine {
  public:
    TowerEngine(const FieldCtx& K, const std::vector<TowerStep>& steps)
        : K_(K), p_(K.p()), r_(static_cast<Int>(steps.size())) {
        B_.resize(static_cast<std::size_t>(r_ + 1), K_.zero());
        Bpow_.resize(static_cast<std::size_t>(r_ + 1), K_.zero());
        for (const TowerStep& s : steps) {
            B_[static_cast<std::size_t>(s.index)] = s.B;
            Bpow_[static_cast<std::size_t>(s.index)] = K_.pow(s.B, p_ - 1);
        }
        w_.resize(static_cast<std::size_t>(r_ + 1));
        m_.resize(static_cast<std::size_t>(r_ + 1), 0);
    }

    /// Normalizes every step; fills pole_orders (m_1..m_r). Returns false if a
    /// step loses its pole or the computation exceeds the budget.
    bool run(const Poly& f, std::vector<Int>& pole_orders) {
        TowerElem W;
        for (Int e = 0; e <= f.degree(); ++e) {
            if (K_.is_zero(f.coeff(e))) continue;
            TowerKey k{std::vector<Int>(static_cast<std::size_t>(r_), 0), e};
            W.emplace(std::move(k), f.coeff(e));
        }
        for (Int i = 1; i <= r_; ++i) {
            TowerElem corrections;
            if (!reduce_step(W, i, corrections)) return false;
            w_[static_cast<std::size_t>(i)] = W;
            if (i < r_) {
                TowerElem next;
                TowerKey zk{std::vector<Int>(static_cast<std::size_t>(r_), 0), 0};
                zk.z[static_cast<std::size_t>(i - 1)] = 1;
                next.emplace(zk, K_.one());
                for (const auto& [k, c] : corrections) add_term(next, k, c);
                W = std::move(next);
            }
        }
        pole_orders.assign(m_.begin() + 1, m_.end());
        return true;
    }

  private:
    const FieldCtx& K_;
    Int p_, r_;
    std::vector<FFElement> B_, Bpow_;
    std::vector<TowerElem> w_;
    std::vector<Int> m_;

    Int valuation(const TowerKey& k, Int level) const {
        Int h = 0;
        for (Int j = 1; j <= level; ++j)
            h += k.z[static_cast<std::size_t>(j - 1)] * m_[static_cast<std::size_t>(j)] *
                 ipow(p_, level - j);
        h += k.x * ipow(p_, level);
        return -h;
    }

    void add_term(TowerElem& e, const TowerKey& k, const FFElement& c) {
        auto it = e.find(k);
        if (it == e.end()) {
            if (!K_.is_zero(c)) e.emplace(k, c);
            return;
        }
        it->second = K_.add(it->second, c);
        if (K_.is_zero(it->second)) e.erase(it);
    }

    // replace z_j^p by B_j^(p-1) z_j + w_j until all exponents are < p
    void reduce_exponents(TowerElem& e) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = e.begin(); it != e.end(); ++it) {
                Int j = -1;
                for (Int t = r_; t >= 1; --t) {
                    if (it->first.z[static_cast<std::size_t>(t - 1)] >= p_) {
                        j = t;
                        break;
                    }
                }
                if (j < 0) continue;
                TowerKey base = it->first;
                FFElement c = it->second;
                e.erase(it);
                base.z[static_cast<std::size_t>(j - 1)] -= p_;
                // c * base * (B_j^(p-1) z_j + w_j)
                TowerKey with_z = base;
                with_z.z[static_cast<std::size_t>(j - 1)] += 1;
                add_term(e, with_z, K_.mul(c, Bpow_[static_cast<std::size_t>(j)]));
                for (const auto& [wk, wc] : w_[static_cast<std::size_t>(j)]) {
                    TowerKey prod = base;
                    for (Int t = 0; t < r_; ++t)
                        prod.z[static_cast<std::size_t>(t)] += wk.z[static_cast<std::size_t>(t)];
                    prod.x += wk.x;
                    add_term(e, prod, K_.mul(c, wc));
                }
                if (e.size() > 200000) throw SizeGuardError("tower reduction exceeded the term budget");
                changed = true;
                break;
            }
        }
    }

    TowerElem mul(const TowerElem& a, const TowerElem& b) {
        TowerElem out;
        for (const auto& [ka, ca] : a) {
            for (const auto& [kb, cb] : b) {
                TowerKey k = ka;
                for (Int t = 0; t < r_; ++t)
                    k.z[static_cast<std::size_t>(t)] += kb.z[static_cast<std::size_t>(t)];
                k.x += kb.x;
                add_term(out, k, K_.mul(ca, cb));
            }
        }
        reduce_exponents(out);
        return out;
    }

    TowerElem monomial_pow_p(const TowerKey& k) {
        TowerElem out;
        TowerKey kp = k;
        for (Int t = 0; t < r_; ++t) kp.z[static_cast<std::size_t>(t)] *= p_;
        kp.x *= p_;
        out.emplace(kp, K_.one());
        reduce_exponents(out);
        return out;
    }

    bool min_valuation(const TowerElem& e, Int level, Int& vmin, TowerKey& kmin) const {
        bool first = true;
        for (const auto& [k, c] : e) {
            Int v = valuation(k, level);
            if (first || v < vmin) {
                vmin = v;
                kmin = k;
                first = false;
            }
        }
        return !first;
    }

    // Reduce the RHS of step i at chain level i-1 until its pole order is
    // coprime to p; accumulates the generator corrections.
    bool reduce_step(TowerElem& W, Int i, TowerElem& corrections) {
        Int level = i - 1;
        for (Int guard = 0; guard < 20000; ++guard) {
            Int vmin = 0;
            TowerKey kmin;
            if (!min_valuation(W, level, vmin, kmin)) return false; // RHS vanished
            if (vmin >= 0) return false;                            // pole lost
            if ((-vmin) % p_ != 0) {
                m_[static_cast<std::size_t>(i)] = -vmin;
                return true;
            }
            // target monomial s with valuation vmin / p
            Int H = (-vmin) / p_;
            TowerKey skey{std::vector<Int>(static_cast<std::size_t>(r_), 0), 0};
            for (Int j = level; j >= 1; --j) {
                Int mj = m_[static_cast<std::size_t>(j)];
                Int digit = 0;
                {
                    // digit = H * mj^{-1} mod p
                    Int hm = ((H % p_) + p_) % p_;
                    Int mjinv = 1, base = ((mj % p_) + p_) % p_, e = p_ - 2;
                    while (e > 0) {
                        if (e & 1) mjinv = mjinv * base % p_;
                        base = base * base % p_;
                        e >>= 1;
                    }
                    digit = hm * mjinv % p_;
                }
                skey.z[static_cast<std::size_t>(j - 1)] = digit;
                H = (H - digit * mj) / p_;
            }
            skey.x = H;
            TowerElem spow = monomial_pow_p(skey);
            Int vq = 0;
            TowerKey kq;
            if (!min_valuation(spow, level, vq, kq) || vq != vmin)
                throw Error("tower reduction lost the leading valuation");
            FFElement kappa = spow.at(kq);
            FFElement target = W.at(kmin);
            FFElement lambda = K_.pth_root(K_.mul(target, K_.inv(kappa)));
            // W -= lambda^p * s^p - B_i^(p-1) * lambda * s
            FFElement lp = K_.pow(lambda, p_);
            for (const auto& [k, c] : spow) add_term(W, k, K_.neg(K_.mul(lp, c)));
            add_term(W, skey, K_.mul(Bpow_[static_cast<std::size_t>(i)], lambda));
            add_term(corrections, skey, lambda);
            if (W.size() > 200000) throw SizeGuardError("tower reduction exceeded the term budget");
        }
        throw SizeGuardError("tower reduction exceeded the iteration budget");
    }
};

} // namespace

// ---- Artin-Schreier analyzer ------------------------------------------------------

namespace {

struct SplitTester {
    const FieldCtx& K;
    FpLinearMap M;
    std::map<Int, bool> memo;

    SplitTester(const FieldCtx& ctx, const LinearizedLhs& lhs)
        : K(ctx), M(FpLinearMap::from_map(ctx, [&ctx, &lhs](const FFElement& e) {
              return lhs.apply(ctx, e);
          })) {}

    bool splits(const FFElement& c) {
        Int key = K.value_of(c);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Int> sol;
        Int kd = 0;
        bool ok = M.solve(c.c, sol, kd);
        memo.emplace(key, ok);
        return ok;
    }
};

int place_order(const PlaceVerdict& a, const PlaceVerdict& b) {
    // infinity, then finite ramified by (degree, lex), then rationals by alpha
    if (a.place.at_infinity != b.place.at_infinity) return a.place.at_infinity ? -1 : 1;
    if (a.place.at_infinity) return 0;
    if (a.place.degree != b.place.degree) return a.place.degree < b.place.degree ? -1 : 1;
    return poly_compare(*a.place.prime, *b.place.prime);
}

} // namespace

ExtensionReport analyze_artin_schreier(const ArtinSchreierSpec& spec, Int size_guard) {
    const FieldCtx& K = spec.ctx;
    Int Q = K.order();
    if (Q > size_guard) throw SizeGuardError("field too large for per-place analysis");
    Int p = K.p();
    Int L = spec.lhs.degree(K);
    const Poly& h = spec.h;
    const Poly& g = spec.g;

    auto factors_g = factorize(g);

    // ---- irreducibility certification
    bool certified = false;
    for (const auto& [pi, mult] : factors_g)
        if (gcd_int(mult, p) == 1) {
            certified = true;
            break;
        }
    Int vinf = g.degree() - h.degree();
    if (!certified && vinf < 0 && gcd_int(-vinf, p) == 1) certified = true;
    if (!certified && g.is_one()) {
        auto sub = subgroup_image_test(K, spec.lhs, h);
        if (sub.kind == SubgroupImageResult::Kind::reducible_witness)
            throw InvalidInputError("RHS is the image of a polynomial under the step operator: "
                                    "the extension equation is reducible");
        certified = sub.kind == SubgroupImageResult::Kind::irreducible_certified;
    }
    if (!certified) throw InvalidInputError("irreducibility of the extension equation is not certified");

    SplitTester tester(K, spec.lhs);
    Int tower_rank = spec.lhs.kind == LinearizedLhs::Kind::full_trace ? K.m() * (K.n() - 1) : 1;

    std::vector<PlaceVerdict> ramified;
    std::vector<PlaceVerdict> rationals;
    PlaceVerdict inf;
    inf.place = PlaceId::infinity();
    inf.valuation = vinf;
    bool genus_blocked = false;
    bool counts_complete = true;
    Int degdiff = 0;

    // ---- infinity
    if (vinf >= 0) {
        FFElement c = vinf > 0 ? K.zero() : K.mul(h.leading(), K.inv(g.leading()));
        bool s = tester.splits(c);
        inf.status = s ? PlaceStatus::splits_completely : PlaceStatus::unramified_nonsplit;
        inf.places_above_degree1 = s ? L : 0;
        inf.theorem_backed = s && spec.qs_certified &&
                             spec.lhs.kind == LinearizedLhs::Kind::full_trace && K.is_in_Fq(c);
    } else {
        Int m = -vinf;
        if (gcd_int(m, p) == 1) {
            inf.status = PlaceStatus::totally_ramified;
            inf.ramification_index = L;
            inf.different_exponent = (L - 1) * (m + 1);
            inf.places_above_degree1 = 1;
            degdiff += inf.different_exponent;
        } else if (tower_rank == 1) {
            FFElement B = spec.lhs.kind == LinearizedLhs::Kind::p_step ? spec.lhs.b
                                                                       : K.trace_zero_basis()[0];
            Poly polypart = divrem(h, g).first;
            PoleReduction red = as_reduce_pole(K, B, polypart);
            if (red.status == PoleReduction::Status::coprime_pole) {
                Int mm = red.reduced.degree();
                inf.status = PlaceStatus::totally_ramified;
                inf.ramification_index = L;
                inf.different_exponent = (L - 1) * (mm + 1);
                inf.places_above_degree1 = 1;
                degdiff += inf.different_exponent;
            } else if (g.is_one()) {
                if (red.status == PoleReduction::Status::degenerate)
                    throw InvalidInputError("RHS reduces to an image of the step operator: "
                                            "the extension equation is reducible");
                throw InvalidInputError("RHS reduces to a constant outside the image: the "
                                        "constant field of E would extend");
            } else {
                // pole removed by substitution: infinity is unramified with
                // residue equal to the residual constant
                FFElement c0 = red.reduced.is_zero() ? K.zero() : red.reduced.coeff(0);
                bool s = tester.splits(c0);
                inf.status = s ? PlaceStatus::splits_completely : PlaceStatus::unramified_nonsplit;
                inf.places_above_degree1 = s ? L : 0;
            }
        } else if (g.is_one()) {
            auto steps = build_tower(spec);
            TowerEngine engine(K, steps);
            std::vector<Int> ms;
            bool ok = false;
            try {
                ok = engine.run(h, ms);
            } catch (const SizeGuardError&) {
                ok = false;
            }
            if (ok) {
                Int D = 0;
                for (Int mi : ms) D = p * D + (p - 1) * (mi + 1);
                inf.status = PlaceStatus::totally_ramified;
                inf.ramification_index = L;
                inf.different_exponent = D;
                inf.places_above_degree1 = 1;
                degdiff += D;
            } else {
                inf.status = PlaceStatus::unresolved;
                genus_blocked = true;
                counts_complete = false;
            }
        } else {
            inf.status = PlaceStatus::unresolved;
            genus_blocked = true;
            counts_complete = false;
        }
    }

    // ---- finite poles (the factors of g)
    for (const auto& [pi, mult] : factors_g) {
        PlaceVerdict v;
        v.place = PlaceId::finite(pi);
        v.valuation = -mult;
        if (gcd_int(mult, p) == 1) {
            v.status = PlaceStatus::totally_ramified;
            v.ramification_index = L;
            v.different_exponent = (L - 1) * (mult + 1);
            v.places_above_degree1 = v.place.degree == 1 ? 1 : 0;
            degdiff += v.different_exponent * v.place.degree;
        } else {
            v.status = PlaceStatus::unresolved;
            genus_blocked = true;
            if (v.place.degree == 1) counts_complete = false;
        }
        ramified.push_back(std::move(v));
    }
    std::sort(ramified.begin(), ramified.end(),
              [](const PlaceVerdict& a, const PlaceVerdict& b) { return place_order(a, b) < 0; });

    // ---- rational places away from the poles
    for (Int val = 0; val < Q; ++val) {
        FFElement alpha = K.from_value(val);
        FFElement galpha = g.eval(alpha);
        if (K.is_zero(galpha)) continue;
        FFElement halpha = h.eval(alpha);
        FFElement c = K.mul(halpha, K.inv(galpha));
        PlaceVerdict v;
        v.place = PlaceId::rational(K, alpha);
        v.valuation = K.is_zero(halpha)
                          ? multiplicity_of(h, *v.place.prime)
                          : 0;
        bool s = tester.splits(c);
        v.status = s ? PlaceStatus::splits_completely : PlaceStatus::unramified_nonsplit;
        v.places_above_degree1 = s ? L : 0;
        v.theorem_backed = s && spec.qs_certified &&
                           spec.lhs.kind == LinearizedLhs::Kind::full_trace && K.is_in_Fq(c);
        rationals.push_back(std::move(v));
    }

    // ---- assemble
    ExtensionReport rep;
    rep.degree = L;
    rep.verdicts.push_back(inf);
    for (auto& v : ramified) rep.verdicts.push_back(std::move(v));
    for (auto& v : rationals) rep.verdicts.push_back(std::move(v));
    rep.deg_different = degdiff;
    rep.counts_complete = counts_complete;
    Int n = 0;
    for (const PlaceVerdict& v : rep.verdicts)
        if (v.place.degree == 1 && v.status != PlaceStatus::unresolved) n += v.places_above_degree1;
    rep.n_rational = n;
    if (!genus_blocked) {
        if (degdiff % 2 != 0 || degdiff / 2 - L + 1 < 0)
            throw Error("Riemann-Hurwitz yields an invalid genus: the constant field of E "
                        "cannot be F_{q^n}");
        rep.genus = degdiff / 2 - L + 1;
    }
    Int gg = gcd_int(rep.n_rational, L);
    rep.ratio = {rep.n_rational / (gg == 0 ? 1 : gg), L / (gg == 0 ? 1 : gg)};
    return rep;
}

// ---- Kummer analyzer ---------------------------------------------------------------

namespace {

// residue of the unit part of h/g at a rational place
FFElement normalized_residue_at(const FieldCtx& K, const Poly& h, const Poly& g,
                                const FFElement& alpha) {
    Poly lin = Poly::x(K) - Poly::constant(K, alpha);
    Poly hh = h, ggp = g;
    while (!hh.is_zero()) {
        auto [q, r] = divrem(hh, lin);
        if (!r.is_zero()) break;
        hh = q;
    }
    while (!ggp.is_zero()) {
        auto [q, r] = divrem(ggp, lin);
        if (!r.is_zero()) break;
        ggp = q;
    }
    return K.mul(hh.eval(alpha), K.inv(ggp.eval(alpha)));
}

} // namespace

ExtensionReport analyze_kummer(const KummerSpec& spec, Int size_guard) {
    const FieldCtx& K = spec.ctx;
    Int Q = K.order();
    if (Q > size_guard) throw SizeGuardError("field too large for per-place analysis");
    Int p = K.p();
    Int d = spec.d;
    const Poly& h = spec.h;
    const Poly& g = spec.g;

    auto factors_h = factorize(h);
    auto factors_g = factorize(g);

    // h/g must not be a d-th power in F
    bool all_divisible = true;
    for (const auto& [pi, mult] : factors_h)
        if (mult % d != 0) all_divisible = false;
    for (const auto& [pi, mult] : factors_g)
        if (mult % d != 0) all_divisible = false;
    if (all_divisible) {
        FFElement lc = h.leading();
        if (K.pow(lc, (Q - 1) / d) == K.one())
            throw InvalidInputError("h/g is a perfect d-th power: the Kummer equation is reducible");
        throw InvalidInputError("h/g is a d-th power up to a constant: the constant field of E "
                                "would extend");
    }

    auto is_rth_power = [&](const FFElement& c, Int r) {
        return K.pow(c, (Q - 1) / r) == K.one();
    };

    std::vector<PlaceVerdict> ramified;
    std::vector<PlaceVerdict> rationals;
    Int degdiff = 0;

    auto classify = [&](PlaceVerdict& v, Int valuation, const FFElement& unit_residue) {
        // r = gcd(d, v) with gcd(d, 0) = d; e = d / r
        Int r = valuation == 0 ? d : gcd_int(d, valuation);
        Int e = d / r;
        v.valuation = valuation;
        v.ramification_index = e;
        if (e > 1) {
            if (e % p == 0) throw Error("Kummer ramification index divisible by p");
            v.status = PlaceStatus::tame_ramified;
            v.different_exponent = e - 1;
            degdiff += (e - 1) * r * v.place.degree;
            v.places_above_degree1 =
                v.place.degree == 1 ? (is_rth_power(unit_residue, r) ? r : 0) : 0;
        } else {
            bool s = is_rth_power(unit_residue, d);
            v.status = s ? PlaceStatus::splits_completely : PlaceStatus::unramified_nonsplit;
            v.places_above_degree1 = v.place.degree == 1 ? (s ? d : 0) : 0;
            v.theorem_backed = s && spec.qs_certified && K.is_in_Fq(unit_residue) &&
                               !K.is_zero(unit_residue) && d == (Q - 1) / (K.q() - 1);
        }
    };

    // ---- infinity
    PlaceVerdict inf;
    inf.place = PlaceId::infinity();
    {
        Int vinf = g.degree() - h.degree();
        FFElement unit = K.mul(h.leading(), K.inv(g.leading()));
        classify(inf, vinf, unit);
    }

    // ---- zeros of h and g
    for (const auto& [pi, mult] : factors_h) {
        Int r = gcd_int(d, mult);
        FFElement unit = K.one();
        if (pi.degree() == 1) {
            FFElement alpha = K.neg(pi.coeff(0));
            unit = normalized_residue_at(K, h, g, alpha);
        }
        PlaceVerdict v;
        v.place = PlaceId::finite(pi);
        classify(v, mult, unit);
        if (d / r > 1)
            ramified.push_back(std::move(v));
        else if (v.place.degree == 1)
            rationals.push_back(std::move(v)); // unramified zero of h, rational
    }
    for (const auto& [pi, mult] : factors_g) {
        Int r = gcd_int(d, mult);
        FFElement unit = K.one();
        if (pi.degree() == 1) {
            FFElement alpha = K.neg(pi.coeff(0));
            unit = normalized_residue_at(K, h, g, alpha);
        }
        PlaceVerdict v;
        v.place = PlaceId::finite(pi);
        classify(v, -mult, unit);
        if (d / r > 1)
            ramified.push_back(std::move(v));
        else if (v.place.degree == 1)
            rationals.push_back(std::move(v));
    }
    std::sort(ramified.begin(), ramified.end(),
              [](const PlaceVerdict& a, const PlaceVerdict& b) { return place_order(a, b) < 0; });

    // ---- plain rational places
    for (Int val = 0; val < Q; ++val) {
        FFElement alpha = K.from_value(val);
        FFElement ha = h.eval(alpha);
        FFElement ga = g.eval(alpha);
        if (K.is_zero(ha) || K.is_zero(ga)) continue; // handled via the factor lists
        FFElement c = K.mul(ha, K.inv(ga));
        PlaceVerdict v;
        v.place = PlaceId::rational(K, alpha);
        classify(v, 0, c);
        rationals.push_back(std::move(v));
    }
    std::sort(rationals.begin(), rationals.end(), [&](const PlaceVerdict& a, const PlaceVerdict& b) {
        FFElement aa = K.neg(a.place.prime->coeff(0));
        FFElement bb = K.neg(b.place.prime->coeff(0));
        return K.compare(aa, bb) < 0;
    });

    ExtensionReport rep;
    rep.degree = d;
    rep.verdicts.push_back(inf);
    for (auto& v : ramified) rep.verdicts.push_back(std::move(v));
    for (auto& v : rationals) rep.verdicts.push_back(std::move(v));
    rep.deg_different = degdiff;
    rep.counts_complete = true;
    Int n = 0;
    for (const PlaceVerdict& v : rep.verdicts)
        if (v.place.degree == 1) n += v.places_above_degree1;
    rep.n_rational = n;
    if (degdiff % 2 != 0 || degdiff / 2 - d + 1 < 0)
        throw Error("Riemann-Hurwitz yields an invalid genus for the Kummer extension");
    rep.genus = degdiff / 2 - d + 1;
    Int gg = gcd_int(rep.n_rational, d);
    rep.ratio = {rep.n_rational / (gg == 0 ? 1 : gg), d / (gg == 0 ? 1 : gg)};
    return rep;
}

// ---- tower analyzer ----------------------------------------------------------------

TowerReport analyze_tower(const ArtinSchreierSpec& spec, Int size_guard) {
    const FieldCtx& K = spec.ctx;
    Int Q = K.order();
    if (Q > size_guard) throw SizeGuardError("field too large for tower analysis");
    Int p = K.p();
    const Poly& h = spec.h;
    const Poly& g = spec.g;

    TowerReport rep;
    rep.steps = build_tower(spec);
    Int r = static_cast<Int>(rep.steps.size());
    Int L = ipow(p, r);

    bool genus_blocked = false;
    Int degdiff = 0;

    // ---- ramification at infinity
    Int vinf = g.degree() - h.degree();
    bool inf_ramified = vinf < 0;
    if (inf_ramified) {
        Int m = -vinf;
        if (gcd_int(m, p) == 1) {
            Int D = 0;
            for (Int i = 1; i <= r; ++i) {
                rep.infinity_steps.push_back(TowerStepInfinity{i, m, (p - 1) * (m + 1)});
                D = p * D + (p - 1) * (m + 1);
            }
            rep.composite_infinity_different = D;
            degdiff += D;
        } else if (g.is_one()) {
            TowerEngine engine(K, rep.steps);
            std::vector<Int> ms;
            bool ok = false;
            try {
                ok = engine.run(h, ms);
            } catch (const SizeGuardError&) {
                ok = false;
            }
            if (ok) {
                Int D = 0;
                for (Int i = 1; i <= r; ++i) {
                    Int mi = ms[static_cast<std::size_t>(i - 1)];
                    rep.infinity_steps.push_back(TowerStepInfinity{i, mi, (p - 1) * (mi + 1)});
                    D = p * D + (p - 1) * (mi + 1);
                }
                rep.composite_infinity_different = D;
                degdiff += D;
            } else {
                genus_blocked = true;
            }
        } else {
            genus_blocked = true;
        }
    }

    // ---- ramification at the finite poles
    auto factors_g = factorize(g);
    for (const auto& [pi, mult] : factors_g) {
        if (gcd_int(mult, p) == 1) {
            Int D = 0;
            for (Int i = 1; i <= r; ++i) D = p * D + (p - 1) * (mult + 1);
            degdiff += D * pi.degree();
        } else {
            genus_blocked = true;
        }
    }

    // ---- rational splitting chains, one prefix at a time
    // solution sets of the step equations over K
    std::vector<FpLinearMap> step_maps;
    step_maps.reserve(static_cast<std::size_t>(r));
    for (const TowerStep& s : rep.steps) {
        FFElement bpow = K.pow(s.B, p - 1);
        step_maps.push_back(FpLinearMap::from_map(K, [&](const FFElement& e) {
            return K.sub(K.pow(e, p), K.mul(bpow, e));
        }));
    }
    auto step_solutions = [&](Int i, const FFElement& c) {
        std::vector<FFElement> sols;
        std::vector<Int> sol;
        Int kd = 0;
        if (!step_maps[static_cast<std::size_t>(i - 1)].solve(c.c, sol, kd)) return sols;
        FFElement part{sol};
        const FFElement& B = rep.steps[static_cast<std::size_t>(i - 1)].B;
        for (Int j = 0; j < p; ++j) {
            FFElement kernel_elt = B;
            for (Int& cc : kernel_elt.c) cc = cc * j % p;
            sols.push_back(K.add(part, kernel_elt));
        }
        return sols;
    };

    rep.degree1_counts.assign(static_cast<std::size_t>(r), {});
    auto chain_counts = [&](const FFElement& c0) {
        std::vector<Int> counts;
        std::vector<FFElement> values{c0};
        for (Int i = 1; i <= r; ++i) {
            std::vector<FFElement> next;
            for (const FFElement& val : values) {
                auto sols = step_solutions(i, val);
                next.insert(next.end(), sols.begin(), sols.end());
            }
            values = std::move(next);
            counts.push_back(static_cast<Int>(values.size()));
        }
        return counts;
    };

    Int n_rational = 0;
    for (Int val = 0; val < Q; ++val) {
        FFElement alpha = K.from_value(val);
        FFElement ga = g.eval(alpha);
        std::vector<Int> counts;
        if (K.is_zero(ga)) {
            Int mult = multiplicity_of(g, Poly::x(K) - Poly::constant(K, alpha));
            bool resolved = gcd_int(mult, p) == 1;
            counts.assign(static_cast<std::size_t>(r), resolved ? 1 : -1);
        } else {
            FFElement c = K.mul(h.eval(alpha), K.inv(ga));
            counts = chain_counts(c);
        }
        for (Int i = 0; i < r; ++i)
            rep.degree1_counts[static_cast<std::size_t>(i)].push_back(counts[static_cast<std::size_t>(i)]);
        if (counts.back() > 0) n_rational += counts.back();
    }
    {
        std::vector<Int> counts;
        if (!inf_ramified) {
            FFElement c = vinf > 0 ? K.zero() : K.mul(h.leading(), K.inv(g.leading()));
            counts = chain_counts(c);
        } else if (!genus_blocked || !rep.infinity_steps.empty()) {
            counts.assign(static_cast<std::size_t>(r), 1);
        } else {
            counts.assign(static_cast<std::size_t>(r), -1);
        }
        for (Int i = 0; i < r; ++i)
            rep.degree1_counts[static_cast<std::size_t>(i)].push_back(counts[static_cast<std::size_t>(i)]);
        if (counts.back() > 0) n_rational += counts.back();
    }

    rep.deg_different = degdiff;
    rep.n_rational = n_rational;
    if (!genus_blocked) {
        if (degdiff % 2 != 0 || degdiff / 2 - L + 1 < 0)
            throw Error("Riemann-Hurwitz yields an invalid genus for the tower");
        rep.genus = degdiff / 2 - L + 1;
    }
    return rep;
}

// ---- dispatch ----------------------------------------------------------------------

ExtensionReport analyze(const ExtensionSpec& spec, Int size_guard) {
    if (spec.kind == ExtensionSpec::Kind::artin_schreier)
        return analyze_artin_schreier(spec.as_artin_schreier(), size_guard);
    return analyze_kummer(spec.as_kummer(), size_guard);
}

bool max_ratio_check(const ExtensionReport& report, const FieldCtx& ctx) {
    return report.counts_complete &&
           report.n_rational == report.degree * (ctx.order() + 1);
}

} // namespace qsplit
