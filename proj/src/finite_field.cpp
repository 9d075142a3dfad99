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

#include "qsplit/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qsplit {

namespace {

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---- dense polynomials over F_p, only what the modulus search needs --------

using PolyP = std::vector<Int>; // coefficient of x^i at index i, normalized

void pnormalize(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmulmod(const PolyP& a, const PolyP& b, const PolyP& mod, Int p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // mod is monic
    std::size_t dm = mod.size() - 1;
    for (std::size_t i = r.size(); i-- > dm;) {
        Int c = r[i] % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j < dm; ++j)
            r[i - dm + j] = ((r[i - dm + j] - c * mod[j]) % p + p) % p;
        r[i] = 0;
    }
    r.resize(dm);
    pnormalize(r);
    return r;
}

PolyP ppowmod_x(Int e_base, Int e_exp_degree, const PolyP& mod, Int p) {
    // computes x^(e_base^e_exp_degree) mod `mod` by iterated powering
    PolyP x = {0, 1};
    pnormalize(x);
    PolyP acc = x;
    for (Int round = 0; round < e_exp_degree; ++round) {
        // acc = acc^e_base mod `mod` via square-and-multiply
        PolyP result = {1};
        PolyP base = acc;
        Int e = e_base;
        while (e > 0) {
            if (e & 1) result = pmulmod(result, base, mod, p);
            base = pmulmod(base, base, mod, p);
            e >>= 1;
        }
        acc = result;
    }
    return acc;
}

PolyP pgcd(PolyP a, PolyP b, Int p) {
    pnormalize(a);
    pnormalize(b);
    while (!b.empty()) {
        // a mod b
        Int invlc = 1;
        { // inverse of b's leading coefficient mod p
            Int lc = b.back() % p, t = 1, base = lc, e = p - 2;
            while (e > 0) {
                if (e & 1) t = t * base % p;
                base = base * base % p;
                e >>= 1;
            }
            invlc = t;
        }
        while (a.size() >= b.size() && !a.empty()) {
            Int c = a.back() * invlc % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
            pnormalize(a);
        }
        std::swap(a, b);
    }
    return a;
}

PolyP pminus_x(PolyP a, Int p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = ((a[1] - 1) % p + p) % p;
    pnormalize(a);
    return a;
}

bool is_irreducible_mod_p(const PolyP& f, Int p) {
    // Rabin's test: x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) = 1 for
    // every prime l | d.
    Int d = static_cast<Int>(f.size()) - 1;
    if (d < 1) return false;
    if (f[0] == 0 && d > 1) return false; // divisible by x
    if (!pminus_x(ppowmod_x(p, d, f, p), p).empty()) return false;
    std::vector<Int> prime_divisors;
    Int rem = d;
    for (Int l = 2; l * l <= rem; ++l) {
        if (rem % l == 0) {
            prime_divisors.push_back(l);
            while (rem % l == 0) rem /= l;
        }
    }
    if (rem > 1) prime_divisors.push_back(rem);
    for (Int l : prime_divisors) {
        PolyP t = pminus_x(ppowmod_x(p, d / l, f, p), p);
        if (pgcd(t, f, p).size() != 1) return false;
    }
    return true;
}

std::vector<Int> least_irreducible(Int p, Int degree) {
    // candidates ordered by the integer value of the non-leading coefficients
    Int count = 1;
    for (Int i = 0; i < degree; ++i) {
        if (count > (1LL << 40) / p) throw SizeGuardError("modulus search space too large");
        count *= p;
    }
    for (Int v = 0; v < count; ++v) {
        PolyP f(static_cast<std::size_t>(degree) + 1, 0);
        Int t = v;
        for (Int i = 0; i < degree; ++i) {
            f[static_cast<std::size_t>(i)] = t % p;
            t /= p;
        }
        f[static_cast<std::size_t>(degree)] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw Error("no irreducible polynomial found"); // unreachable
}

} // namespace

// ---- FieldCtx ---------------------------------------------------------------

void FieldCtx::validate_params() const {
    if (!is_prime(p_)) throw InvalidInputError("p must be prime, got " + std::to_string(p_));
    if (m_ < 1) throw InvalidInputError("m must be positive");
    if (n_ < 2) throw InvalidInputError("n must exceed 1");
    // p^(m*n) must stay within 2^31
    Int acc = 1;
    for (Int i = 0; i < m_ * n_; ++i) {
        acc *= p_;
        if (acc > (1LL << 31)) throw InvalidInputError("q^n exceeds the supported integer width (2^31)");
    }
}

FieldCtx::FieldCtx(Int p, Int m, Int n) : p_(p), m_(m), n_(n) {
    validate_params();
    modulus_ = least_irreducible(p_, m_ * n_);
    q_ = 1;
    for (Int i = 0; i < m_; ++i) q_ *= p_;
    order_ = 1;
    for (Int i = 0; i < n_; ++i) order_ *= q_;
}

FieldCtx::FieldCtx(Int p, Int m, Int n, std::vector<Int> modulus) : p_(p), m_(m), n_(n) {
    validate_params();
    Int d = m_ * n_;
    if (static_cast<Int>(modulus.size()) != d + 1)
        throw InvalidInputError("modulus must have degree exactly m*n");
    for (Int& c : modulus) {
        if (c < 0 || c >= p_) throw InvalidInputError("modulus coefficients must lie in [0,p)");
    }
    if (modulus.back() != 1) throw InvalidInputError("modulus must be monic");
    if (!is_irreducible_mod_p(modulus, p_))
        throw InvalidInputError("modulus is not irreducible over F_p");
    modulus_ = std::move(modulus);
    q_ = 1;
    for (Int i = 0; i < m_; ++i) q_ *= p_;
    order_ = 1;
    for (Int i = 0; i < n_; ++i) order_ *= q_;
}

FFElement FieldCtx::zero() const {
    return FFElement{std::vector<Int>(static_cast<std::size_t>(ext_degree()), 0)};
}

FFElement FieldCtx::one() const { return from_int(1); }

FFElement FieldCtx::from_int(Int k) const {
    FFElement e = zero();
    e.c[0] = ((k % p_) + p_) % p_;
    return e;
}

FFElement FieldCtx::from_value(Int v) const {
    if (v < 0 || v >= order_) throw InvalidInputError("element value out of range");
    FFElement e = zero();
    for (Int i = 0; i < ext_degree() && v > 0; ++i) {
        e.c[static_cast<std::size_t>(i)] = v % p_;
        v /= p_;
    }
    return e;
}

Int FieldCtx::value_of(const FFElement& a) const {
    Int v = 0;
    for (Int i = ext_degree(); i-- > 0;) v = v * p_ + a.c[static_cast<std::size_t>(i)];
    return v;
}

FFElement FieldCtx::element_from_coeffs(const std::vector<Int>& coeffs) const {
    if (static_cast<Int>(coeffs.size()) != ext_degree())
        throw InvalidInputError("element coefficient vector must have length m*n");
    for (Int c : coeffs)
        if (c < 0 || c >= p_) throw InvalidInputError("element coefficients must lie in [0,p)");
    return FFElement{coeffs};
}

FFElement FieldCtx::add(const FFElement& a, const FFElement& b) const {
    FFElement r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] += b.c[i];
        if (r.c[i] >= p_) r.c[i] -= p_;
    }
    return r;
}

FFElement FieldCtx::sub(const FFElement& a, const FFElement& b) const {
    FFElement r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] -= b.c[i];
        if (r.c[i] < 0) r.c[i] += p_;
    }
    return r;
}

FFElement FieldCtx::neg(const FFElement& a) const { return sub(zero(), a); }

std::vector<Int> FieldCtx::reduce_vec(std::vector<Int> raw) const {
    std::size_t d = static_cast<std::size_t>(ext_degree());
    for (std::size_t i = raw.size(); i-- > d;) {
        Int c = raw[i] % p_;
        if (c != 0) {
            for (std::size_t j = 0; j < d; ++j)
                raw[i - d + j] = ((raw[i - d + j] - c * modulus_[j]) % p_ + p_) % p_;
        }
        raw[i] = 0;
    }
    raw.resize(d);
    for (Int& c : raw) c = ((c % p_) + p_) % p_;
    return raw;
}

FFElement FieldCtx::mul(const FFElement& a, const FFElement& b) const {
    std::size_t d = static_cast<std::size_t>(ext_degree());
    std::vector<Int> raw(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            raw[i + j] = (raw[i + j] + a.c[i] * b.c[j]) % p_;
    }
    return FFElement{reduce_vec(std::move(raw))};
}

FFElement FieldCtx::pow(const FFElement& a, Int e) const {
    if (e < 0) throw InvalidInputError("pow expects a non-negative exponent");
    FFElement result = one();
    FFElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FFElement FieldCtx::inv(const FFElement& a) const {
    if (is_zero(a)) throw InvalidInputError("inversion of zero");
    return pow(a, order_ - 2);
}

bool FieldCtx::is_zero(const FFElement& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](Int c) { return c == 0; });
}

int FieldCtx::compare(const FFElement& a, const FFElement& b) const {
    for (Int i = ext_degree(); i-- > 0;) {
        Int x = a.c[static_cast<std::size_t>(i)], y = b.c[static_cast<std::size_t>(i)];
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

FFElement FieldCtx::frobenius_q(const FFElement& a) const { return pow(a, q_); }

FFElement FieldCtx::frobenius_p(const FFElement& a) const { return pow(a, p_); }

FFElement FieldCtx::pth_root(const FFElement& a) const {
    // Frobenius a -> a^p has order m*n, so the inverse is p^(m*n - 1)-th power
    FFElement r = a;
    for (Int i = 0; i < ext_degree() - 1; ++i) r = frobenius_p(r);
    return r;
}

FFElement FieldCtx::trace_to_Fq(const FFElement& a) const {
    FFElement acc = a;
    FFElement t = a;
    for (Int i = 1; i < n_; ++i) {
        t = frobenius_q(t);
        acc = add(acc, t);
    }
    return acc;
}

FFElement FieldCtx::norm_to_Fq(const FFElement& a) const {
    return pow(a, (order_ - 1) / (q_ - 1));
}

bool FieldCtx::is_in_Fq(const FFElement& a) const { return frobenius_q(a) == a; }

std::vector<std::vector<FFElement>> FieldCtx::galois_orbits() const {
    std::vector<std::vector<FFElement>> orbits;
    std::vector<bool> seen(static_cast<std::size_t>(order_), false);
    for (Int v = 0; v < order_; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        std::vector<FFElement> orbit;
        FFElement a = from_value(v);
        Int cur = v;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            orbit.push_back(a);
            a = frobenius_q(a);
            cur = value_of(a);
        } while (cur != v);
        std::sort(orbit.begin(), orbit.end(), [this](const FFElement& x, const FFElement& y) {
            return compare(x, y) < 0;
        });
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<FFElement> FieldCtx::subfield_Fq_basis() const {
    auto lm = FpLinearMap::from_map(*this, [this](const FFElement& e) {
        return sub(frobenius_q(e), e);
    });
    std::vector<FFElement> basis;
    for (auto& v : lm.kernel_basis()) basis.push_back(FFElement{v});
    return basis;
}

std::vector<FFElement> FieldCtx::subfield_Fq_elements(Int size_guard) const {
    if (q_ > size_guard) throw SizeGuardError("F_q too large to enumerate");
    auto basis = subfield_Fq_basis();
    std::vector<FFElement> out;
    out.reserve(static_cast<std::size_t>(q_));
    std::vector<Int> digits(basis.size(), 0);
    while (true) {
        FFElement e = zero();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            FFElement scaled = basis[i];
            for (Int& cc : scaled.c) cc = cc * digits[i] % p_;
            e = add(e, scaled);
        }
        out.push_back(e);
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == p_) digits[k++] = 0;
        if (k == digits.size()) break;
    }
    std::sort(out.begin(), out.end(), [this](const FFElement& x, const FFElement& y) {
        return compare(x, y) < 0;
    });
    return out;
}

std::vector<FFElement> FieldCtx::trace_zero_basis() const {
    auto lm = FpLinearMap::from_map(*this, [this](const FFElement& e) {
        return trace_to_Fq(e);
    });
    std::vector<FFElement> basis;
    for (auto& v : lm.kernel_basis()) basis.push_back(FFElement{v});
    return basis;
}

// ---- orbit count formula ----------------------------------------------------

namespace {
Int moebius(Int k) {
    Int mu = 1;
    for (Int d = 2; d * d <= k; ++d) {
        if (k % d == 0) {
            k /= d;
            if (k % d == 0) return 0;
            mu = -mu;
        }
    }
    if (k > 1) mu = -mu;
    return mu;
}

Int ipow(Int base, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) r *= base;
    return r;
}
} // namespace

Int orbit_count_formula(Int q, Int n) {
    Int total = 0;
    for (Int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Int s = 0;
        for (Int e = 1; e <= d; ++e) {
            if (d % e != 0) continue;
            s += moebius(e) * ipow(q, d / e);
        }
        total += s / d;
    }
    return total;
}

// ---- F_p linear algebra -------------------------------------------------------

namespace {
Int fp_inv(Int a, Int p) {
    Int t = 1, base = ((a % p) + p) % p, e = p - 2;
    while (e > 0) {
        if (e & 1) t = t * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return t;
}
} // namespace

std::vector<std::vector<Int>> FpLinearMap::kernel_basis() const {
    std::size_t ncols = columns.size();
    std::size_t nrows = ncols == 0 ? 0 : columns[0].size();
    // row-major copy of the matrix
    std::vector<std::vector<Int>> a(nrows, std::vector<Int>(ncols, 0));
    for (std::size_t j = 0; j < ncols; ++j)
        for (std::size_t i = 0; i < nrows; ++i) a[i][j] = columns[j][i];

    std::vector<Int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && a[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[sel], a[row]);
        Int iv = fp_inv(a[row][col], p);
        for (std::size_t j = 0; j < ncols; ++j) a[row][j] = a[row][j] * iv % p;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Int f = a[i][col];
            for (std::size_t j = 0; j < ncols; ++j)
                a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<Int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (Int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Int>> basis;
    for (std::size_t freec = 0; freec < ncols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Int> v(ncols, 0);
        v[freec] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) {
            Int pc = pivot_col[r];
            v[static_cast<std::size_t>(pc)] = ((-a[r][freec]) % p + p) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool FpLinearMap::solve(const std::vector<Int>& rhs, std::vector<Int>& solution,
                        Int& kernel_dim) const {
    std::size_t ncols = columns.size();
    std::size_t nrows = ncols == 0 ? rhs.size() : columns[0].size();
    std::vector<std::vector<Int>> a(nrows, std::vector<Int>(ncols + 1, 0));
    for (std::size_t j = 0; j < ncols; ++j)
        for (std::size_t i = 0; i < nrows; ++i) a[i][j] = columns[j][i];
    for (std::size_t i = 0; i < nrows; ++i) a[i][ncols] = ((rhs[i] % p) + p) % p;

    std::vector<Int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && a[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[sel], a[row]);
        Int iv = fp_inv(a[row][col], p);
        for (std::size_t j = 0; j <= ncols; ++j) a[row][j] = a[row][j] * iv % p;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Int f = a[i][col];
            for (std::size_t j = 0; j <= ncols; ++j)
                a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<Int>(col));
        ++row;
    }
    for (std::size_t i = row; i < nrows; ++i)
        if (a[i][ncols] != 0) return false;
    solution.assign(ncols, 0);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        solution[static_cast<std::size_t>(pivot_col[r])] = a[r][ncols];
    kernel_dim = static_cast<Int>(ncols - pivot_col.size());
    return true;
}

} // namespace qsplit
