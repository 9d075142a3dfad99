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

#ifndef QSPLIT_QUASISYM_HPP
#define QSPLIT_QUASISYM_HPP

#include <map>
#include <vector>

#include "qsplit/poly.hpp"

namespace qsplit {

/// Multivariate lift of a univariate polynomial of degree < q^n: each
/// monomial c*t^d maps to the exponent vector of the base-q digits of d
/// (entry i = digit of q^i), so evaluating the lift at (t, t^q, ...,
/// t^(q^(n-1))) recovers the source polynomial.
struct QsLift {
    Int n = 0;
    std::map<std::vector<Int>, FFElement> terms;
};

/// Values of an orbit-constant function, one entry per Galois orbit in the
/// canonical orbit order of FieldCtx::galois_orbits().
struct OrbitAssignment {
    std::vector<FFElement> values;
};

/// s_{n,i}(t): the i-th elementary symmetric polynomial evaluated at
/// (t, t^q, ..., t^(q^(n-1))), expanded as a univariate polynomial. All
/// coefficients are 1; 1 <= i <= n.
Poly elementary_symmetric_poly(const FieldCtx& ctx, Int i);

/// True iff f(gamma^q) = f(gamma) for every gamma in F_{q^n}, checked by
/// walking each Galois orbit once and requiring constancy along it.
bool is_quasisymmetric_semantic(const Poly& f, Int size_guard = kDefaultSizeGuard);

/// True iff f(t^q) = f(t) mod (t^(q^n) - t). Requires deg f < q^n.
bool is_quasisymmetric_syntactic(const Poly& f);

/// Requires deg f < q^n.
QsLift lift(const Poly& f);

/// Invariance of the lift's term map under the cyclic shift of exponent
/// vectors; agrees with the syntactic test on the source polynomial.
bool lift_is_cyclic_invariant(const QsLift& L);

/// Invariance under the cycle plus the transposition of the first two
/// coordinates (the two generate the full symmetric group).
bool lift_is_fully_symmetric(const QsLift& L);

/// True iff every value of f on F_{q^n} lies in F_q.
bool maps_into_Fq(const Poly& f, Int size_guard = kDefaultSizeGuard);

/// Membership in V_qs: quasi-symmetric and the canonical reduced
/// representative has all coefficients in F_q.
bool in_Vqs(const Poly& f, Int size_guard = kDefaultSizeGuard);

/// The unique polynomial of degree < q^n constant on each orbit with the
/// assigned values. If all values lie in F_q, so do all coefficients.
Poly interpolate_orbit_assignment(const FieldCtx& ctx, const OrbitAssignment& assign,
                                  Int size_guard = kDefaultSizeGuard);

/// i(s(t)) for i over F_q with no roots in F_q and s in V_qs: the result is
/// quasi-symmetric, F_q-valued and has no zeros in F_{q^n}.
Poly compose_with_irreducible(const Poly& i, const Poly& s,
                              Int size_guard = kDefaultSizeGuard);

/// s(t)^mexp - beta for beta in F_q not an mexp-th power in F_q: zero-free
/// in F_{q^n}, quasi-symmetric, F_q-valued.
Poly power_minus_nonresidue(const Poly& s, Int mexp, const FFElement& beta,
                            Int size_guard = kDefaultSizeGuard);

/// (q-1)^|O|: the number of zero-free F_q-valued orbit-constant functions.
Int count_zero_free_orbit_functions(const FieldCtx& ctx, Int size_guard = kDefaultSizeGuard);

} // namespace qsplit

#endif // QSPLIT_QUASISYM_HPP
