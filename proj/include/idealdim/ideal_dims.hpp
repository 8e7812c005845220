/**************************************************************************
 * Copyright 2026 The idealdim Authors
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
 **************************************************************************/

/**
 * @file ideal_dims.hpp
 * @brief Dimension of principal ideals Rb from the minimal and characteristic
 * polynomials of the right regular representation r_b.
 *
 * Notation follows the usual primary decomposition: m_b = x^n p_1^{r_1} ... p_t^{r_t},
 * p_b = x^u h with x not dividing h, and zeta_n = dim ker(r_b^n) - dim ker(r_b).
 * Then dim(Rb) = zeta_n + |G| - u.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "group_algebra.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace idealdim {

/// Interval [lower, upper] for dim(Rb), optionally with a forced divisor.
struct DimensionBound {
    std::string tag;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::size_t divisor = 1;
    bool exact = false;  // lower == upper is guaranteed to be the dimension
    std::string note;

    bool contains(std::size_t d) const { return lower <= d && d <= upper && d % divisor == 0; }
};

/// Data available when m_b = x (x - a)^s with a != 0.
struct CongruenceInfo {
    FieldElement a;
    unsigned s = 0;
    Code class_value = 0;  // |G| lambda_1(b) a^-1, an element of GF(p)
    std::size_t r = 0;     // least positive integer in that class
    std::size_t p = 0;
    /// Class members in [1, |G|-1] that also satisfy the p-part bound.
    std::vector<std::size_t> candidates;
    /// The same set further cut by [|G|-u, |G|-1].
    std::vector<std::size_t> candidates_all_bounds;
    /// Every nontrivial ideal of FG has dimension <= p (|G| <= p+1, |G| != p).
    bool ecd_algebra = false;
    std::optional<std::size_t> determined;
    bool multiple_of_p = false;  // lambda_1(b) = 0 or p | |G|
    bool lambda_one_at_unit = false;
    std::vector<std::size_t> complement_set;  // {|G| - p t}, when lambda_1 = a = 1 and |G| >= p
    bool lambda_zero = false;
    std::vector<std::size_t> multiple_set;  // {p t : 1 <= t <= (|G|-1)/p}, when lambda_1 = 0 and |G|-1 > p
    bool dim_one_possible = false;          // lambda_1(b) = |G|^-1 a
};

struct DimensionReport {
    std::size_t order = 0;
    std::size_t characteristic = 0;
    std::size_t dim_exact = 0;
    std::size_t rank_check = 0;
    Polynomial m_b, p_b;
    std::vector<PolyFactor> m_factors, p_factors;
    unsigned n = 0;
    unsigned u = 0;
    std::size_t zeta_n = 0;
    std::size_t t = 0;
    std::size_t kernel_dim = 0;
    bool unit = false;
    bool simple_zero_root = false;  // n <= 1
    bool projective = false;
    std::vector<DimensionBound> bounds;
    std::optional<CongruenceInfo> congruence;
    std::optional<AlgebraElement> idempotent_generator;
};

namespace detail {

struct RegularData {
    Matrix r;
    Polynomial m, p;
    std::vector<PolyFactor> m_factors, p_factors;
    unsigned n = 0, u = 0;
    std::size_t t = 0;
};

inline void require_nonzero(const AlgebraElement& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroElement, "the zero element generates the zero ideal");
}

inline RegularData regular_data(const AlgebraElement& b) {
    RegularData d;
    d.r = b.right_regular_matrix();
    d.m = d.r.min_poly();
    d.p = d.r.char_poly();
    d.m_factors = poly_factor(d.m);
    d.p_factors = poly_factor(d.p);
    d.n = x_multiplicity(d.m);
    d.u = x_multiplicity(d.p);
    d.t = d.m_factors.size() - (d.n > 0 ? 1 : 0);
    return d;
}

inline std::vector<DimensionBound> bounds_from(const RegularData& d, std::size_t order, std::size_t p,
                                               std::size_t p_part) {
    std::vector<DimensionBound> out;
    const std::size_t ker = d.r.kernel_dim();

    DimensionBound pb;
    pb.tag = "thm_3_2_2";
    pb.upper = order - 1;
    if (d.n == 1) {
        pb.lower = d.t * p_part;
        pb.upper = order - p_part;
        pb.divisor = p_part;
        pb.note = "Rb projective: |G|_p divides dim";
    } else if (d.n > 1 && ker % p_part == 0) {
        pb.lower = (d.t + 1) * p_part;
        pb.note = "|G|_p divides dim ker(r_b) and n > 1";
    } else {
        pb.lower = d.t * p_part;
    }
    pb.lower = std::max<std::size_t>(pb.lower, 1);
    pb.note += pb.note.empty() ? "" : "; ";
    pb.note += "p = " + std::to_string(p) + ", |G|_p = " + std::to_string(p_part);
    out.push_back(pb);

    DimensionBound rb;
    rb.tag = "thm_3_5";
    rb.lower = order - d.u;
    rb.upper = order - 1;
    rb.exact = d.n == 1;
    rb.note = d.n == 1 ? "0 is a simple root of m_b: dim = |G| - u" : "0 is a multiple root of m_b: dim > |G| - u";
    if (d.n > 1) rb.lower += 1;
    if (rb.exact) rb.upper = rb.lower;
    out.push_back(rb);
    return out;
}

/// Solves for e in Rb with b e = b; such an e is an idempotent generator of Rb.
inline std::optional<AlgebraElement> solve_idempotent(const AlgebraElement& b) {
    const Matrix basis = ideal_basis_matrix(b);
    const std::size_t k = basis.rows(), n = basis.cols();
    const auto& F = b.field();
    std::vector<AlgebraElement> vs;
    vs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto row = basis.row(i);
        vs.push_back(b.algebra().from_codes(std::vector<Code>(row.begin(), row.end())));
    }

    Matrix aug(F, n, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        const AlgebraElement bv = b * vs[i];
        for (std::size_t g = 0; g < n; ++g) aug(g, i) = bv.codes()[g];
    }
    for (std::size_t g = 0; g < n; ++g) aug(g, k) = b.codes()[g];
    auto [red, pivots] = aug.rref();
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;

    AlgebraElement e = b.algebra().zero();
    for (std::size_t row = 0; row < pivots.size(); ++row) e = e + vs[pivots[row]].scaled(red(row, k));
    return e;
}

inline AlgebraElement xgcd_idempotent(const AlgebraElement& b, const Polynomial& m) {
    const auto& F = b.field();
    const Polynomial h = m / Polynomial::x(F);
    const Xgcd g = poly_xgcd(Polynomial::x(F), h);
    return evaluate_at_algebra(g.u, b) * b;
}

inline std::vector<std::size_t> residue_candidates(std::size_t cls, std::size_t p, std::size_t lo, std::size_t hi,
                                                   const std::vector<DimensionBound>& bounds) {
    std::vector<std::size_t> out;
    for (std::size_t v = lo; v <= hi; ++v) {
        if (v % p != cls) continue;
        bool ok = true;
        for (const auto& bd : bounds) ok = ok && bd.contains(v);
        if (ok) out.push_back(v);
    }
    return out;
}

inline std::optional<CongruenceInfo> congruence_from(const AlgebraElement& b, const RegularData& d,
                                                     const std::vector<DimensionBound>& bounds) {
    if (d.n != 1 || d.m_factors.size() != 2) return std::nullopt;
    const Polynomial& lin = d.m_factors[1].factor;
    if (lin.degree() != 1) return std::nullopt;
    const auto& F = b.field();
    const std::size_t order = b.group().order();
    const std::size_t p = F.characteristic();

    CongruenceInfo c;
    c.p = p;
    c.a = F.element(F.neg(lin.coefficient(0)));
    c.s = d.m_factors[1].multiplicity;
    const Code lam = b.lambda1().code();
    const Code g = F.from_int(static_cast<long long>(order % p));
    c.class_value = F.mul(F.mul(g, lam), F.inv(c.a.code()));
    if (!F.in_prime_field(c.class_value)) throw Error(ErrorCode::InternalError, "congruence class outside GF(p)");
    const std::size_t cls = c.class_value;  // prime-field codes are the integers 0..p-1
    c.r = cls == 0 ? p : cls;

    std::vector<DimensionBound> p_bounds;
    for (const auto& bd : bounds)
        if (bd.tag == "thm_3_2_2") p_bounds.push_back(bd);
    c.candidates = residue_candidates(cls, p, 1, order - 1, p_bounds);
    c.candidates_all_bounds = residue_candidates(cls, p, 1, order - 1, bounds);

    c.ecd_algebra = order <= p + 1 && order != p;
    if (c.ecd_algebra) c.determined = c.r;
    else if (c.candidates.size() == 1) c.determined = c.candidates.front();

    c.multiple_of_p = lam == 0 || order % p == 0;
    c.lambda_one_at_unit = lam == 1 && c.a.code() == 1 && order >= p;
    if (c.lambda_one_at_unit)
        for (std::size_t t = 0; t <= order / p; ++t) c.complement_set.push_back(order - p * t);
    c.lambda_zero = lam == 0 && order - 1 > p;
    if (c.lambda_zero)
        for (std::size_t t = 1; t <= (order - 1) / p; ++t) c.multiple_set.push_back(p * t);
    c.dim_one_possible = g != 0 && lam == F.mul(F.inv(g), c.a.code());
    return c;
}

}  // namespace detail

/// Exact dimension of Rb with every applicable bound and the congruence data.
inline DimensionReport dimension_exact(const AlgebraElement& b) {
    detail::require_nonzero(b);
    const auto d = detail::regular_data(b);
    const std::size_t order = b.group().order();
    const std::size_t p = b.field().characteristic();

    DimensionReport rep;
    rep.order = order;
    rep.characteristic = p;
    rep.m_b = d.m;
    rep.p_b = d.p;
    rep.m_factors = d.m_factors;
    rep.p_factors = d.p_factors;
    rep.n = d.n;
    rep.u = d.u;
    rep.t = d.t;
    rep.kernel_dim = d.r.kernel_dim();
    rep.zeta_n = d.n == 0 ? 0 : d.r.kernel_dim_of_power(d.n) - rep.kernel_dim;
    rep.dim_exact = rep.zeta_n + order - d.u;
    rep.rank_check = d.r.rank();
    if (rep.dim_exact != rep.rank_check)
        throw Error(ErrorCode::InternalError, "dimension formula disagrees with rank");
    rep.unit = d.n == 0;
    rep.simple_zero_root = d.n <= 1;

    if (rep.unit) {
        rep.projective = true;
        rep.idempotent_generator = b.algebra().one();
        return rep;
    }
    rep.bounds = detail::bounds_from(d, order, p, b.group().p_part(p));
    rep.congruence = detail::congruence_from(b, d, rep.bounds);
    if (d.n == 1) {
        rep.projective = true;
        rep.idempotent_generator = detail::xgcd_idempotent(b, d.m);
    } else if (auto e = detail::solve_idempotent(b)) {
        rep.projective = true;
        rep.idempotent_generator = std::move(e);
    }
    return rep;
}

/// Bounds for a nonzero non-unit b: "thm_3_2_2" (p-part) and "thm_3_5" ([|G|-u, |G|-1]).
inline std::vector<DimensionBound> dimension_bounds(const AlgebraElement& b) {
    detail::require_nonzero(b);
    const auto d = detail::regular_data(b);
    if (d.n == 0) throw Error(ErrorCode::UnitElement, "b is a unit; dim(Rb) = |G|");
    const std::size_t p = b.field().characteristic();
    return detail::bounds_from(d, b.group().order(), p, b.group().p_part(p));
}

/// Congruence data for m_b = x (x - a)^s; NotApplicable for any other shape.
inline CongruenceInfo congruence_class(const AlgebraElement& b) {
    detail::require_nonzero(b);
    const auto d = detail::regular_data(b);
    if (d.n != 0) {
        const std::size_t p = b.field().characteristic();
        const auto bounds = detail::bounds_from(d, b.group().order(), p, b.group().p_part(p));
        if (auto c = detail::congruence_from(b, d, bounds)) return *c;
    }
    throw Error(ErrorCode::NotApplicable, "minimal polynomial " + factored_string(d.m) + " is not of the form x(x-a)^s");
}

/**
 * Whether Rb is generated by an idempotent. Always true when 0 is at most a simple
 * root of m_b; otherwise decided by solving b e = b for e in Rb.
 */
inline bool is_projective_principal(const AlgebraElement& b) {
    detail::require_nonzero(b);
    const unsigned n = x_multiplicity(b.right_regular_matrix().min_poly());
    return n <= 1 || detail::solve_idempotent(b).has_value();
}

/**
 * Idempotent e with Re = Rb. For m_b = x h(x) this is u_0(b) b where u_0 x + u_1 h = 1;
 * a unit yields 1. Throws NotProjective when no idempotent generates Rb.
 */
inline AlgebraElement idempotent_generator(const AlgebraElement& b) {
    detail::require_nonzero(b);
    const Polynomial m = b.right_regular_matrix().min_poly();
    const unsigned n = x_multiplicity(m);
    if (n == 0) return b.algebra().one();
    if (n == 1) return detail::xgcd_idempotent(b, m);
    if (auto e = detail::solve_idempotent(b)) return *e;
    throw Error(ErrorCode::NotProjective,
                "Rb is not projective: 0 has multiplicity " + std::to_string(n) + " in m_b and no idempotent generates Rb");
}

/// E_i = u_i(b) f_i(b) for u_0 f_0 + u_1 f_1 = 1, where f_0 f_1 annihilates r_b.
inline std::pair<AlgebraElement, AlgebraElement> coprime_split_idempotents(const AlgebraElement& b, const Polynomial& f0,
                                                                           const Polynomial& f1) {
    if (f0.is_zero() || f1.is_zero()) throw Error(ErrorCode::NotCoprime, "zero factor");
    const Xgcd g = poly_xgcd(f0, f1);
    if (!g.d.is_one()) throw Error(ErrorCode::NotCoprime, "gcd(f0, f1) = " + g.d.to_string());
    if (!evaluate_at_algebra(f0 * f1, b).is_zero())
        throw Error(ErrorCode::NotAnnihilating, "f0*f1 does not annihilate r_b");
    return {evaluate_at_algebra(g.u, b) * evaluate_at_algebra(f0, b), evaluate_at_algebra(g.v, b) * evaluate_at_algebra(f1, b)};
}

}  // namespace idealdim
