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
 * @file abelian_codes.hpp
 * @brief Semisimple abelian group algebras: q-orbits, splitting fields, primitive
 * idempotents of cyclic factors, and the dimensions indicator D = A^-1.
 *
 * For G = C_{n_1} x ... x C_{n_s} (element order: left factor slowest, each factor
 * listed 1, x, x^2, ...), the primitive idempotents of the split algebra are Kronecker
 * products of per-factor vectors c (1, g^{n-1}, ..., g) with g running over the n-th
 * roots of unity and c = n^-1. A holds these vectors as columns. For an idempotent e
 * of the base algebra, the Hamming weight of D [e] equals dim(Re).
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "group.hpp"
#include "group_algebra.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace idealdim {

struct QOrbitPartition {
    std::size_t q = 0;
    /// Each orbit sorted ascending; orbits ordered by their smallest element.
    std::vector<std::vector<std::size_t>> orbits;

    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> s;
        for (const auto& o : orbits) s.push_back(o.size());
        return s;
    }
};

namespace detail {

inline void require_semisimple_abelian(const Group& G, std::uint64_t q) {
    if (!G.is_abelian()) throw Error(ErrorCode::NonAbelian, "group is not abelian");
    if (std::gcd<std::uint64_t, std::uint64_t>(q, G.order()) != 1)
        throw Error(ErrorCode::NotSemisimple, "gcd(q, |G|) = " + std::to_string(std::gcd<std::uint64_t, std::uint64_t>(q, G.order())));
}

/// Least d >= 1 with q^d = 1 mod m.
inline unsigned multiplicative_order_mod(std::uint64_t q, std::uint64_t m) {
    if (m == 1) return 1;
    std::uint64_t x = q % m;
    unsigned d = 1;
    while (x != 1) {
        x = x * (q % m) % m;
        ++d;
    }
    return d;
}

}  // namespace detail

/// Orbits of g -> g^q on an abelian group with gcd(q, |G|) = 1.
inline QOrbitPartition q_orbits(const Group& G, std::uint64_t q) {
    detail::require_semisimple_abelian(G, q);
    QOrbitPartition out;
    out.q = q;
    const auto map = G.power_map(q);
    std::vector<bool> seen(G.order(), false);
    for (std::size_t g = 0; g < G.order(); ++g) {
        if (seen[g]) continue;
        std::vector<std::size_t> orbit;
        for (std::size_t x = g; !seen[x]; x = map[x]) {
            seen[x] = true;
            orbit.push_back(x);
        }
        std::sort(orbit.begin(), orbit.end());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

struct OrbitBound {
    std::size_t min = 0, max = 0;
    std::vector<std::size_t> y;  // orbit sizes congruent to |G| lambda_1(e) mod p, ascending
};

/**
 * Bound on dim(Re) for an idempotent e generating a minimal ideal: the orbit sizes
 * whose residue mod p is |G| lambda_1(e). Minimality of Re is the caller's obligation.
 */
inline OrbitBound orbit_bound(const AlgebraElement& e) {
    const auto& F = e.field();
    const auto part = q_orbits(e.group(), F.order());
    const Code target = F.mul(F.from_int(static_cast<long long>(e.group().order())), e.lambda1().code());
    if (!F.in_prime_field(target))
        throw Error(ErrorCode::EmptyY, "|G| lambda_1(e) is not in the prime field; e is not idempotent");
    OrbitBound b;
    for (std::size_t s : part.sizes())
        if (s % F.characteristic() == target) b.y.push_back(s);
    std::sort(b.y.begin(), b.y.end());
    b.y.erase(std::unique(b.y.begin(), b.y.end()), b.y.end());
    if (b.y.empty()) throw Error(ErrorCode::EmptyY, "no q-orbit size matches |G| lambda_1(e)");
    b.min = b.y.front();
    b.max = b.y.back();
    return b;
}

/// F(theta) for theta a primitive m-th root of unity, m = exp(G).
struct SplittingFieldData {
    GaloisField base;
    GaloisField extension;
    unsigned d = 1;       // [extension : base]
    std::size_t m = 1;    // exponent of G
    Code embedding = 0;   // image of the base generator `a` (the code of 1 for prime fields)
    Code theta = 1;       // primitive m-th root of unity in the extension
    std::vector<Code> embed_table;  // base code -> extension code

    Code embed(Code c) const { return embed_table.at(c); }

    /// Inverse of embed on its image; nullopt outside the base field.
    std::optional<Code> restrict(Code c) const {
        for (Code b = 0; b < embed_table.size(); ++b)
            if (embed_table[b] == c) return b;
        return std::nullopt;
    }
};

/**
 * Splitting field of FG. With d = ord_m(q) the extension is GF(p^{kd}) (modulus given
 * or the default); the base generator maps to the smallest root of the base modulus,
 * and theta = g^{(Q-1)/m} for the smallest primitive element g.
 */
inline SplittingFieldData splitting_field(const Group& G, const GaloisField& F,
                                          std::optional<std::vector<Code>> ext_modulus = std::nullopt) {
    detail::require_semisimple_abelian(G, F.order());
    SplittingFieldData s;
    s.base = F;
    s.m = G.exponent();
    s.d = detail::multiplicative_order_mod(F.order(), s.m);
    const unsigned k = F.degree();
    if (s.d == 1 && !ext_modulus) {
        s.extension = F;
    } else {
        if (ext_modulus && ext_modulus->size() != std::size_t{k} * s.d + 1)
            throw Error(ErrorCode::BadOverride, "extension modulus must have degree " + std::to_string(k * s.d));
        s.extension = make_field(F.characteristic(), k * s.d, std::move(ext_modulus));
    }
    const GaloisField& E = s.extension;

    if (F.is_prime_field()) {
        s.embedding = 1;
    } else {
        const Polynomial mod_in_e(E, F.modulus());  // prime-field codes coincide in both fields
        bool found = false;
        for (Code c = 0; c < E.order() && !found; ++c)
            if (mod_in_e.evaluate(c) == 0) {
                s.embedding = c;
                found = true;
            }
        if (!found) throw Error(ErrorCode::InternalError, "base modulus has no root in the extension");
    }
    s.embed_table.resize(F.order());
    for (Code c = 0; c < F.order(); ++c) {
        const auto digits = F.digits(c);
        Code acc = 0, power = 1;
        for (auto dgt : digits) {
            acc = E.add(acc, E.mul(dgt, power));
            power = E.mul(power, s.embedding);
        }
        s.embed_table[c] = acc;
    }
    s.theta = E.pow(E.primitive_element(), static_cast<long long>((E.order() - 1) / s.m));
    return s;
}

/**
 * Primitive idempotents of E C_n as coordinate vectors c (1, g^{n-1}, ..., g), one per
 * entry of `gammas`, which must list the n distinct n-th roots of unity.
 */
inline std::vector<std::vector<Code>> cyclic_primitive_idempotents(std::size_t n, const GaloisField& E,
                                                                   const std::vector<Code>& gammas) {
    if (n == 0 || (E.order() - 1) % n != 0)
        throw Error(ErrorCode::BadRootCount, std::to_string(n) + " does not divide |E*| = " + std::to_string(E.order() - 1));
    if (gammas.size() != n) throw Error(ErrorCode::BadRootCount, "expected " + std::to_string(n) + " eigenvalues");
    std::vector<Code> sorted = gammas;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::BadRootCount, "eigenvalues are not distinct");
    for (Code g : gammas)
        if (g == 0 || E.pow(g, static_cast<long long>(n)) != 1)
            throw Error(ErrorCode::BadRootCount, E.format(g) + " is not an n-th root of unity, n = " + std::to_string(n));
    const Code c = E.inv(E.from_int(static_cast<long long>(n % E.characteristic())));
    std::vector<std::vector<Code>> out;
    for (Code g : gammas) {
        std::vector<Code> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = E.mul(c, E.pow(g, static_cast<long long>((n - j) % n)));
        out.push_back(std::move(v));
    }
    return out;
}

/// theta'^0, ..., theta'^{n-1} with theta' = theta^{m/n}.
inline std::vector<Code> default_root_ordering(const SplittingFieldData& s, std::size_t n) {
    const Code t = s.extension.pow(s.theta, static_cast<long long>(s.m / n));
    std::vector<Code> out;
    Code x = 1;
    for (std::size_t j = 0; j < n; ++j) {
        out.push_back(x);
        x = s.extension.mul(x, t);
    }
    return out;
}

struct IndicatorData {
    SplittingFieldData split;
    std::vector<std::size_t> factors;                   // cyclic orders n_1, ..., n_s
    std::vector<std::vector<Code>> orderings;           // per-factor eigenvalues (extension codes)
    std::shared_ptr<const Group> group;                 // C_{n_1} x ... x C_{n_s}
    Matrix a;                                           // columns: primitive idempotents
    Matrix d;                                           // the indicator, A^-1

    GroupAlgebra extension_algebra() const { return GroupAlgebra(split.extension, group); }
    AlgebraElement column_element(std::size_t j) const { return extension_algebra().from_codes(a.column(j)); }
};

/// The product C_{n_1} x ... x C_{n_s} with generators x1, ..., xs (x for s = 1).
inline Group cyclic_product(const std::vector<std::size_t>& factors) {
    if (factors.empty()) return cyclic(1);
    std::vector<Group> parts;
    for (std::size_t n : factors) parts.push_back(cyclic(n, "x"));
    return parts.size() == 1 ? parts.front() : direct_product(parts);
}

/**
 * A and D = A^-1 for the explicit cyclic decomposition `factors`. `orderings`, when
 * given, fixes the eigenvalue list per factor (extension-field codes); the default is
 * default_root_ordering. Columns are the Kronecker products, first factor slowest.
 */
inline IndicatorData indicator(const std::vector<std::size_t>& factors, const GaloisField& F,
                               std::optional<std::vector<std::vector<Code>>> orderings = std::nullopt,
                               std::optional<std::vector<Code>> ext_modulus = std::nullopt) {
    IndicatorData ind;
    ind.factors = factors;
    ind.group = std::make_shared<const Group>(cyclic_product(factors));
    ind.split = splitting_field(*ind.group, F, std::move(ext_modulus));
    const GaloisField& E = ind.split.extension;

    if (orderings) {
        if (orderings->size() != factors.size())
            throw Error(ErrorCode::BadRootCount, "need one eigenvalue ordering per cyclic factor");
        ind.orderings = *orderings;
    } else {
        for (std::size_t n : factors) ind.orderings.push_back(default_root_ordering(ind.split, n));
    }

    std::vector<std::vector<Code>> columns{{1}};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto vecs = cyclic_primitive_idempotents(factors[i], E, ind.orderings[i]);
        std::vector<std::vector<Code>> next;
        for (const auto& left : columns)
            for (const auto& right : vecs) {
                std::vector<Code> v;
                v.reserve(left.size() * right.size());
                for (Code x : left)
                    for (Code y : right) v.push_back(E.mul(x, y));
                next.push_back(std::move(v));
            }
        columns = std::move(next);
    }

    const std::size_t n = ind.group->order();
    ind.a = Matrix(E, n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) ind.a(i, j) = columns[j][i];
    ind.d = ind.a.inverse();

    const GroupAlgebra alg = ind.extension_algebra();
    AlgebraElement total = alg.zero();
    std::vector<AlgebraElement> cols;
    for (std::size_t j = 0; j < n; ++j) {
        cols.push_back(alg.from_codes(columns[j]));
        if (!cols.back().is_idempotent()) throw Error(ErrorCode::InternalError, "indicator column is not idempotent");
        total = total + cols.back();
    }
    if (total != alg.one()) throw Error(ErrorCode::InternalError, "indicator columns do not sum to 1");
    if (n <= 64)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!(cols[i] * cols[j]).is_zero()) throw Error(ErrorCode::InternalError, "indicator columns not orthogonal");
    return ind;
}

/// Coordinates of a base-field element mapped into the extension.
inline std::vector<Code> embed_codes(const SplittingFieldData& s, const std::vector<Code>& codes) {
    std::vector<Code> out(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) out[i] = s.embed(codes[i]);
    return out;
}

struct IndicatorResult {
    std::size_t dim = 0;
    std::vector<Code> transformed;  // D [e] over the extension
};

/// dim_F(Re) = wt(D [e]) for an idempotent e of the base algebra over ind's group.
inline IndicatorResult dimension_via_indicator(const IndicatorData& ind, const AlgebraElement& e) {
    if (!(e.field() == ind.split.base)) throw Error(ErrorCode::MixedFields, "element is not over the indicator's base field");
    if (e.group().table() != ind.group->table())
        throw Error(ErrorCode::MixedAlgebras, "element is not over the indicator's group");
    if (!e.is_idempotent()) throw Error(ErrorCode::NotIdempotent, "element is not idempotent");
    IndicatorResult r;
    r.transformed = ind.d.apply(embed_codes(ind.split, e.codes()));
    for (Code c : r.transformed) r.dim += c != 0;
    return r;
}

/// dim(Rb) = |G| - u for semisimple abelian FG.
inline std::size_t dimension_semisimple_abelian(const AlgebraElement& b) {
    detail::require_semisimple_abelian(b.group(), b.field().order());
    if (b.is_zero()) throw Error(ErrorCode::ZeroElement, "the zero element generates the zero ideal");
    return b.group().order() - x_multiplicity(b.right_regular_matrix().char_poly());
}

/// A primitive idempotent of the base algebra: a Frobenius orbit of indicator columns.
struct BasePrimitiveIdempotent {
    std::vector<std::size_t> columns;  // indices into A's columns
    AlgebraElement element;            // sum of those columns, over the base field
};

/**
 * Groups the columns of A into orbits of the coefficientwise map x -> x^q (q = |F|)
 * and sums each orbit. Every sum has coefficients in the base field; the orbit sizes
 * are the dimensions of the minimal ideals of FG.
 */
inline std::vector<BasePrimitiveIdempotent> base_primitive_idempotents(const IndicatorData& ind) {
    const GaloisField& E = ind.split.extension;
    const std::size_t n = ind.a.cols();
    const long long q = ind.split.base.order();
    std::map<std::vector<Code>, std::size_t> index;
    std::vector<std::vector<Code>> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        cols[j] = ind.a.column(j);
        index.emplace(cols[j], j);
    }
    const GroupAlgebra base_alg(ind.split.base, ind.group);
    std::vector<bool> seen(n, false);
    std::vector<BasePrimitiveIdempotent> out;
    for (std::size_t j = 0; j < n; ++j) {
        if (seen[j]) continue;
        std::vector<std::size_t> orbit;
        std::vector<Code> sum(n, 0);
        for (std::size_t x = j; !seen[x];) {
            seen[x] = true;
            orbit.push_back(x);
            for (std::size_t i = 0; i < n; ++i) sum[i] = E.add(sum[i], cols[x][i]);
            std::vector<Code> img(n);
            for (std::size_t i = 0; i < n; ++i) img[i] = E.pow(cols[x][i], q);
            auto it = index.find(img);
            if (it == index.end()) throw Error(ErrorCode::InternalError, "Frobenius image is not an indicator column");
            x = it->second;
        }
        std::vector<Code> base(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto b = ind.split.restrict(sum[i]);
            if (!b) throw Error(ErrorCode::InternalError, "orbit sum has a coefficient outside the base field");
            base[i] = *b;
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back({std::move(orbit), base_alg.from_codes(std::move(base))});
    }
    return out;
}

}  // namespace idealdim
