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
 * @file code_analysis.hpp
 * @brief Group codes Rb: bases, exhaustive minimum distance, MDS / ECD classification,
 * minimum-distance bounds from the primary decomposition of m_b, and the relations
 * between MDS and ECD codes that depend on the MDS conjecture.
 *
 * A code is ECD ("easily computable dimension") when it has an idempotent generator
 * and dimension at most p = char F. FG is an ECD algebra when |G| <= p + 1, |G| != p.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "group.hpp"
#include "group_algebra.hpp"
#include "ideal_dims.hpp"
#include "matrix.hpp"

namespace idealdim {

inline constexpr std::uint64_t kDefaultDistanceCap = std::uint64_t{1} << 24;

/// Cap from IDEALDIM_DISTANCE_CAP when set to a positive integer, else kDefaultDistanceCap.
inline std::uint64_t default_distance_cap() {
    if (const char* env = std::getenv("IDEALDIM_DISTANCE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultDistanceCap;
}

/// Canonical reduced-echelon basis of Rb.
inline std::vector<AlgebraElement> ideal_basis(const AlgebraElement& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroElement, "the zero element generates the zero ideal");
    const Matrix m = ideal_basis_matrix(b);
    std::vector<AlgebraElement> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        out.push_back(b.algebra().from_codes(std::vector<Code>(row.begin(), row.end())));
    }
    return out;
}

struct DistanceResult {
    std::optional<std::size_t> d;  // exact minimum distance, absent when capped
    std::size_t upper_bound = 0;   // least weight seen; equals d when exact
    bool capped = false;
    std::uint64_t codewords = 0;   // nonzero codewords examined
};

/**
 * Minimum weight of the F-span of the rows of `basis`. The q^k - 1 nonzero codewords
 * are visited by a p-ary modular Gray code over the GF(p)-basis {a^j v_i}: step s adds
 * generator number v_p(s). Beyond `cap` codewords the search stops and reports the
 * best weight found.
 */
inline DistanceResult min_distance(const Matrix& basis, std::uint64_t cap = default_distance_cap()) {
    if (basis.rows() == 0) throw Error(ErrorCode::EmptyBasis, "empty basis");
    const GaloisField& F = basis.field();
    const std::size_t n = basis.cols();
    const std::uint32_t p = F.characteristic();

    std::vector<std::vector<Code>> gens;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Code scale = 1;
        for (unsigned j = 0; j < F.degree(); ++j) {
            std::vector<Code> g(n);
            for (std::size_t c = 0; c < n; ++c) g[c] = F.mul(scale, basis(i, c));
            gens.push_back(std::move(g));
            if (j + 1 < F.degree()) scale = F.mul(scale, F.alpha());
        }
    }

    // p^{#gens}, saturated at cap + 2 so the comparison below cannot overflow
    const std::uint64_t ceiling = cap + 2;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) total = total > ceiling / p ? ceiling : total * p;
    const bool over = total - 1 > cap;

    DistanceResult r;
    r.upper_bound = n;
    for (const auto& g : gens) {
        std::size_t w = 0;
        for (Code c : g) w += c != 0;
        if (w) r.upper_bound = std::min(r.upper_bound, w);
    }
    const std::uint64_t steps = over ? cap : total - 1;
    std::vector<Code> word(n, 0);
    for (std::uint64_t s = 1; s <= steps; ++s) {
        std::uint64_t t = s;
        std::size_t idx = 0;
        while (t % p == 0) {
            t /= p;
            ++idx;
        }
        std::size_t w = 0;
        const auto& g = gens[idx];
        for (std::size_t c = 0; c < n; ++c) {
            word[c] = F.add(word[c], g[c]);
            w += word[c] != 0;
        }
        if (w && w < r.upper_bound) r.upper_bound = w;
    }
    r.codewords = steps;
    r.capped = over;
    if (!over) r.d = r.upper_bound;
    return r;
}

inline DistanceResult min_distance(const std::vector<AlgebraElement>& basis, std::uint64_t cap = default_distance_cap()) {
    if (basis.empty()) throw Error(ErrorCode::EmptyBasis, "empty basis");
    std::vector<std::vector<Code>> rows;
    for (const auto& v : basis) rows.push_back(v.codes());
    return min_distance(Matrix::from_rows(basis.front().field(), rows), cap);
}

struct DistanceBound {
    std::string tag;
    std::string kind;  // "upper", "mds_lower", "mds_upper", "mds_congruence"
    std::size_t value = 0;
    std::string note;
};

namespace detail {

inline std::vector<DistanceBound> distance_bounds_from(const DimensionReport& rep, std::size_t p_part, bool ecd) {
    std::vector<DistanceBound> out;
    const std::size_t order = rep.order;
    out.push_back({"cor_5_1_1", "upper", rep.u - rep.zeta_n + 1,
                   "d <= u - zeta_n + 1; MDS iff [|G|, |G|-u+zeta_n, u-zeta_n+1]"});
    const bool strong = rep.n > 1 && rep.kernel_dim % p_part == 0;
    const std::size_t drop = (strong ? rep.t + 1 : rep.t) * p_part;
    if (!rep.unit) {
        out.push_back({"cor_5_1_2", "upper", drop <= order ? order - drop + 1 : 1,
                       strong ? "|G|_p divides dim ker(r_b) and n > 1" : "d <= |G| - t |G|_p + 1"});
        if (rep.n == 1) {
            out.push_back({"cor_5_1_2", "mds_lower", p_part + 1, "if Rb is MDS then d >= |G|_p + 1"});
            out.push_back({"cor_5_1_2", "mds_upper", order - rep.t * p_part + 1, "if Rb is MDS then d <= |G| - t |G|_p + 1"});
            // Only meaningful when p divides |G|: GF(3)C5 has a [5, 4, 2] MDS ideal with n = 1.
            if (p_part > 1) out.push_back({"cor_5_1_2", "mds_congruence", 1, "if Rb is MDS then d = 1 mod p"});
        }
    }
    if (rep.congruence && ecd)
        out.push_back({"cor_5_1_3", "upper", order - rep.congruence->r + 1,
                       "ECD with m_b = x(x-a)^s: d <= |G| - r + 1; MDS and ECD iff [|G|, r, |G|-r+1]"});
    return out;
}

}  // namespace detail

/// Upper bounds on d for Rb, plus the necessary conditions for Rb to be MDS when n = 1.
inline std::vector<DistanceBound> mds_distance_bounds(const AlgebraElement& b) {
    const DimensionReport rep = dimension_exact(b);
    const std::size_t p = b.field().characteristic();
    const bool ecd = rep.projective && rep.dim_exact <= p;
    return detail::distance_bounds_from(rep, b.group().p_part(p), ecd);
}

/// A statement about MDS / ECD codes; `conditional` marks dependence on the MDS conjecture.
struct Relation {
    std::string tag;
    bool conditional = false;
    std::string statement;
    std::string status;  // "consistent", "contradiction", "not_applicable", "informational"
    std::string detail;
};

/// What ecd_mds_relations needs to know about a concrete (or hypothetical) code.
struct CodeFacts {
    std::size_t k = 0;
    bool mds = false;
    bool ecd = false;
};

inline bool is_cyclic_of_order(const Group& G, std::size_t n) { return G.order() == n && G.is_cyclic(); }

/**
 * Relations between MDS and ECD group codes over GF(q) for the group G. The bound
 * |G| <= q + 1 for MDS ECD codes is unconditional; the other statements assume the
 * MDS conjecture and are tagged conditional.
 */
inline std::vector<Relation> ecd_mds_relations(std::uint64_t q, const Group& G,
                                               const std::optional<CodeFacts>& code = std::nullopt) {
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    const std::size_t order = G.order();
    const bool prime_field = p == q;
    const bool semisimple = order % p != 0;
    const bool ecd_algebra = order <= p + 1 && order != p;
    const bool nontrivial_mds = code && code->mds && code->k >= 2 && code->k + 2 <= order;
    std::vector<Relation> out;

    // Trivial codes are excluded: the repetition code in FG is MDS and ECD for every |G| prime to p.
    Relation a{"thm_5_3_1", false, "if a nontrivial group code in FG is MDS and ECD then |G| <= q + 1", "informational", ""};
    a.detail = "|G| = " + std::to_string(order) + ", q + 1 = " + std::to_string(q + 1);
    if (nontrivial_mds && code->ecd) a.status = order <= q + 1 ? "consistent" : "contradiction";
    else if (code) a.status = "not_applicable";
    out.push_back(a);

    Relation b{"lemma_5_2", true, "", "not_applicable", ""};
    if (prime_field && !semisimple) {
        if (p == 2) {
            b.statement = "no nontrivial MDS group codes in GF(2)G";
        } else if (is_cyclic_of_order(G, p)) {
            b.statement = "nontrivial MDS group codes in GF(p)C_p are equivalent to extended Reed-Solomon codes";
        } else {
            b.statement = "no nontrivial MDS group codes in the non-semisimple GF(p)G unless G = C_p, p odd";
        }
        const bool allowed = p != 2 && is_cyclic_of_order(G, p);
        b.status = code ? (nontrivial_mds && !allowed ? "contradiction" : "consistent") : "informational";
    } else {
        b.statement = "applies only to GF(p)G with p | |G|";
    }
    out.push_back(b);

    Relation c{"thm_5_3_2", true, "", "not_applicable", ""};
    c.statement = "for p odd and G != C_p: a nontrivial MDS group code in GF(p)G forces GF(p)G to be ECD";
    if (prime_field && p != 2 && !is_cyclic_of_order(G, p)) {
        c.detail = std::string("GF(p)G is ") + (ecd_algebra ? "" : "not ") + "an ECD algebra";
        if (!code) c.status = "informational";
        else if (!nontrivial_mds) c.status = "consistent";
        else c.status = ecd_algebra ? "consistent" : "contradiction";
    }
    out.push_back(c);

    Relation d{"mds_conjecture", true, "", "informational", ""};
    d.statement = "a nontrivial [n, k] MDS code over GF(q) has n <= q + 1 (n <= q + 2 when q is even and k = 3 or k = q - 1)";
    if (code) {
        std::uint64_t limit = q + 1;
        if (q % 2 == 0 && (code->k == 3 || code->k + 1 == q)) limit = q + 2;
        d.status = !nontrivial_mds ? "not_applicable" : (order <= limit ? "consistent" : "contradiction");
        d.detail = "n = " + std::to_string(order) + ", limit " + std::to_string(limit);
    }
    out.push_back(d);
    return out;
}

struct CodeReport {
    std::size_t n = 0, k = 0;
    std::optional<std::size_t> d;
    std::size_t d_upper = 0;  // best weight found; equals d when exact
    bool capped = false;
    std::uint64_t codewords = 0;
    std::optional<bool> mds;
    bool projective = false;
    bool ecd = false;
    bool ecd_algebra = false;
    bool nontrivial = false;  // 2 <= k <= n - 2
    std::optional<std::size_t> singleton_defect;
    std::size_t q = 0, p = 0;
    bool q_bound_holds = true;  // |G| <= q + 1, meaningful for nontrivial MDS and ECD codes
    unsigned zero_multiplicity = 0;  // n of m_b
    std::vector<DistanceBound> distance_bounds;
    std::vector<Relation> relations;
};

/// [n, k, d] of Rb with MDS / ECD flags, distance bounds and the MDS-ECD relations.
inline CodeReport classify(const AlgebraElement& b, std::uint64_t cap = default_distance_cap()) {
    const DimensionReport rep = dimension_exact(b);
    const std::size_t p = b.field().characteristic();
    CodeReport r;
    r.n = b.group().order();
    r.k = rep.dim_exact;
    r.p = p;
    r.q = b.field().order();
    r.projective = rep.projective;
    r.ecd = rep.projective && r.k <= p;
    r.ecd_algebra = r.n <= p + 1 && r.n != p;
    r.nontrivial = r.k >= 2 && r.k + 2 <= r.n;
    r.zero_multiplicity = rep.n;
    const DistanceResult dist = min_distance(ideal_basis_matrix(b), cap);
    r.d = dist.d;
    r.d_upper = dist.upper_bound;
    r.capped = dist.capped;
    r.codewords = dist.codewords;
    if (r.d) {
        r.singleton_defect = r.n - r.k + 1 - *r.d;
        r.mds = *r.singleton_defect == 0;
    }
    r.q_bound_holds = r.n <= r.q + 1;
    r.distance_bounds = detail::distance_bounds_from(rep, b.group().p_part(p), r.ecd);
    std::optional<CodeFacts> facts;
    if (r.mds) facts = CodeFacts{r.k, *r.mds, r.ecd};
    r.relations = ecd_mds_relations(r.q, b.group(), facts);
    return r;
}

}  // namespace idealdim
