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

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "idealdim/ideal_dims.hpp"
#include "support.hpp"

namespace idealdim {
namespace {

const DimensionBound& bound(const std::vector<DimensionBound>& bs, const std::string& tag) {
    for (const auto& b : bs)
        if (b.tag == tag) return b;
    throw std::runtime_error("missing bound " + tag);
}

std::vector<std::size_t> members(const DimensionBound& b, std::size_t order) {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= order; ++d)
        if (b.contains(d)) out.push_back(d);
    return out;
}

// Searches all of Rb for an idempotent generating Rb. Only for small ideals.
std::optional<bool> brute_projective(const AlgebraElement& b, std::uint64_t limit = 60000) {
    const auto basis = ideal_basis_matrix(b);
    const auto& F = b.field();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        total *= F.order();
        if (total > limit) return std::nullopt;
    }
    const std::size_t k = basis.rows();
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<Code> c(b.group().order(), 0);
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < k; ++i) {
            const Code s = static_cast<Code>(t % F.order());
            t /= F.order();
            if (!s) continue;
            for (std::size_t j = 0; j < c.size(); ++j) c[j] = F.add(c[j], F.mul(s, basis(i, j)));
        }
        const auto e = b.algebra().from_codes(std::move(c));
        if (e.is_idempotent() && testing::same_left_ideal(e, b)) return true;
    }
    return false;
}

TEST(DimensionExact, A4Projective) {
    const auto rep = dimension_exact(testing::a4_gf2().parse("u + u^2*v*u"));
    EXPECT_EQ(rep.n, 1u);
    EXPECT_EQ(rep.u, 4u);
    EXPECT_EQ(rep.zeta_n, 0u);
    EXPECT_EQ(rep.t, 1u);
    EXPECT_EQ(rep.dim_exact, 8u);
    EXPECT_EQ(rep.rank_check, 8u);
    EXPECT_EQ(factored_string(rep.m_b), "x*(x^2+x+1)^2");
    EXPECT_EQ(factored_string(rep.p_b), "x^4*(x^2+x+1)^4");
    EXPECT_TRUE(rep.projective);
}

TEST(DimensionExact, A4NonProjective) {
    const auto rep = dimension_exact(testing::a4_gf2().parse("1 + u + v + u^2*v*u"));
    EXPECT_EQ(rep.n, 2u);
    EXPECT_EQ(rep.u, 4u);
    EXPECT_EQ(rep.zeta_n, 1u);
    EXPECT_EQ(rep.dim_exact, 9u);
    EXPECT_EQ(factored_string(rep.m_b), "x^2*(x^2+x+1)^2");
    EXPECT_FALSE(rep.projective);
    EXPECT_FALSE(rep.idempotent_generator.has_value());
}

TEST(DimensionExact, Unit) {
    const auto alg = testing::q8_gf3();
    const auto rep = dimension_exact(alg.one());
    EXPECT_TRUE(rep.unit);
    EXPECT_EQ(rep.n, 0u);
    EXPECT_EQ(rep.dim_exact, 8u);
    EXPECT_EQ(rep.m_b, parse_polynomial(alg.field(), "x-1"));
    EXPECT_TRUE(rep.bounds.empty());
}

TEST(DimensionExact, Zero) {
    try {
        dimension_exact(testing::q8_gf3().zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroElement);
    }
}

TEST(DimensionBounds, PPartForProjectiveA4Element) {
    const auto bs = dimension_bounds(testing::a4_gf2().parse("u + u^2*v*u"));
    const auto& pp = bound(bs, "thm_3_2_2");
    EXPECT_EQ(pp.lower, 4u);
    EXPECT_EQ(pp.upper, 8u);
    EXPECT_EQ(pp.divisor, 4u);
    EXPECT_EQ(members(pp, 12), (std::vector<std::size_t>{4, 8}));
    const auto& su = bound(bs, "thm_3_5");
    EXPECT_TRUE(su.exact);
    EXPECT_EQ(su.lower, 8u);
}

TEST(DimensionBounds, StrictLowerBoundForMultipleRoot) {
    const auto bs = dimension_bounds(testing::a4_gf2().parse("1 + u + v + u^2*v*u"));
    const auto& su = bound(bs, "thm_3_5");
    EXPECT_FALSE(su.exact);
    EXPECT_EQ(su.lower, 9u);
    EXPECT_EQ(su.upper, 11u);
}

TEST(DimensionBounds, IdempotentIsExact) {
    const auto alg = testing::c2c4_gf3();
    const auto e = alg.parse("2,0,0,0,2,1,1,1");
    ASSERT_TRUE(e.is_idempotent());
    const auto& su = bound(dimension_bounds(e), "thm_3_5");
    EXPECT_TRUE(su.exact);
    EXPECT_EQ(su.lower, 4u);
}

TEST(DimensionBounds, Errors) {
    const auto alg = testing::q8_gf3();
    try {
        dimension_bounds(alg.parse("2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnitElement);
    }
    EXPECT_THROW(dimension_bounds(alg.zero()), Error);
}

TEST(Congruence, QuaternionElements) {
    const auto alg = testing::q8_gf3();
    const auto c0 = congruence_class(alg.parse("u + 2*v + 2*u^2 + 2*u^3*v + u*v + u^2*v"));
    EXPECT_EQ(c0.class_value, 0u);
    EXPECT_EQ(c0.candidates, (std::vector<std::size_t>{3, 6}));
    EXPECT_TRUE(c0.lambda_zero);
    EXPECT_EQ(c0.multiple_set, (std::vector<std::size_t>{3, 6}));
    EXPECT_TRUE(c0.multiple_of_p);

    const auto c1 = congruence_class(alg.parse("1 + u + v + u^3*v"));
    EXPECT_EQ(c1.class_value, 2u);
    EXPECT_EQ(c1.candidates, (std::vector<std::size_t>{2, 5}));

    const auto c2 = congruence_class(alg.parse("2 + 2*u + v + u^3*v"));
    EXPECT_EQ(c2.a.code(), 2u);
    EXPECT_EQ(c2.s, 2u);
    EXPECT_EQ(c2.class_value, 2u);
    EXPECT_EQ(c2.r, 2u);
    EXPECT_EQ(c2.candidates, (std::vector<std::size_t>{2, 5}));
    EXPECT_FALSE(c2.ecd_algebra);
}

TEST(Congruence, DihedralOverGf9) {
    const auto alg = testing::d5_gf9();
    const auto b = alg.parse(testing::kD5Element);
    const auto rep = dimension_exact(b);
    const auto& F = alg.field();
    EXPECT_EQ(rep.m_b, parse_polynomial(F, "x*(x-a^2)^2"));
    ASSERT_TRUE(rep.congruence.has_value());
    const auto& c = *rep.congruence;
    EXPECT_EQ(c.a.code(), F.pow(F.alpha(), 2));
    EXPECT_EQ(c.class_value, 2u);
    EXPECT_EQ(c.candidates, (std::vector<std::size_t>{2, 5, 8}));
    EXPECT_EQ(rep.dim_exact, 8u);
}

TEST(Congruence, NotApplicable) {
    try {
        congruence_class(testing::a4_gf2().parse("u + u^2*v*u"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotApplicable);
    }
}

TEST(Congruence, SmallGroupDeterminesDimension) {
    // |G| = 2 <= p + 1 over GF(3): the class representative is the dimension.
    const GroupAlgebra alg(make_field(3), cyclic(2));
    const auto c = congruence_class(alg.parse("1 + x"));
    EXPECT_TRUE(c.ecd_algebra);
    ASSERT_TRUE(c.determined.has_value());
    EXPECT_EQ(*c.determined, 1u);
    EXPECT_TRUE(c.dim_one_possible);
}

TEST(Idempotent, FromXgcdOnA4Element) {
    const auto alg = testing::a4_gf2();
    const auto b = alg.parse("u + u^2*v*u");
    EXPECT_TRUE(is_projective_principal(b));
    const auto e = idempotent_generator(b);
    // m_b = x h, h = x^4 + x^2 + 1, and 1 = h + x (x^3 + x), so e = (b^3 + b) b.
    EXPECT_EQ(e, b.pow(4) + b.pow(2));
    EXPECT_EQ(e * e, e);
    EXPECT_EQ(ideal_dimension_rank(e), 8u);
    EXPECT_TRUE(testing::same_left_ideal(e, b));
}

TEST(Idempotent, IdempotentInput) {
    const auto alg = testing::c2c4_gf3();
    for (const auto& v : testing::c2c4_idempotents()) {
        const auto e = alg.parse(v);
        const auto g = idempotent_generator(e);
        EXPECT_TRUE(g.is_idempotent());
        EXPECT_TRUE(testing::same_left_ideal(g, e));
    }
}

TEST(Idempotent, NotProjective) {
    const auto b = testing::a4_gf2().parse("1 + u + v + u^2*v*u");
    EXPECT_FALSE(is_projective_principal(b));
    EXPECT_EQ(brute_projective(b), std::optional<bool>(false));
    try {
        idempotent_generator(b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotProjective);
    }
}

TEST(Idempotent, ProjectiveWithRepeatedZeroRoot) {
    // GF(5)S3 has a 2x2 matrix block; a nilpotent there generates a projective ideal
    // although 0 is a double root of its minimal polynomial.
    const GroupAlgebra alg(make_field(5), parse_group_spec("perm:[(1,2,3),(1,2)]"));
    std::mt19937_64 rng(4);
    bool found = false;
    for (int i = 0; i < 4000 && !found; ++i) {
        const auto b = testing::random_nonzero(alg, rng);
        const auto rep = dimension_exact(b);
        if (rep.n < 2 || !rep.projective) continue;
        found = true;
        EXPECT_FALSE(rep.simple_zero_root);
        const auto e = idempotent_generator(b);
        EXPECT_TRUE(e.is_idempotent());
        EXPECT_TRUE(testing::same_left_ideal(e, b));
    }
    EXPECT_TRUE(found);
}

TEST(CoprimeSplit, IdempotentWithLinearFactors) {
    const auto alg = testing::c2c4_gf3();
    const auto& F = alg.field();
    const auto b = alg.parse("2,1,1,1,1,1,1,1");
    const auto [e0, e1] = coprime_split_idempotents(b, parse_polynomial(F, "x"), parse_polynomial(F, "x-1"));
    // 1 = 1*x + (-1)*(x-1): E0 = b generates Rb, E1 = 1 - b generates R(b - 1).
    EXPECT_EQ(e0, b);
    EXPECT_EQ(e1, alg.one() - b);
}

TEST(CoprimeSplit, A4Decomposition) {
    const auto alg = testing::a4_gf2();
    const auto& F = alg.field();
    const auto b = alg.parse("u + u^2*v*u");
    const auto f0 = parse_polynomial(F, "x"), f1 = parse_polynomial(F, "(x^2+x+1)^2");
    const auto [e0, e1] = coprime_split_idempotents(b, f0, f1);
    EXPECT_EQ(e0 + e1, alg.one());
    EXPECT_TRUE((e0 * e1).is_zero());
    EXPECT_TRUE(e0.is_idempotent());
    EXPECT_TRUE(e1.is_idempotent());
    EXPECT_TRUE(testing::same_left_ideal(e0, evaluate_at_algebra(f0, b)));
    EXPECT_TRUE(testing::same_left_ideal(e1, evaluate_at_algebra(f1, b)));
}

TEST(CoprimeSplit, Errors) {
    const auto alg = testing::a4_gf2();
    const auto& F = alg.field();
    const auto b = alg.parse("u + u^2*v*u");
    try {
        coprime_split_idempotents(b, parse_polynomial(F, "x"), parse_polynomial(F, "x*(x^2+x+1)^2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
    }
    try {
        coprime_split_idempotents(b, parse_polynomial(F, "x"), parse_polynomial(F, "x+1"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAnnihilating);
    }
}

class DimensionProperties : public ::testing::TestWithParam<int> {};

// Random elements, plus scaled idempotents so that the congruence data is exercised.
TEST_P(DimensionProperties, ReportInvariants) {
    const auto named = testing::golden_algebras()[static_cast<std::size_t>(GetParam())];
    const auto& alg = named.alg;
    const auto& F = alg.field();
    const std::size_t order = alg.dimension();
    const std::size_t p = F.characteristic();
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<Code> unit(1, F.order() - 1);
    int congruence_seen = 0, trials = 0;
    for (int attempt = 0; trials < 240; ++attempt) {
        AlgebraElement b = testing::random_nonzero(alg, rng);
        if (attempt % 2) {
            const auto rb = dimension_exact(b);
            if (!rb.projective || rb.unit) continue;
            b = rb.idempotent_generator->scaled(unit(rng));
        }
        const auto rep = dimension_exact(b);
        ++trials;
        ASSERT_EQ(rep.dim_exact, testing::span_ideal_dim(b));
        ASSERT_EQ(rep.dim_exact, rep.zeta_n + order - rep.u);
        ASSERT_EQ(rep.p_b, testing::bareiss_char_poly(b.right_regular_matrix()));
        ASSERT_EQ(rep.m_b, testing::power_dependency_min_poly(b.right_regular_matrix()));
        if (rep.unit) continue;
        for (const auto& bd : rep.bounds) ASSERT_TRUE(bd.contains(rep.dim_exact)) << bd.tag << " " << b.to_string();
        // Equality in [|G| - u, |G| - 1] exactly when 0 is at most a simple root of m_b.
        ASSERT_EQ(rep.dim_exact == order - rep.u, rep.n <= 1) << b.to_string();
        bool squarefree = true;
        for (const auto& f : rep.m_factors) squarefree = squarefree && f.multiplicity == 1;
        if (squarefree) {
            ASSERT_EQ(rep.dim_exact, order - rep.u);
        }
        if (rep.projective) {
            const auto& e = *rep.idempotent_generator;
            ASSERT_TRUE(e.is_idempotent());
            ASSERT_TRUE(testing::same_left_ideal(e, b));
        }
        if (auto brute = brute_projective(b, 3000)) {
            ASSERT_EQ(*brute, rep.projective) << b.to_string();
        }
        if (rep.congruence) {
            ++congruence_seen;
            const auto& c = *rep.congruence;
            ASSERT_TRUE(std::find(c.candidates.begin(), c.candidates.end(), rep.dim_exact) != c.candidates.end());
            ASSERT_TRUE(std::find(c.candidates_all_bounds.begin(), c.candidates_all_bounds.end(), rep.dim_exact) !=
                        c.candidates_all_bounds.end());
            ASSERT_EQ(rep.dim_exact % p, c.class_value);
            ASSERT_EQ(rep.dim_exact % p == 0, b.lambda1().is_zero() || order % p == 0);
            if (rep.dim_exact <= p) {
                ASSERT_EQ(rep.dim_exact, c.r);
            }
            if (rep.dim_exact == 1) {
                ASSERT_TRUE(c.dim_one_possible);
            }
        }
    }
    EXPECT_GT(congruence_seen, 0);
}

INSTANTIATE_TEST_SUITE_P(Golden, DimensionProperties, ::testing::Range(0, 6), [](const auto& info) {
    return testing::golden_algebras()[static_cast<std::size_t>(info.param)].name;
});

}  // namespace
}  // namespace idealdim
