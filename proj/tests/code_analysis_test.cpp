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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "idealdim/code_analysis.hpp"
#include "support.hpp"

namespace idealdim {
namespace {

std::vector<std::vector<Code>> rows_of(const std::vector<AlgebraElement>& basis) {
    std::vector<std::vector<Code>> rows;
    for (const auto& v : basis) rows.push_back(v.codes());
    return rows;
}

const Relation& relation(const std::vector<Relation>& rs, const std::string& tag) {
    for (const auto& r : rs)
        if (r.tag == tag) return r;
    throw std::runtime_error("missing relation " + tag);
}

std::vector<const DistanceBound*> bounds_of(const std::vector<DistanceBound>& bs, const std::string& kind) {
    std::vector<const DistanceBound*> out;
    for (const auto& b : bs)
        if (b.kind == kind) out.push_back(&b);
    return out;
}

TEST(IdealBasis, Sizes) {
    const auto c2c4 = testing::c2c4_gf3();
    EXPECT_EQ(ideal_basis(c2c4.one()).size(), 8u);
    EXPECT_EQ(ideal_basis(c2c4.parse(testing::c2c4_idempotents()[0])).size(), 4u);
    const auto s3 = testing::s3_gf9();
    const auto basis = ideal_basis(s3.parse(testing::kS3B));
    EXPECT_EQ(basis.size(), 3u);
    EXPECT_EQ(testing::span_dim(rows_of(basis), s3.field()), 3u);
    EXPECT_THROW(ideal_basis(s3.zero()), Error);
}

TEST(MinDistance, RepetitionCode) {
    const GroupAlgebra alg(make_field(3), cyclic(4));
    const auto r = min_distance(ideal_basis(alg.parse("1 + x + x^2 + x^3")));
    ASSERT_TRUE(r.d);
    EXPECT_EQ(*r.d, 4u);
    EXPECT_FALSE(r.capped);
    EXPECT_EQ(r.codewords, 2u);
}

TEST(MinDistance, ListedCodes) {
    const auto c2c4 = testing::c2c4_gf3();
    const std::vector<std::size_t> d = {4, 4, 2, 2, 2};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto r = min_distance(ideal_basis(c2c4.parse(testing::c2c4_idempotents()[i])));
        ASSERT_TRUE(r.d);
        EXPECT_EQ(*r.d, d[i]) << i;
    }
    const auto q8 = testing::q8_gf3();
    const auto basis = ideal_basis(q8.parse("1 + u + v + u^3*v"));
    ASSERT_EQ(basis.size(), 5u);
    const auto r = min_distance(basis);
    ASSERT_TRUE(r.d);
    EXPECT_EQ(r.codewords, 242u);
    EXPECT_EQ(*r.d, testing::shuffled_min_distance(rows_of(basis), q8.field(), 5));
}

TEST(MinDistance, ExtensionFieldWalksEveryCodeword) {
    const auto s3 = testing::s3_gf9();
    const auto basis = ideal_basis(s3.parse(testing::kS3BPrime));
    const auto r = min_distance(basis);
    EXPECT_EQ(r.codewords, 9u * 9 * 9 * 9 - 1);
    ASSERT_TRUE(r.d);
    EXPECT_EQ(*r.d, testing::shuffled_min_distance(rows_of(basis), s3.field(), 1));
}

TEST(MinDistance, Capped) {
    const auto q8 = testing::q8_gf3();
    const auto basis = ideal_basis(q8.parse("1 + u + v + u^3*v"));
    const auto exact = min_distance(basis);
    const auto r = min_distance(basis, 10);
    EXPECT_TRUE(r.capped);
    EXPECT_FALSE(r.d);
    EXPECT_EQ(r.codewords, 10u);
    EXPECT_GE(r.upper_bound, *exact.d);
}

TEST(MinDistance, EmptyBasis) {
    try {
        min_distance(std::vector<AlgebraElement>{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyBasis);
    }
}

TEST(Classify, S3Codes) {
    const auto s3 = testing::s3_gf9();
    const auto b = classify(s3.parse(testing::kS3B));
    EXPECT_EQ(b.n, 6u);
    EXPECT_EQ(b.k, 3u);
    ASSERT_TRUE(b.d);
    EXPECT_EQ(*b.d, 4u);
    EXPECT_EQ(b.mds, true);
    EXPECT_TRUE(b.projective);
    EXPECT_TRUE(b.ecd);
    EXPECT_FALSE(b.ecd_algebra);
    EXPECT_TRUE(b.q_bound_holds);
    EXPECT_EQ(b.zero_multiplicity, 1u);
    const auto lower = bounds_of(b.distance_bounds, "mds_lower");
    ASSERT_EQ(lower.size(), 1u);
    EXPECT_EQ(lower.front()->value, 4u);
    EXPECT_EQ(*b.d, lower.front()->value);

    const auto bp = classify(s3.parse(testing::kS3BPrime));
    EXPECT_EQ(bp.k, 4u);
    ASSERT_TRUE(bp.d);
    EXPECT_EQ(*bp.d, 3u);
    EXPECT_EQ(bp.mds, true);
    EXPECT_FALSE(bp.ecd);
    EXPECT_EQ(bp.zero_multiplicity, 2u);
    EXPECT_LT(*bp.d, s3.group().p_part(3) + 1);
    EXPECT_TRUE(bounds_of(bp.distance_bounds, "mds_lower").empty());
}

TEST(Classify, SmallCyclicCode) {
    const GroupAlgebra alg(make_field(3), cyclic(2));
    const auto r = classify(alg.parse("1 + x"));
    EXPECT_EQ(r.n, 2u);
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.d, 2u);
    EXPECT_EQ(r.mds, true);
    EXPECT_TRUE(r.ecd);
    EXPECT_FALSE(r.nontrivial);
}

TEST(Classify, CappedLeavesMdsUnknown) {
    const auto r = classify(testing::q8_gf3().parse("1 + u + v + u^3*v"), 3);
    EXPECT_TRUE(r.capped);
    EXPECT_FALSE(r.d);
    EXPECT_FALSE(r.mds);
    EXPECT_FALSE(r.singleton_defect);
}

TEST(DistanceBounds, UpperBoundsForS3) {
    const auto s3 = testing::s3_gf9();
    const auto bs = mds_distance_bounds(s3.parse(testing::kS3B));
    for (const auto* u : bounds_of(bs, "upper")) EXPECT_GE(u->value, 4u) << u->tag;
    bool found = false;
    for (const auto* u : bounds_of(bs, "upper"))
        if (u->tag == "cor_5_1_2") {
            found = true;
            EXPECT_EQ(u->value, 4u);
        }
    EXPECT_TRUE(found);
}

TEST(DistanceBounds, CongruenceOnlyInModularCase) {
    const GroupAlgebra alg(make_field(3), cyclic(5));
    const auto r = classify(alg.parse("1 + 2*x"));
    EXPECT_EQ(r.k, 4u);
    EXPECT_EQ(r.d, 2u);
    EXPECT_EQ(r.mds, true);
    EXPECT_EQ(r.zero_multiplicity, 1u);
    EXPECT_TRUE(bounds_of(r.distance_bounds, "mds_congruence").empty());
    const auto s3 = classify(testing::s3_gf9().parse(testing::kS3B));
    ASSERT_EQ(bounds_of(s3.distance_bounds, "mds_congruence").size(), 1u);
    EXPECT_EQ(*s3.d % 3, 1u);
}

TEST(Relations, ConsistentMdsEcdCode) {
    const auto rs = ecd_mds_relations(9, parse_group_spec(testing::kS3Spec), CodeFacts{3, true, true});
    const auto& a = relation(rs, "thm_5_3_1");
    EXPECT_FALSE(a.conditional);
    EXPECT_EQ(a.status, "consistent");
    EXPECT_TRUE(relation(rs, "lemma_5_2").conditional);
    EXPECT_TRUE(relation(rs, "thm_5_3_2").conditional);
    EXPECT_TRUE(relation(rs, "mds_conjecture").conditional);
    EXPECT_EQ(relation(rs, "lemma_5_2").status, "not_applicable");
}

TEST(Relations, BinaryModularStatement) {
    const auto rs = ecd_mds_relations(2, cyclic(4));
    const auto& b = relation(rs, "lemma_5_2");
    EXPECT_TRUE(b.conditional);
    EXPECT_EQ(b.status, "informational");
    EXPECT_EQ(b.statement, "no nontrivial MDS group codes in GF(2)G");
    EXPECT_EQ(relation(rs, "thm_5_3_1").status, "informational");
    const auto bad = ecd_mds_relations(2, cyclic(4), CodeFacts{2, true, false});
    EXPECT_EQ(relation(bad, "lemma_5_2").status, "contradiction");
}

TEST(Relations, ContradictionWhenGroupTooLarge) {
    const auto rs = ecd_mds_relations(5, cyclic(7), CodeFacts{3, true, true});
    EXPECT_EQ(relation(rs, "thm_5_3_1").status, "contradiction");
    EXPECT_EQ(relation(rs, "mds_conjecture").status, "contradiction");
    EXPECT_EQ(relation(rs, "thm_5_3_2").status, "contradiction");
    EXPECT_EQ(relation(rs, "lemma_5_2").status, "not_applicable");
}

TEST(Relations, TrivialCodesAreExempt) {
    const GroupAlgebra alg(make_field(3), cyclic(8));
    const auto r = classify(alg.parse("1 + x + x^2 + x^3 + x^4 + x^5 + x^6 + x^7"));
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.mds, true);
    EXPECT_TRUE(r.ecd);
    EXPECT_FALSE(r.q_bound_holds);
    EXPECT_EQ(relation(r.relations, "thm_5_3_1").status, "not_applicable");
}

TEST(Relations, ReedSolomonCase) {
    const auto rs = ecd_mds_relations(5, cyclic(5), CodeFacts{2, true, false});
    EXPECT_EQ(relation(rs, "lemma_5_2").status, "consistent");
    EXPECT_EQ(relation(rs, "thm_5_3_2").status, "not_applicable");
}

TEST(DistanceCap, Environment) {
    ::setenv("IDEALDIM_DISTANCE_CAP", "1234", 1);
    EXPECT_EQ(default_distance_cap(), 1234u);
    ::setenv("IDEALDIM_DISTANCE_CAP", "junk", 1);
    EXPECT_EQ(default_distance_cap(), kDefaultDistanceCap);
    ::unsetenv("IDEALDIM_DISTANCE_CAP");
    EXPECT_EQ(default_distance_cap(), kDefaultDistanceCap);
}

// Sum of the powers of a random group element; right multiplication by it shrinks Rb.
AlgebraElement cyclic_sum(const GroupAlgebra& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(1, alg.dimension() - 1);
    const auto g = alg.basis(pick(rng));
    AlgebraElement sum = alg.one(), power = g;
    while (power != alg.one()) {
        sum = sum + power;
        power = power * g;
    }
    return sum;
}

class CodeProperties : public ::testing::TestWithParam<testing::NamedAlgebra> {};

TEST_P(CodeProperties, AgainstExhaustiveSearch) {
    const auto& alg = GetParam().alg;
    const auto& F = alg.field();
    const std::size_t n = alg.dimension();
    const std::size_t p = F.characteristic();
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 60; ++trial) {
        auto b = testing::random_nonzero(alg, rng);
        if (trial % 2) b = b * cyclic_sum(alg, rng);
        if (b.is_zero()) continue;
        const auto basis = ideal_basis(b);
        if (std::pow(double(F.order()), double(basis.size())) > 70000) continue;
        ++checked;
        const auto r = classify(b);
        ASSERT_TRUE(r.d);
        EXPECT_EQ(*r.d, testing::shuffled_min_distance(rows_of(basis), F, trial));
        EXPECT_LE(*r.d + r.k, n + 1);
        EXPECT_EQ(*r.mds, *r.d + r.k == n + 1);
        for (const auto* u : bounds_of(r.distance_bounds, "upper")) EXPECT_LE(*r.d, u->value) << u->tag;
        if (*r.mds) {
            for (const auto* l : bounds_of(r.distance_bounds, "mds_lower")) EXPECT_GE(*r.d, l->value);
            for (const auto* u : bounds_of(r.distance_bounds, "mds_upper")) EXPECT_LE(*r.d, u->value);
            if (!bounds_of(r.distance_bounds, "mds_congruence").empty()) {
                EXPECT_EQ(*r.d % p, 1u);
            }
            if (r.ecd && r.nontrivial) {
                EXPECT_LE(n, r.q + 1);
            }
        }
        EXPECT_NE(relation(r.relations, "thm_5_3_1").status, "contradiction");
    }
    EXPECT_GE(checked, 20);
}

INSTANTIATE_TEST_SUITE_P(Golden, CodeProperties, ::testing::ValuesIn(testing::golden_algebras()),
                         [](const auto& info) { return info.param.name; });

}  // namespace
}  // namespace idealdim
