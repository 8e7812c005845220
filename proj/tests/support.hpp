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

// Shared algebras and independent reference computations for the test suites.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "idealdim/idealdim.hpp"

namespace idealdim::testing {

inline constexpr const char* kA4Spec =
    "perm:[(1,2,3),(1,2)(3,4)] order=[1,u,u^2*v,v,u^2*v*u,u^2,v*u,u*v,u*v*u,v*u*v,v*u^2,u*v*u^2]";
inline constexpr const char* kQ8Spec = "quaternion8 order=[1,u,v,u^2,u^3*v,u*v,u^3,u^2*v]";
inline constexpr const char* kD5Spec = "dihedral:5 order=[1,u,v,u*v^4,v^2,u*v,u*v^3,v^4,v^3,u*v^2]";
inline constexpr const char* kS3Spec = "perm:[a=(1,2,3),b=(1,2)] order=[1,b,a,a^2,b*a^2,b*a]";
inline constexpr const char* kC2C4Spec = "product:cyclic:2,cyclic:4";

inline GroupAlgebra a4_gf2() { return {make_field(2), parse_group_spec(kA4Spec)}; }
inline GroupAlgebra q8_gf3() { return {make_field(3), parse_group_spec(kQ8Spec)}; }
inline GroupAlgebra d5_gf9() { return {make_field(3, 2, "x^2+2*x+2"), parse_group_spec(kD5Spec)}; }
inline GroupAlgebra s3_gf9() { return {make_field(3, 2, "x^2+2*x+2"), parse_group_spec(kS3Spec)}; }
inline GroupAlgebra c2c4_gf3() { return {make_field(3), parse_group_spec(kC2C4Spec)}; }
inline GroupAlgebra c5_gf3() { return {make_field(3), cyclic(5)}; }

inline constexpr const char* kD5Element =
    "2*a^2 + (a+2)*u + (2*a+1)*v + a*u*v^4 + 2*v^2 + a*u*v + 2*a^2*u*v^3 + 2*a^2*v^4 + a*v^3 + (a+2)*u*v^2";
inline constexpr const char* kS3B = "(2*alpha+2) + (alpha+1)*b + alpha*a + (2*alpha+1)*a^2 + (alpha+1)*b*a^2 + b*a";
inline constexpr const char* kS3BPrime = "(alpha+1) + alpha*b + 2*a + 2*a^2 + 2*b*a";

/// The five idempotents listed for C2 x C4 over GF(3).
inline const std::vector<std::string>& c2c4_idempotents() {
    static const std::vector<std::string> v = {"2,0,0,0,2,1,1,1", "0,1,1,1,1,1,0,1", "1,1,2,1,2,1,0,1",
                                               "2,1,1,1,1,1,1,1", "0,0,2,0,0,2,0,2"};
    return v;
}

/// Every small algebra used by the property suites.
struct NamedAlgebra {
    std::string name;
    GroupAlgebra alg;
};

inline std::vector<NamedAlgebra> golden_algebras() {
    return {{"A4_GF2", a4_gf2()}, {"Q8_GF3", q8_gf3()},     {"D5_GF9", d5_gf9()},
            {"S3_GF9", s3_gf9()}, {"C2xC4_GF3", c2c4_gf3()}, {"C5_GF3", c5_gf3()}};
}

/// Random element with a random support size, so sparse and dense elements both occur.
inline AlgebraElement random_element(const GroupAlgebra& alg, std::mt19937_64& rng) {
    std::vector<Code> c(alg.dimension(), 0);
    std::uniform_int_distribution<std::size_t> support(1, alg.dimension());
    std::uniform_int_distribution<Code> coeff(1, alg.field().order() - 1);
    std::vector<std::size_t> idx(alg.dimension());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t s = support(rng);
    for (std::size_t i = 0; i < s; ++i) c[idx[i]] = coeff(rng);
    return alg.from_codes(std::move(c));
}

inline AlgebraElement random_nonzero(const GroupAlgebra& alg, std::mt19937_64& rng) {
    for (;;) {
        auto b = random_element(alg, rng);
        if (!b.is_zero()) return b;
    }
}

// ---------------------------------------------------------------------------
// Reference computations. None of these call the library's elimination,
// Krylov or Gray-code routines.

/// det(xI - M) by fraction-free (Bareiss) elimination over F[x].
inline Polynomial bareiss_char_poly(const Matrix& m) {
    const GaloisField& F = m.field();
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(F)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Polynomial::constant(F, F.neg(m(i, j)));
            if (i == j) a[i][j] = a[i][j] + Polynomial::x(F);
        }
    Polynomial prev = Polynomial::one(F);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return Polynomial(F);
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    Polynomial det = n ? a[n - 1][n - 1] : Polynomial::one(F);
    return negate ? -det : det;
}

/// Least monic f with f(M) = 0, from the first linear dependency among vec(M^0), vec(M^1), ...
inline Polynomial power_dependency_min_poly(const Matrix& m) {
    const GaloisField& F = m.field();
    const std::size_t n = m.rows();
    std::vector<std::vector<Code>> powers;
    std::vector<Code> cur(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) cur[i * n + i] = 1;
    for (std::size_t deg = 0; deg <= n; ++deg) {
        powers.push_back(cur);
        // Solve sum_{i<deg} c_i vec(M^i) = -vec(M^deg) by elimination on the augmented system.
        std::vector<std::vector<Code>> sys(n * n, std::vector<Code>(deg + 1));
        for (std::size_t r = 0; r < n * n; ++r) {
            for (std::size_t i = 0; i < deg; ++i) sys[r][i] = powers[i][r];
            sys[r][deg] = F.neg(powers[deg][r]);
        }
        std::vector<std::size_t> pivot_col;
        std::size_t row = 0;
        for (std::size_t c = 0; c < deg && row < sys.size(); ++c) {
            std::size_t p = row;
            while (p < sys.size() && sys[p][c] == 0) ++p;
            if (p == sys.size()) continue;
            std::swap(sys[row], sys[p]);
            const Code inv = F.inv(sys[row][c]);
            for (auto& v : sys[row]) v = F.mul(v, inv);
            for (std::size_t r = 0; r < sys.size(); ++r) {
                if (r == row || sys[r][c] == 0) continue;
                const Code f = sys[r][c];
                for (std::size_t k = 0; k <= deg; ++k) sys[r][k] = F.sub(sys[r][k], F.mul(f, sys[row][k]));
            }
            pivot_col.push_back(c);
            ++row;
        }
        bool consistent = true;
        for (std::size_t r = row; r < sys.size(); ++r) consistent = consistent && sys[r][deg] == 0;
        if (consistent) {
            std::vector<Code> coeff(deg + 1, 0);
            coeff[deg] = 1;
            for (std::size_t i = 0; i < pivot_col.size(); ++i) coeff[pivot_col[i]] = sys[i][deg];
            return Polynomial(F, coeff);
        }
        std::vector<Code> next(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (cur[i * n + k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i * n + j] = F.add(next[i * n + j], F.mul(cur[i * n + k], m(k, j)));
            }
        cur = std::move(next);
    }
    return Polynomial(F);
}

/// Minimum weight over every nonzero combination of the rows, visited in a shuffled order.
inline std::size_t shuffled_min_distance(const std::vector<std::vector<Code>>& rows, const GaloisField& F,
                                         std::uint64_t seed) {
    const std::size_t k = rows.size();
    const std::size_t n = rows.front().size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= F.order();
    std::vector<std::uint64_t> order(total - 1);
    std::iota(order.begin(), order.end(), std::uint64_t{1});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t best = n + 1;
    std::vector<Code> word(n);
    for (std::uint64_t idx : order) {
        std::fill(word.begin(), word.end(), 0);
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < k; ++i) {
            const Code c = static_cast<Code>(t % F.order());
            t /= F.order();
            if (!c) continue;
            for (std::size_t j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(c, rows[i][j]));
        }
        const auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Code c) { return c != 0; }));
        best = std::min(best, w);
    }
    return best;
}

/// Dimension of the span of `rows` by plain Gaussian elimination (no library code).
inline std::size_t span_dim(std::vector<std::vector<Code>> rows, const GaloisField& F) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        const Code inv = F.inv(rows[rank][c]);
        for (auto& v : rows[rank]) v = F.mul(v, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Code f = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

/// dim(Rb) as the span of {g b : g in G}, computed without regular matrices.
inline std::size_t span_ideal_dim(const AlgebraElement& b) {
    std::vector<std::vector<Code>> rows;
    for (std::size_t g = 0; g < b.group().order(); ++g) rows.push_back((b.algebra().basis(g) * b).codes());
    return span_dim(std::move(rows), b.field());
}

/// Re = Rb, checked by spans: both ideals and their sum have the same dimension.
inline bool same_left_ideal(const AlgebraElement& x, const AlgebraElement& y) {
    std::vector<std::vector<Code>> rx, ry, both;
    for (std::size_t g = 0; g < x.group().order(); ++g) {
        rx.push_back((x.algebra().basis(g) * x).codes());
        ry.push_back((y.algebra().basis(g) * y).codes());
    }
    both = rx;
    both.insert(both.end(), ry.begin(), ry.end());
    const std::size_t dx = span_dim(rx, x.field());
    return dx == span_dim(ry, x.field()) && dx == span_dim(both, x.field());
}

}  // namespace idealdim::testing
