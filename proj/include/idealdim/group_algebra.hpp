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
 * @file group_algebra.hpp
 * @brief Elements of a group algebra FG and their regular representations.
 *
 * Coordinates are taken in the group's declared element order. The right regular
 * matrix of b has column j equal to the coordinates of g_j * b; the left regular
 * matrix has column j equal to b * g_j.
 *
 * Element text: a sum of terms `[coefficient *] word`, where the coefficient is a field
 * literal (possibly parenthesized, e.g. `(2*a+1)`) and the word is a `*`-product of
 * generator powers (`u^2*v*u`). A bare `1` is the identity. The field generator is `a`,
 * or `alpha` when a group generator is itself named `a`. Alternatively a
 * comma-separated coefficient vector in group order: `2,0,0,0,2,1,1,1`.
 */

#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "expression.hpp"
#include "field.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace idealdim {

class AlgebraElement;

/// The algebra FG: a field handle and a shared group.
class GroupAlgebra {
   public:
    GroupAlgebra(GaloisField field, Group group)
        : field_(std::move(field)), group_(std::make_shared<const Group>(std::move(group))) {}
    GroupAlgebra(GaloisField field, std::shared_ptr<const Group> group) : field_(std::move(field)), group_(std::move(group)) {}

    const GaloisField& field() const noexcept { return field_; }
    const Group& group() const noexcept { return *group_; }
    const std::shared_ptr<const Group>& group_ptr() const noexcept { return group_; }
    std::size_t dimension() const noexcept { return group_->order(); }

    bool operator==(const GroupAlgebra& o) const {
        return field_ == o.field_ && (group_ == o.group_ || group_->table() == o.group_->table());
    }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement basis(std::size_t index) const;
    AlgebraElement from_codes(std::vector<Code> codes) const;
    AlgebraElement random(std::mt19937_64& rng) const;
    AlgebraElement parse(std::string_view text) const;

   private:
    GaloisField field_;
    std::shared_ptr<const Group> group_;
};

class AlgebraElement {
   public:
    AlgebraElement(GroupAlgebra algebra, std::vector<Code> codes) : alg_(std::move(algebra)), c_(std::move(codes)) {
        if (c_.size() != alg_.dimension())
            throw Error(ErrorCode::DimensionMismatch, "element needs " + std::to_string(alg_.dimension()) + " coefficients");
    }

    const GroupAlgebra& algebra() const noexcept { return alg_; }
    const GaloisField& field() const noexcept { return alg_.field(); }
    const Group& group() const noexcept { return alg_.group(); }
    const std::vector<Code>& codes() const noexcept { return c_; }
    FieldElement coefficient(std::size_t g) const { return field().element(c_[g]); }

    bool is_zero() const noexcept {
        for (Code c : c_)
            if (c) return false;
        return true;
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        check(o);
        std::vector<Code> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = field().add(c_[i], o.c_[i]);
        return {alg_, std::move(r)};
    }

    AlgebraElement operator-(const AlgebraElement& o) const {
        check(o);
        std::vector<Code> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = field().sub(c_[i], o.c_[i]);
        return {alg_, std::move(r)};
    }

    AlgebraElement operator-() const { return scaled(field().neg(1)); }

    /// Convolution: coefficient of g in a*b is the sum of a_h b_k over hk = g.
    AlgebraElement operator*(const AlgebraElement& o) const {
        check(o);
        const auto& F = field();
        const auto& G = group();
        std::vector<Code> r(c_.size(), 0);
        for (std::size_t h = 0; h < c_.size(); ++h) {
            if (!c_[h]) continue;
            for (std::size_t k = 0; k < c_.size(); ++k) {
                if (!o.c_[k]) continue;
                const std::size_t g = G.multiply(h, k);
                r[g] = F.add(r[g], F.mul(c_[h], o.c_[k]));
            }
        }
        return {alg_, std::move(r)};
    }

    AlgebraElement scaled(Code s) const {
        std::vector<Code> r(c_);
        for (auto& v : r) v = field().mul(v, s);
        return {alg_, std::move(r)};
    }

    AlgebraElement pow(unsigned e) const {
        AlgebraElement r = alg_.one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const AlgebraElement& o) const { return alg_ == o.alg_ && c_ == o.c_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    /// g -> g^-1 extended linearly.
    AlgebraElement star() const {
        std::vector<Code> r(c_.size());
        for (std::size_t g = 0; g < c_.size(); ++g) r[group().inverse(g)] = c_[g];
        return {alg_, std::move(r)};
    }

    /// Coefficient at the identity.
    FieldElement lambda1() const { return coefficient(group().identity()); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (Code c : c_) w += c != 0;
        return w;
    }

    bool is_idempotent() const { return (*this) * (*this) == *this; }

    /// Column j holds the coordinates of g_j * b.
    Matrix right_regular_matrix() const {
        const std::size_t n = c_.size();
        Matrix m(field(), n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t h = 0; h < n; ++h)
                if (c_[h]) m(group().multiply(j, h), j) = field().add(m(group().multiply(j, h), j), c_[h]);
        return m;
    }

    /// Column j holds the coordinates of b * g_j.
    Matrix left_regular_matrix() const {
        const std::size_t n = c_.size();
        Matrix m(field(), n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t h = 0; h < n; ++h)
                if (c_[h]) m(group().multiply(h, j), j) = field().add(m(group().multiply(h, j), j), c_[h]);
        return m;
    }

    /// Expression text, terms in group order: "2*a+1 + u + (a+2)*u^2*v".
    /// Field coefficients use `alpha` when a generator is called `a`.
    std::string to_string() const {
        std::string out;
        for (std::size_t g = 0; g < c_.size(); ++g) {
            if (!c_[g]) continue;
            if (!out.empty()) out += " + ";
            const std::string coeff = field().format(c_[g], field_symbol());
            const bool compound = coeff.find('+') != std::string::npos || coeff.find('*') != std::string::npos;
            if (g == group().identity()) {
                out += coeff;
                continue;
            }
            if (c_[g] != 1) out += (compound ? "(" + coeff + ")" : coeff) + "*";
            out += group().label(g);
        }
        return out.empty() ? "0" : out;
    }

    /// Comma-separated coefficient vector in group order.
    std::string to_vector_string() const {
        std::string out;
        for (std::size_t g = 0; g < c_.size(); ++g) {
            if (g) out += ",";
            out += field().format(c_[g], field_symbol());
        }
        return out;
    }

    /// Name used for the field generator in printed coefficients.
    std::string_view field_symbol() const { return group().generator_by_name("a") ? "alpha" : "a"; }

   private:
    void check(const AlgebraElement& o) const {
        if (!(alg_ == o.alg_)) throw Error(ErrorCode::MixedAlgebras, "elements of different group algebras");
    }

    GroupAlgebra alg_;
    std::vector<Code> c_;
};

inline std::ostream& operator<<(std::ostream& os, const AlgebraElement& b) { return os << b.to_string(); }

inline AlgebraElement GroupAlgebra::zero() const { return {*this, std::vector<Code>(dimension(), 0)}; }

inline AlgebraElement GroupAlgebra::one() const { return basis(group_->identity()); }

inline AlgebraElement GroupAlgebra::basis(std::size_t index) const {
    std::vector<Code> c(dimension(), 0);
    c.at(index) = 1;
    return {*this, std::move(c)};
}

inline AlgebraElement GroupAlgebra::from_codes(std::vector<Code> codes) const { return {*this, std::move(codes)}; }

inline AlgebraElement GroupAlgebra::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<Code> dist(0, field_.order() - 1);
    std::vector<Code> c(dimension());
    for (auto& v : c) v = dist(rng);
    return {*this, std::move(c)};
}

namespace detail {

struct AlgebraContext {
    using value_type = AlgebraElement;
    const GroupAlgebra& alg;

    AlgebraElement from_integer(long long n) const { return alg.one().scaled(alg.field().from_int(n)); }
    std::optional<AlgebraElement> symbol(std::string_view s) const {
        if (auto g = alg.group().generator_by_name(s)) return alg.basis(alg.group().generators()[*g]);
        if ((s == "a" || s == "alpha") && !alg.field().is_prime_field()) return alg.one().scaled(alg.field().alpha());
        return std::nullopt;
    }
    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const { return a + b; }
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const { return a - b; }
    AlgebraElement neg(const AlgebraElement& a) const { return -a; }
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const { return a * b; }
    AlgebraElement power(const AlgebraElement& a, long long e) const {
        if (e >= 0) return a.pow(static_cast<unsigned>(e));
        // negative powers: group elements and nonzero scalars only
        if (a.weight() == 1) {
            for (std::size_t g = 0; g < a.codes().size(); ++g) {
                if (!a.codes()[g]) continue;
                const auto& G = alg.group();
                const Code c = alg.field().pow(a.codes()[g], e);
                return alg.basis(G.power(g, e)).scaled(c);
            }
        }
        throw Error(ErrorCode::ParseError, "negative exponent of a non-monomial element");
    }
};

}  // namespace detail

inline AlgebraElement GroupAlgebra::parse(std::string_view text) const {
    if (text.find(',') != std::string_view::npos) {
        std::vector<Code> c;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = text.find(',', start);
            const std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
            try {
                c.push_back(field_.parse_code(piece));
            } catch (const ParseError& e) {
                throw ParseError(e.code(), start + e.position(), "bad coefficient in vector");
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (c.size() != dimension())
            throw ParseError(ErrorCode::ParseError, text.size(),
                             "coefficient vector has " + std::to_string(c.size()) + " entries, group has " +
                                 std::to_string(dimension()));
        return from_codes(std::move(c));
    }
    return parse_expression(text, detail::AlgebraContext{*this});
}

/// f(b) = sum c_i b^i, with the constant term mapped to c_0 * 1_G.
inline AlgebraElement evaluate_at_algebra(const Polynomial& f, const AlgebraElement& b) {
    if (!(f.field() == b.field())) throw Error(ErrorCode::MixedFields, "polynomial and element over different fields");
    AlgebraElement acc = b.algebra().zero();
    const AlgebraElement one = b.algebra().one();
    for (int d = f.degree(); d >= 0; --d) acc = acc * b + one.scaled(f.coefficient(static_cast<std::size_t>(d)));
    return acc;
}

/// dim(Rb) = rank of the right regular matrix.
inline std::size_t ideal_dimension_rank(const AlgebraElement& b) { return b.right_regular_matrix().rank(); }

/// Canonical reduced-echelon basis of the left ideal Rb (rows are coordinate vectors).
inline Matrix ideal_basis_matrix(const AlgebraElement& b) {
    auto [red, pivots] = b.right_regular_matrix().transpose().rref();
    Matrix out(b.field(), pivots.size(), red.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < red.cols(); ++j) out(i, j) = red(i, j);
    return out;
}

}  // namespace idealdim
