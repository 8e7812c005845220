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
 * @file matrix.hpp
 * @brief Exact dense linear algebra over a GaloisField.
 *
 * All elimination uses the fixed pivot rule "first nonzero entry in column order",
 * so reduced echelon forms are canonical and reproducible.
 */

#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "polynomial.hpp"

namespace idealdim {

class Matrix {
   public:
    Matrix() = default;
    Matrix(GaloisField field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const GaloisField& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds a matrix from row vectors of codes; all rows must have equal length.
    static Matrix from_rows(const GaloisField& f, const std::vector<std::vector<Code>>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(f, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const GaloisField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Code& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Code operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    FieldElement at(std::size_t i, std::size_t j) const { return field_.element((*this)(i, j)); }

    std::span<const Code> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
    std::vector<Code> column(std::size_t j) const {
        std::vector<Code> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool is_zero() const noexcept {
        for (Code c : a_)
            if (c) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator+(const Matrix& o) const {
        same_shape(o);
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        same_shape(o);
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, "matrices over different fields");
        if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "incompatible matrix product");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Code a = (*this)(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
            }
        return r;
    }

    std::vector<Code> apply(std::span<const Code> v) const {
        if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
        std::vector<Code> r(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = field_.add(r[i], field_.mul((*this)(i, j), v[j]));
        return r;
    }

    Matrix scaled(Code s) const {
        Matrix r = *this;
        for (auto& c : r.a_) c = field_.mul(c, s);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix pow(unsigned e) const {
        require_square("pow");
        Matrix r = identity(field_, rows_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Rows of `other` appended below this matrix.
    Matrix stacked(const Matrix& other) const {
        if (cols_ != other.cols_) throw Error(ErrorCode::DimensionMismatch, "column count mismatch");
        Matrix r(field_, rows_ + other.rows_, cols_);
        std::copy(a_.begin(), a_.end(), r.a_.begin());
        std::copy(other.a_.begin(), other.a_.end(), r.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
        return r;
    }

    /// Reduced row echelon form and pivot columns.
    std::pair<Matrix, std::vector<std::size_t>> rref() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            m.swap_rows(r, piv);
            const Code inv = field_.inv(m(r, c));
            for (std::size_t j = 0; j < cols_; ++j) m(r, j) = field_.mul(m(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m(i, c) == 0) continue;
                const Code f = m(i, c);
                for (std::size_t j = 0; j < cols_; ++j) m(i, j) = field_.sub(m(i, j), field_.mul(f, m(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return {std::move(m), std::move(pivots)};
    }

    std::size_t rank() const { return rref().second.size(); }
    std::size_t kernel_dim() const { return cols_ - rank(); }

    std::size_t kernel_dim_of_power(unsigned n) const {
        require_square("kernel_dim_of_power");
        if (n == 0) return 0;
        return pow(n).kernel_dim();
    }

    FieldElement trace() const {
        require_square("trace");
        Code t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
        return field_.element(t);
    }

    Matrix inverse() const {
        require_square("inverse");
        const std::size_t n = rows_;
        Matrix aug(field_, n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = 1;
        }
        auto [red, pivots] = aug.rref();
        if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
        Matrix inv(field_, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
        return inv;
    }

    /// det(xI - M) via reduction to upper Hessenberg form.
    Polynomial char_poly() const {
        require_square("char_poly");
        const std::size_t n = rows_;
        Matrix h = *this;
        for (std::size_t j = 0; j + 2 < n; ++j) {
            std::size_t piv = j + 1;
            while (piv < n && h(piv, j) == 0) ++piv;
            if (piv == n) continue;
            if (piv != j + 1) {
                h.swap_rows(piv, j + 1);
                h.swap_cols(piv, j + 1);
            }
            const Code inv = field_.inv(h(j + 1, j));
            for (std::size_t i = j + 2; i < n; ++i) {
                const Code f = field_.mul(h(i, j), inv);
                if (!f) continue;
                for (std::size_t c = 0; c < n; ++c) h(i, c) = field_.sub(h(i, c), field_.mul(f, h(j + 1, c)));
                for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = field_.add(h(r, j + 1), field_.mul(f, h(r, i)));
            }
        }
        // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_{im} (prod_{k=i+1}^{m} h_{k,k-1}) p_{i-1}
        std::vector<Polynomial> p;
        p.reserve(n + 1);
        p.push_back(Polynomial::one(field_));
        const Polynomial X = Polynomial::x(field_);
        for (std::size_t m = 1; m <= n; ++m) {
            Polynomial next = (X - Polynomial::constant(field_, h(m - 1, m - 1))) * p[m - 1];
            Code prod = 1;
            for (std::size_t i = m - 1; i >= 1; --i) {
                prod = field_.mul(prod, h(i, i - 1));
                if (prod == 0) break;
                const Code coeff = field_.mul(h(i - 1, m - 1), prod);
                next = next - p[i - 1].scaled(coeff);
            }
            p.push_back(std::move(next));
        }
        return p[n];
    }

    /**
     * Least-degree monic annihilator: the lcm over standard basis vectors e_i of the
     * minimal polynomial of the Krylov sequence e_i, M e_i, M^2 e_i, ...
     */
    Polynomial min_poly() const {
        require_square("min_poly");
        const std::size_t n = rows_;
        Polynomial result = Polynomial::one(field_);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Code> v(n, 0);
            v[i] = 1;
            // skip vectors already annihilated by the running lcm
            if (is_zero_vector(result_apply(result, v))) continue;
            result = poly_lcm(result, krylov_min_poly(v));
        }
        return result;
    }

    /// f(M) by Horner's rule.
    Matrix evaluate(const Polynomial& f) const {
        require_square("evaluate");
        Matrix acc(field_, rows_, cols_);
        const Matrix I = identity(field_, rows_);
        for (int d = f.degree(); d >= 0; --d) acc = acc * (*this) + I.scaled(f.coefficient(static_cast<std::size_t>(d)));
        return acc;
    }

    /// Row-major bracketed text: [[1, 0], [0, a+1]]
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                out += field_.format((*this)(i, j));
            }
            out += "]";
        }
        return out + "]";
    }

   private:
    void require_square(const char* op) const {
        if (!is_square()) throw Error(ErrorCode::NonSquare, std::string(op) + " requires a square matrix");
    }
    void same_shape(const Matrix& o) const {
        if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, "matrices over different fields");
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    static bool is_zero_vector(const std::vector<Code>& v) {
        for (Code c : v)
            if (c) return false;
        return true;
    }

    std::vector<Code> result_apply(const Polynomial& f, std::vector<Code> v) const {
        // f(M) v by Horner on vectors
        std::vector<Code> acc(rows_, 0);
        for (int d = f.degree(); d >= 0; --d) {
            acc = apply(acc);
            const Code c = f.coefficient(static_cast<std::size_t>(d));
            for (std::size_t i = 0; i < rows_; ++i) acc[i] = field_.add(acc[i], field_.mul(c, v[i]));
        }
        return acc;
    }

    /// Minimal polynomial of the sequence v, Mv, M^2 v, ... via incremental elimination.
    Polynomial krylov_min_poly(std::vector<Code> v) const {
        const std::size_t n = rows_;
        // reduced basis vectors with their pivot and their expression as a polynomial in M applied to v
        struct Row {
            std::vector<Code> vec;
            std::size_t pivot;
            Polynomial combo;
        };
        std::vector<Row> basis;
        std::vector<Code> cur = std::move(v);
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<Code> w = cur;
            Polynomial combo = Polynomial::monomial(field_, 1, k);
            for (const Row& r : basis) {
                const Code f = w[r.pivot];
                if (!f) continue;
                for (std::size_t i = 0; i < n; ++i) w[i] = field_.sub(w[i], field_.mul(f, r.vec[i]));
                combo = combo - r.combo.scaled(f);
            }
            std::size_t piv = 0;
            while (piv < n && w[piv] == 0) ++piv;
            if (piv == n) return combo.monic();
            const Code inv = field_.inv(w[piv]);
            for (auto& c : w) c = field_.mul(c, inv);
            basis.push_back({std::move(w), piv, combo.scaled(inv)});
            cur = apply(cur);
        }
        throw Error(ErrorCode::InternalError, "Krylov sequence did not terminate");
    }

    GaloisField field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Code> a_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

}  // namespace idealdim
