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

#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "expression.hpp"
#include "field.hpp"

namespace idealdim {

/// Dense univariate polynomial over a GaloisField, low degree first, no trailing zeros.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(GaloisField field) : field_(std::move(field)) {}
    Polynomial(GaloisField field, std::vector<Code> coefficients) : field_(std::move(field)), c_(std::move(coefficients)) {
        trim();
    }

    static Polynomial constant(const GaloisField& f, Code c) { return Polynomial(f, {c}); }
    static Polynomial one(const GaloisField& f) { return constant(f, 1); }
    static Polynomial x(const GaloisField& f) { return Polynomial(f, {0, 1}); }
    static Polynomial monomial(const GaloisField& f, Code c, std::size_t degree) {
        std::vector<Code> v(degree + 1, 0);
        v[degree] = c;
        return Polynomial(f, std::move(v));
    }

    const GaloisField& field() const noexcept { return field_; }
    const std::vector<Code>& codes() const noexcept { return c_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    Code coefficient(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Code leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coefficient(i), o.coefficient(i));
        return Polynomial(field_, std::move(r));
    }

    Polynomial operator-() const {
        std::vector<Code> r(c_);
        for (auto& v : r) v = field_.neg(v);
        return Polynomial(field_, std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return Polynomial(field_);
        std::vector<Code> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
        }
        return Polynomial(field_, std::move(r));
    }

    Polynomial scaled(Code s) const {
        std::vector<Code> r(c_);
        for (auto& v : r) v = field_.mul(v, s);
        return Polynomial(field_, std::move(r));
    }

    /// Quotient and remainder; throws ZeroPolynomial for a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        check(d);
        if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
        if (degree() < d.degree()) return {Polynomial(field_), *this};
        std::vector<Code> rem(c_);
        std::vector<Code> quo(c_.size() - d.c_.size() + 1, 0);
        const Code lead_inv = field_.inv(d.leading());
        const std::size_t dd = d.c_.size() - 1;
        for (std::size_t i = rem.size(); i-- > dd;) {
            const Code f = field_.mul(rem[i], lead_inv);
            if (f == 0) continue;
            quo[i - dd] = f;
            for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = field_.sub(rem[i - dd + j], field_.mul(f, d.c_[j]));
        }
        return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
    }

    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    bool divides(const Polynomial& f) const { return (f % *this).is_zero(); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading()));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(field_);
        std::vector<Code> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
        return Polynomial(field_, std::move(r));
    }

    Code evaluate(Code x) const {
        Code acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = one(field_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical factor order: degree, then coefficient codes from the constant term up.
    bool canonical_less(const Polynomial& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return c_ < o.c_;
    }

    /// Expanded form, low degree first: "1+x+x^2", "(2*a+1)*x".
    std::string to_string(std::string_view sym = "a") const { return render(sym, false); }

    /// Expanded form, highest degree first: "x^2+x+1".
    std::string to_string_descending(std::string_view sym = "a") const { return render(sym, true); }

   private:
    std::string render(std::string_view sym, bool descending) const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t step = 0; step < c_.size(); ++step) {
            const std::size_t i = descending ? c_.size() - 1 - step : step;
            if (c_[i] == 0) continue;
            if (!out.empty()) out += "+";
            std::string coeff = field_.format(c_[i], sym);
            if (i == 0) {
                out += coeff;
                continue;
            }
            if (c_[i] != 1) {
                const bool compound = coeff.find_first_of("+*") != std::string::npos;
                out += compound ? "(" + coeff + ")" : coeff;
                out += "*";
            }
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const Polynomial& o) const {
        if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, "polynomials over different fields");
    }

    GaloisField field_;
    std::vector<Code> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

/// Bezout data: u*f + v*g = d with d = gcd(f, g) monic.
struct Xgcd {
    Polynomial d, u, v;
};

inline Xgcd poly_xgcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
    const GaloisField& F = f.field();
    Polynomial r0 = f, r1 = g;
    Polynomial s0 = Polynomial::one(F), s1(F);
    Polynomial t0(F), t1 = Polynomial::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Code inv = F.inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial(f.field());
    return ((f * g) / poly_gcd(f, g)).monic();
}

/// base^e mod m for an arbitrary-size exponent e given as a 64-bit value.
inline Polynomial pow_mod(Polynomial base, std::uint64_t e, const Polynomial& m) {
    Polynomial r = Polynomial::one(base.field()) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

/// Exact power of x dividing f.
inline unsigned x_multiplicity(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "x-multiplicity of the zero polynomial");
    unsigned n = 0;
    while (f.coefficient(n) == 0) ++n;
    return n;
}

struct PolyFactor {
    Polynomial factor;  // monic irreducible
    unsigned multiplicity;
};

namespace detail {

inline std::uint64_t polynomial_hash(const Polynomial& f) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(f.field().characteristic());
    for (Code c : f.field().modulus()) mix(c);
    for (Code c : f.codes()) mix(c + 0x9e3779b9u);
    return h;
}

/// g with g(x)^p = f(x) over a perfect field (requires f' = 0).
inline Polynomial pth_root(const Polynomial& f) {
    const GaloisField& F = f.field();
    const std::uint32_t p = F.characteristic();
    // c^{1/p} = c^{q/p}
    const long long root_exp = static_cast<long long>(F.order() / p);
    std::vector<Code> r(static_cast<std::size_t>(f.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.pow(f.coefficient(i * p), root_exp);
    return Polynomial(F, std::move(r));
}

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
inline std::vector<PolyFactor> squarefree_decomposition(const Polynomial& f) {
    std::vector<PolyFactor> out;
    if (f.degree() < 1) return out;
    const std::uint32_t p = f.field().characteristic();
    Polynomial c = poly_gcd(f, f.derivative());
    Polynomial w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Polynomial y = poly_gcd(w, c);
        Polynomial fac = w / y;
        if (!fac.is_one()) out.push_back({fac.monic(), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(c.monic()))) out.push_back({g, m * p});
    }
    return out;
}

/// Distinct-degree split of a monic squarefree polynomial: (product of degree-d irreducibles, d).
inline std::vector<std::pair<Polynomial, unsigned>> distinct_degree(Polynomial f) {
    std::vector<std::pair<Polynomial, unsigned>> out;
    const GaloisField& F = f.field();
    const Polynomial X = Polynomial::x(F);
    Polynomial h = X % f;
    unsigned d = 1;
    while (f.degree() >= 2 * static_cast<int>(d)) {
        h = pow_mod(h, F.order(), f);
        Polynomial g = poly_gcd(f, h - X);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
        ++d;
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
    return out;
}

inline Polynomial random_polynomial(const GaloisField& F, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<Code> dist(0, F.order() - 1);
    std::vector<Code> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& v : c) v = dist(rng);
    return Polynomial(F, std::move(c));
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic product of degree-d irreducibles.
inline void equal_degree(const Polynomial& f, unsigned d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    const GaloisField& F = f.field();
    const std::uint64_t q = F.order();
    for (;;) {
        Polynomial a = random_polynomial(F, f.degree() - 1, rng) % f;
        if (a.degree() < 1) continue;
        Polynomial b(F);
        if (q % 2 == 1) {
            // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
            Polynomial t = a, s = a;
            for (unsigned i = 1; i < d; ++i) {
                t = pow_mod(t, q, f);
                s = (s * t) % f;
            }
            b = pow_mod(s, (q - 1) / 2, f) - Polynomial::one(F);
        } else {
            // absolute trace to GF(2)
            const unsigned steps = F.degree() * d;
            Polynomial t = a;
            b = a;
            for (unsigned i = 1; i < steps; ++i) {
                t = (t * t) % f;
                b = b + t;
            }
        }
        if (b.is_zero()) continue;
        Polynomial g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((f / g).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/**
 * Factorization into monic irreducibles with multiplicities, in canonical order
 * (degree, then coefficients). The leading coefficient of f is dropped. Randomized
 * splitting is seeded from a hash of f, so the output is run-to-run identical.
 */
inline std::vector<PolyFactor> poly_factor(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of the zero polynomial");
    std::vector<PolyFactor> result;
    if (f.degree() < 1) return result;
    std::mt19937_64 rng(detail::polynomial_hash(f));
    for (const auto& [part, mult] : detail::squarefree_decomposition(f.monic())) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<Polynomial> pieces;
            detail::equal_degree(block, d, rng, pieces);
            for (auto& g : pieces) result.push_back({g.monic(), mult});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return a.factor.canonical_less(b.factor); });
    // identical irreducibles from different squarefree layers cannot occur, but merge defensively
    std::vector<PolyFactor> merged;
    for (auto& pf : result) {
        if (!merged.empty() && merged.back().factor == pf.factor)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(pf);
    }
    return merged;
}

inline bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) return false;
    auto fs = poly_factor(f);
    return fs.size() == 1 && fs.front().multiplicity == 1;
}

/// Product of factors; used to re-expand factorizations.
inline Polynomial expand(const GaloisField& F, const std::vector<PolyFactor>& factors) {
    Polynomial r = Polynomial::one(F);
    for (const auto& pf : factors) r = r * pf.factor.pow(pf.multiplicity);
    return r;
}

/// Factored text such as "x*(x^2+x+1)^2"; the leading unit is prefixed when it is not 1.
inline std::string factored_string(const Polynomial& f, std::string_view sym = "a") {
    if (f.is_zero()) return "0";
    if (f.degree() == 0) return f.to_string(sym);
    std::string out;
    if (f.leading() != 1) {
        std::string lead = f.field().format(f.leading(), sym);
        out += (lead.find('+') != std::string::npos ? "(" + lead + ")" : lead);
    }
    for (const auto& pf : poly_factor(f)) {
        if (!out.empty()) out += "*";
        const std::string s = pf.factor.to_string_descending(sym);
        const bool bare = s == "x";
        out += bare ? s : "(" + s + ")";
        if (pf.multiplicity > 1) out += "^" + std::to_string(pf.multiplicity);
    }
    return out;
}

namespace detail {

struct PolynomialContext {
    using value_type = Polynomial;
    const GaloisField& field;

    Polynomial from_integer(long long n) const { return Polynomial::constant(field, field.from_int(n)); }
    std::optional<Polynomial> symbol(std::string_view s) const {
        if (s == "x") return Polynomial::x(field);
        if ((s == "a" || s == "alpha") && !field.is_prime_field()) return Polynomial::constant(field, field.alpha());
        return std::nullopt;
    }
    Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
    Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
    Polynomial neg(const Polynomial& a) const { return -a; }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
    Polynomial power(const Polynomial& a, long long e) const {
        if (e < 0) {
            if (a.degree() == 0) return Polynomial::constant(field, field.pow(a.coefficient(0), e));
            throw Error(ErrorCode::ParseError, "negative exponent of a non-constant polynomial");
        }
        return a.pow(static_cast<unsigned>(e));
    }
};

}  // namespace detail

/// Parses expanded or product-of-powers text in `x`, e.g. "x^4*(x^2+x+1)^4".
inline Polynomial parse_polynomial(const GaloisField& F, std::string_view text) {
    return parse_expression(text, detail::PolynomialContext{F});
}

}  // namespace idealdim
