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
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^k) over an explicit monic irreducible modulus.
 *
 * An element of GF(p^k) = GF(p)[a]/(f(a)) is the residue c_0 + c_1 a + ... + c_{k-1} a^{k-1}.
 * It is stored as the packed code c_0 + c_1 p + ... + c_{k-1} p^{k-1}, so codes run over
 * [0, p^k) and code 0 / code 1 are zero / one. Arithmetic always goes through the
 * coefficient list and the modulus; there are no logarithm tables, so any irreducible
 * modulus (primitive or not) is honored.
 *
 * Containers (Polynomial, Matrix, AlgebraElement) keep one GaloisField handle and a
 * vector of codes. FieldElement pairs a handle with a code for standalone use.
 *
 * Text syntax of literals: integers for GF(p); polynomial expressions in the letter
 * `a` for extension fields, e.g. `2*a+1`, `a^2`, `a^-1`.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "expression.hpp"

namespace idealdim {

using Code = std::uint32_t;

/// Fields must satisfy p^k < 2^31.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

/// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over GF(p) on raw residues, low degree first. Used only to
// validate moduli before a GaloisField exists.
using RawPoly = std::vector<std::uint32_t>;

inline void raw_trim(RawPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t raw_inv(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& m, std::uint32_t p) {
    raw_trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = raw_inv(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t f = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - f) * m[i]) % p);
        raw_trim(a);
    }
    return a;
}

inline RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    RawPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return raw_mod(std::move(c), m, p);
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint32_t p) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        RawPoly r = raw_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = raw_inv(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
    }
    return a;
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `index`.
inline RawPoly raw_monic_from_index(std::uint64_t index, unsigned deg, std::uint32_t p) {
    RawPoly f(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        f[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    f[deg] = 1;
    return f;
}

inline RawPoly raw_trial_factor(const RawPoly& f, unsigned max_deg, std::uint32_t p) {
    for (unsigned d = 1; d <= max_deg; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            RawPoly g = raw_monic_from_index(idx, d, p);
            if (raw_mod(f, g, p).empty()) return g;
        }
    }
    return {};
}

/**
 * Returns a monic proper factor of the monic polynomial f over GF(p), or an empty
 * vector when f is irreducible. Degrees up to 4 use exhaustive trial division; larger
 * degrees locate the smallest factor degree with gcd(x^{p^i} - x, f) first.
 */
inline RawPoly raw_find_factor(const RawPoly& f, std::uint32_t p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    if (deg <= 1) return {};
    if (deg <= 4) return raw_trial_factor(f, deg / 2, p);
    RawPoly x_power = {0, 1};
    for (unsigned i = 1; i <= deg / 2; ++i) {
        // x_power <- x_power^p mod f
        RawPoly acc = {1};
        RawPoly base = x_power;
        for (std::uint32_t e = p; e; e >>= 1) {
            if (e & 1) acc = raw_mulmod(acc, base, f, p);
            base = raw_mulmod(base, base, f, p);
        }
        x_power = acc;
        RawPoly diff = x_power;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        raw_trim(diff);
        RawPoly g = raw_gcd(diff, f, p);
        if (g.size() > 1) return raw_trial_factor(f, i, p);
    }
    return {};
}

/// Highest degree first, e.g. "x^2+2*x+2".
inline std::string raw_to_string(const RawPoly& f, char var) {
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || f[i] != 1) out += std::to_string(f[i]);
        if (i > 0) {
            if (f[i] != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

struct RawPolyContext {
    using value_type = RawPoly;
    std::uint32_t p;
    char var = 'x';

    RawPoly normalize(RawPoly a) const {
        raw_trim(a);
        return a;
    }
    RawPoly from_integer(long long n) const {
        return normalize({static_cast<std::uint32_t>(((n % static_cast<long long>(p)) + p) % p)});
    }
    std::optional<RawPoly> symbol(std::string_view s) const {
        if (s.size() == 1 && s[0] == var) return RawPoly{0, 1};
        return std::nullopt;
    }
    RawPoly add(const RawPoly& a, const RawPoly& b) const {
        RawPoly c(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
        return normalize(c);
    }
    RawPoly neg(const RawPoly& a) const {
        RawPoly c = a;
        for (auto& v : c) v = (p - v) % p;
        return normalize(c);
    }
    RawPoly sub(const RawPoly& a, const RawPoly& b) const { return add(a, neg(b)); }
    RawPoly mul(const RawPoly& a, const RawPoly& b) const {
        if (a.empty() || b.empty()) return {};
        RawPoly c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        return normalize(c);
    }
    RawPoly power(const RawPoly& a, long long e) const {
        if (e < 0) throw Error(ErrorCode::ParseError, "negative exponent in polynomial");
        RawPoly r = {1};
        for (long long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
};

struct FieldData {
    std::uint32_t p = 2;
    unsigned k = 1;
    std::uint32_t q = 2;
    RawPoly modulus;  // monic, size k+1; empty for the prime field
};

}  // namespace detail

class FieldElement;

/// Immutable handle to a finite field GF(p^k). Copies share the same definition.
class GaloisField {
   public:
    /// GF(2) by default.
    GaloisField() : data_(std::make_shared<detail::FieldData>()) {}

    std::uint32_t characteristic() const noexcept { return data_->p; }
    unsigned degree() const noexcept { return data_->k; }
    std::uint32_t order() const noexcept { return data_->q; }
    bool is_prime_field() const noexcept { return data_->k == 1; }
    /// Monic modulus, low degree first, including the leading 1. Empty for GF(p).
    const std::vector<Code>& modulus() const noexcept { return data_->modulus; }

    bool operator==(const GaloisField& other) const noexcept {
        return data_ == other.data_ || (data_->p == other.data_->p && data_->modulus == other.data_->modulus &&
                                        data_->k == other.data_->k);
    }

    Code zero() const noexcept { return 0; }
    Code one() const noexcept { return 1; }

    /// Residue of the integer n in the prime subfield.
    Code from_int(long long n) const noexcept {
        const long long p = data_->p;
        return static_cast<Code>(((n % p) + p) % p);
    }

    /// Code of the generator `a` (a root of the modulus).
    Code alpha() const {
        if (is_prime_field()) throw Error(ErrorCode::NotApplicable, "prime field has no generator symbol 'a'");
        return data_->p;
    }

    bool in_prime_field(Code c) const noexcept { return c < data_->p; }

    Code add(Code a, Code b) const noexcept {
        const std::uint32_t p = data_->p;
        if (data_->k == 1) return static_cast<Code>((std::uint64_t{a} + b) % p);
        if (p == 2) return a ^ b;
        Code out = 0, scale = 1;
        for (unsigned i = 0; i < data_->k; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return out;
    }

    Code neg(Code a) const noexcept {
        const std::uint32_t p = data_->p;
        if (p == 2) return a;
        if (data_->k == 1) return a == 0 ? 0 : p - a;
        Code out = 0, scale = 1;
        for (unsigned i = 0; i < data_->k; ++i) {
            out += ((p - a % p) % p) * scale;
            a /= p;
            scale *= p;
        }
        return out;
    }

    Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

    Code mul(Code a, Code b) const noexcept {
        const std::uint32_t p = data_->p;
        const unsigned k = data_->k;
        if (k == 1) return static_cast<Code>(std::uint64_t{a} * b % p);
        if (a == 0 || b == 0) return 0;
        std::array<std::uint64_t, 32> x{}, y{};
        std::array<std::uint64_t, 64> z{};
        for (unsigned i = 0; i < k; ++i) {
            x[i] = a % p;
            a /= p;
            y[i] = b % p;
            b /= p;
        }
        for (unsigned i = 0; i < k; ++i) {
            if (!x[i]) continue;
            for (unsigned j = 0; j < k; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
        }
        const auto& m = data_->modulus;
        for (unsigned d = 2 * k - 2; d >= k; --d) {
            const std::uint64_t f = z[d];
            if (!f) continue;
            // subtract f * a^{d-k} * modulus; modulus is monic
            for (unsigned i = 0; i <= k; ++i) z[d - k + i] = (z[d - k + i] + (p - f) * m[i]) % p;
        }
        Code out = 0, scale = 1;
        for (unsigned i = 0; i < k; ++i) {
            out += static_cast<Code>(z[i]) * scale;
            scale *= p;
        }
        return out;
    }

    Code pow(Code a, long long e) const {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        Code r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Code inv(Code a) const {
        if (a == 0) throw Error(ErrorCode::ZeroInversion, "inverse of zero");
        return pow(a, static_cast<long long>(data_->q) - 2);
    }

    Code div(Code a, Code b) const { return mul(a, inv(b)); }

    Code frobenius(Code a) const { return pow(a, data_->p); }

    /// Least t >= 1 with a^t = 1.
    std::uint64_t multiplicative_order(Code a) const {
        if (a == 0) throw Error(ErrorCode::ZeroElement, "multiplicative order of zero");
        std::uint64_t t = data_->q - 1;
        for (std::uint64_t r : detail::prime_divisors(t)) {
            while (t % r == 0 && pow(a, static_cast<long long>(t / r)) == 1) t /= r;
        }
        return t;
    }

    /// Smallest code generating the multiplicative group.
    Code primitive_element() const {
        for (Code c = 1; c < data_->q; ++c)
            if (multiplicative_order(c) == data_->q - 1) return c;
        throw Error(ErrorCode::InternalError, "no primitive element found");
    }

    /// Coefficients c_0..c_{k-1} of the residue.
    std::vector<std::uint32_t> digits(Code a) const {
        std::vector<std::uint32_t> out(data_->k);
        for (auto& d : out) {
            d = a % data_->p;
            a /= data_->p;
        }
        return out;
    }

    Code from_digits(const std::vector<std::uint32_t>& digits) const {
        Code out = 0, scale = 1;
        for (unsigned i = 0; i < data_->k; ++i) {
            out += (i < digits.size() ? digits[i] % data_->p : 0) * scale;
            scale *= data_->p;
        }
        return out;
    }

    /// Literal text: an integer in GF(p), a polynomial in `sym` (highest power first) otherwise.
    std::string format(Code a, std::string_view sym = "a") const {
        if (is_prime_field()) return std::to_string(a);
        const auto d = digits(a);
        std::string out;
        for (std::size_t i = d.size(); i-- > 0;) {
            if (d[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(d[i]);
                continue;
            }
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += sym;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    /// Canonical spec text accepted by parse_field_spec.
    std::string spec_string() const {
        if (is_prime_field()) return "gf:" + std::to_string(data_->p);
        return "gf:" + std::to_string(data_->p) + "^" + std::to_string(data_->k) + ":" +
               detail::raw_to_string(data_->modulus, 'x');
    }

    Code parse_code(std::string_view text) const;
    FieldElement element(Code c) const;
    FieldElement parse(std::string_view text) const;

   private:
    explicit GaloisField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    friend GaloisField make_field(std::uint32_t p, unsigned k, std::optional<std::vector<Code>> modulus);

    std::shared_ptr<const detail::FieldData> data_;
};

/// A field value bound to its field. Immutable; cheap to copy.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(GaloisField field, Code code) : field_(std::move(field)), code_(code) {}

    const GaloisField& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    FieldElement operator+(const FieldElement& o) const { return {field_, field_.add(code_, check(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, field_.sub(code_, check(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, field_.mul(code_, check(o))}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, field_.div(code_, check(o))}; }
    FieldElement operator-() const { return {field_, field_.neg(code_)}; }
    FieldElement inverse() const { return {field_, field_.inv(code_)}; }
    FieldElement pow(long long e) const { return {field_, field_.pow(code_, e)}; }
    FieldElement frobenius() const { return {field_, field_.frobenius(code_)}; }
    std::uint64_t multiplicative_order() const { return field_.multiplicative_order(code_); }

    bool operator==(const FieldElement& o) const { return field_ == o.field_ && code_ == o.code_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string(std::string_view sym = "a") const { return field_.format(code_, sym); }

   private:
    Code check(const FieldElement& o) const {
        if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, "operands belong to different fields");
        return o.code_;
    }

    GaloisField field_;
    Code code_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

inline FieldElement GaloisField::element(Code c) const { return FieldElement(*this, c); }

namespace detail {

/// Parser context for field literals: integers and the symbol `a`.
struct FieldLiteralContext {
    using value_type = Code;
    const GaloisField& field;

    Code from_integer(long long n) const { return field.from_int(n); }
    std::optional<Code> symbol(std::string_view s) const {
        if ((s == "a" || s == "alpha") && !field.is_prime_field()) return field.alpha();
        return std::nullopt;
    }
    Code add(Code a, Code b) const { return field.add(a, b); }
    Code sub(Code a, Code b) const { return field.sub(a, b); }
    Code neg(Code a) const { return field.neg(a); }
    Code mul(Code a, Code b) const { return field.mul(a, b); }
    Code power(Code a, long long e) const { return field.pow(a, e); }
};

}  // namespace detail

inline Code GaloisField::parse_code(std::string_view text) const {
    return parse_expression(text, detail::FieldLiteralContext{*this});
}

inline FieldElement GaloisField::parse(std::string_view text) const { return element(parse_code(text)); }

/// Lexicographically smallest monic irreducible of degree k over GF(p), comparing
/// (c_{k-1}, ..., c_0).
inline std::vector<Code> smallest_irreducible(std::uint32_t p, unsigned k) {
    const std::uint64_t count = detail::ipow(p, k);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto f = detail::raw_monic_from_index(idx, k, p);
        if (k == 1 || detail::raw_find_factor(f, p).empty()) return f;
    }
    throw Error(ErrorCode::InternalError, "no irreducible polynomial found");
}

/**
 * Validated GF(p^k). When k > 1 and no modulus is given, the smallest irreducible is
 * used. Throws NonPrimeCharacteristic, FieldTooLarge or ReducibleModulus (the message
 * names a monic factor).
 */
inline GaloisField make_field(std::uint32_t p, unsigned k = 1, std::optional<std::vector<Code>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(ErrorCode::ReducibleModulus, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q >= kMaxFieldOrder) throw Error(ErrorCode::FieldTooLarge, "p^k must be below 2^31");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->k = k;
    data->q = static_cast<std::uint32_t>(q);
    if (k > 1) {
        if (modulus) {
            detail::RawPoly f = *modulus;
            for (auto& c : f) c %= p;
            detail::raw_trim(f);
            if (f.size() != k + 1 || f.back() != 1)
                throw Error(ErrorCode::ReducibleModulus,
                            "modulus must be monic of degree " + std::to_string(k) + ", got " + detail::raw_to_string(f, 'x'));
            auto factor = detail::raw_find_factor(f, p);
            if (!factor.empty())
                throw Error(ErrorCode::ReducibleModulus, detail::raw_to_string(f, 'x') + " has factor " +
                                                             detail::raw_to_string(factor, 'x'));
            data->modulus = std::move(f);
        } else {
            data->modulus = smallest_irreducible(p, k);
        }
    } else if (modulus && modulus->size() > 2) {
        throw Error(ErrorCode::ReducibleModulus, "prime field takes no modulus of degree > 1");
    }
    return GaloisField(std::move(data));
}

/// Parses a modulus polynomial in `x` over GF(p), e.g. "x^2+2*x+2".
inline std::vector<Code> parse_raw_polynomial(std::uint32_t p, std::string_view text, char var = 'x') {
    return parse_expression(text, detail::RawPolyContext{p, var});
}

inline GaloisField make_field(std::uint32_t p, unsigned k, std::string_view modulus_text) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    return make_field(p, k, parse_raw_polynomial(p, modulus_text));
}

/**
 * Field spec text: `gf:P`, `gf:P^K`, `gf:Q` with Q a prime power, each optionally
 * followed by `:MODULUS` (a polynomial in x).
 */
inline GaloisField parse_field_spec(std::string_view text) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError(ErrorCode::ParseError, 0, "bad field spec '" + std::string(text) + "': " + why);
    };
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.substr(0, 3) != "gf:" && s.substr(0, 3) != "GF:") throw fail("expected prefix 'gf:'");
    s.remove_prefix(3);
    std::string_view modulus_text;
    if (auto colon = s.find(':'); colon != std::string_view::npos) {
        modulus_text = s.substr(colon + 1);
        s = s.substr(0, colon);
    }
    auto to_uint = [&](std::string_view v) -> std::uint64_t {
        if (v.empty() || v.size() > 10) throw fail("expected an integer");
        std::uint64_t out = 0;
        for (char c : v) {
            if (c < '0' || c > '9') throw fail("expected an integer");
            out = out * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return out;
    };
    std::uint64_t p = 0;
    unsigned k = 1;
    if (auto caret = s.find('^'); caret != std::string_view::npos) {
        p = to_uint(s.substr(0, caret));
        k = static_cast<unsigned>(to_uint(s.substr(caret + 1)));
    } else {
        const std::uint64_t q = to_uint(s);
        if (q >= kMaxFieldOrder) throw Error(ErrorCode::FieldTooLarge, "field order must be below 2^31");
        auto primes = detail::prime_divisors(q);
        if (primes.size() != 1)
            throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
        p = primes.front();
        k = 0;
        for (std::uint64_t r = q; r > 1; r /= p) ++k;
    }
    if (p >= kMaxFieldOrder) throw Error(ErrorCode::FieldTooLarge, "field order must be below 2^31");
    if (!modulus_text.empty()) {
        if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
        auto f = parse_raw_polynomial(static_cast<std::uint32_t>(p), modulus_text);
        if (k == 1 && f.size() > 2) k = static_cast<unsigned>(f.size() - 1);
        return make_field(static_cast<std::uint32_t>(p), k, std::move(f));
    }
    return make_field(static_cast<std::uint32_t>(p), k);
}

}  // namespace idealdim
