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

/*
 * Recursive-descent parser shared by every text syntax in the library
 * (field literals, polynomials, algebra elements, group words).
 *
 *   expr    := [sign] term (sign term)*
 *   term    := factor ('*' factor)*
 *   factor  := primary ['^' ['-'] integer]
 *   primary := integer | identifier | '(' expr ')'
 *
 * The value domain is supplied by a context object; see ExpressionContext.
 */

#pragma once

#include <cctype>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace idealdim {

template <class C>
concept ExpressionContext = requires(const C& ctx, const typename C::value_type& a, long long n, std::string_view s) {
    { ctx.from_integer(n) } -> std::convertible_to<typename C::value_type>;
    { ctx.symbol(s) } -> std::convertible_to<std::optional<typename C::value_type>>;
    { ctx.add(a, a) } -> std::convertible_to<typename C::value_type>;
    { ctx.sub(a, a) } -> std::convertible_to<typename C::value_type>;
    { ctx.neg(a) } -> std::convertible_to<typename C::value_type>;
    { ctx.mul(a, a) } -> std::convertible_to<typename C::value_type>;
    { ctx.power(a, n) } -> std::convertible_to<typename C::value_type>;
};

namespace detail {

template <ExpressionContext Context>
class ExpressionParser {
   public:
    using Value = typename Context::value_type;

    ExpressionParser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

    Value parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        Value v = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(ErrorCode::ParseError, pos_, what); }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Value acc = term();
        if (negate) acc = ctx_.neg(acc);
        for (;;) {
            if (accept('+'))
                acc = ctx_.add(acc, term());
            else if (accept('-'))
                acc = ctx_.sub(acc, term());
            else
                return acc;
        }
    }

    Value term() {
        Value acc = factor();
        while (accept('*')) acc = ctx_.mul(acc, factor());
        return acc;
    }

    Value factor() {
        Value base = primary();
        if (!accept('^')) return base;
        skip_space();
        bool negative = accept('-');
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer exponent");
        long long e = integer();
        return ctx_.power(base, negative ? -e : e);
    }

    Value primary() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ctx_.from_integer(integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            auto v = ctx_.symbol(name);
            if (!v) throw ParseError(ErrorCode::UnknownGenerator, start, "unknown symbol '" + std::string(name) + "'");
            return *v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long long integer() {
        long long v = 0;
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int digit = text_[pos_] - '0';
            if (v > (std::numeric_limits<long long>::max() - digit) / 10) {
                pos_ = start;
                fail("integer literal too large");
            }
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }

    std::string_view text_;
    const Context& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <ExpressionContext Context>
typename Context::value_type parse_expression(std::string_view text, const Context& ctx) {
    return detail::ExpressionParser<Context>(text, ctx).parse();
}

}  // namespace idealdim
