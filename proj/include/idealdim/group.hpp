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
 * @file group.hpp
 * @brief Finite groups stored as multiplication tables with an explicit element order.
 *
 * The element order is the coordinate basis of every group algebra built on the group,
 * so it is part of the group's identity. Constructors enumerate elements breadth-first
 * over generator words (right multiplication by generators, starting at the identity),
 * except direct products, which order pairs lexicographically with the left factor slow.
 *
 * Permutations compose left to right: in g*h, g is applied first.
 *
 * Naming: dihedral(m) is the group of order 2m, <u, v | u^2 = v^m = 1, uv = v^-1 u>.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "expression.hpp"

namespace idealdim {

/// gen^exponent, with gen an index into the group's generator list.
struct Letter {
    std::size_t generator;
    long long exponent;
    bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

inline constexpr std::size_t kDefaultClosureCap = 10000;

class Group {
   public:
    /**
     * Validates and wraps a multiplication table (table[i][j] = index of g_i g_j).
     * `generators` are element indices named by `generator_names`; `words` gives each
     * element as a word in the generators and is used for labels.
     */
    Group(std::vector<std::vector<std::size_t>> table, std::vector<std::string> generator_names,
          std::vector<std::size_t> generators, std::vector<Word> words)
        : table_(std::move(table)),
          gen_names_(std::move(generator_names)),
          gens_(std::move(generators)),
          words_(std::move(words)) {
        validate();
    }

    std::size_t order() const noexcept { return table_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

    const std::vector<std::string>& generator_names() const noexcept { return gen_names_; }
    const std::vector<std::size_t>& generators() const noexcept { return gens_; }
    std::optional<std::size_t> generator_by_name(std::string_view name) const {
        for (std::size_t i = 0; i < gen_names_.size(); ++i)
            if (gen_names_[i] == name) return i;
        return std::nullopt;
    }

    const Word& word(std::size_t i) const { return words_[i]; }

    std::string label(std::size_t i) const { return word_to_string(words_[i]); }

    std::string word_to_string(const Word& w) const {
        if (w.empty()) return "1";
        std::string out;
        for (const auto& l : w) {
            if (!out.empty()) out += "*";
            out += gen_names_[l.generator];
            if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
        }
        return out;
    }

    std::size_t power(std::size_t a, long long e) const {
        if (e < 0) {
            a = inverse(a);
            e = -e;
        }
        std::size_t r = identity_;
        while (e) {
            if (e & 1) r = multiply(r, a);
            a = multiply(a, a);
            e >>= 1;
        }
        return r;
    }

    std::size_t evaluate(const Word& w) const {
        std::size_t r = identity_;
        for (const auto& l : w) r = multiply(r, power(gens_.at(l.generator), l.exponent));
        return r;
    }

    std::size_t element_order(std::size_t a) const {
        std::size_t k = 1;
        for (std::size_t x = a; x != identity_; x = multiply(x, a)) ++k;
        return k;
    }

    /// lcm of element orders.
    std::size_t exponent() const {
        std::size_t e = 1;
        for (std::size_t i = 0; i < order(); ++i) e = std::lcm(e, element_order(i));
        return e;
    }

    /// Largest power of p dividing |G|.
    std::size_t p_part(std::size_t p) const {
        std::size_t n = order(), part = 1;
        if (p < 2) return 1;
        while (n % p == 0) {
            n /= p;
            part *= p;
        }
        return part;
    }

    bool is_abelian() const {
        for (std::size_t i = 0; i < order(); ++i)
            for (std::size_t j = i + 1; j < order(); ++j)
                if (table_[i][j] != table_[j][i]) return false;
        return true;
    }

    /// Index permutation g -> g^q.
    std::vector<std::size_t> power_map(long long q) const {
        std::vector<std::size_t> out(order());
        for (std::size_t i = 0; i < order(); ++i) out[i] = power(i, q);
        return out;
    }

    bool is_cyclic() const {
        for (std::size_t i = 0; i < order(); ++i)
            if (element_order(i) == order()) return true;
        return false;
    }

    /**
     * Same group with elements re-listed in the order given by `new_order` (old
     * indices). The words of the new listing become the labels.
     */
    Group reordered(const std::vector<std::size_t>& new_order, std::vector<Word> new_words) const {
        const std::size_t n = order();
        if (new_order.size() != n)
            throw Error(ErrorCode::BadOverride,
                        "ordering lists " + std::to_string(new_order.size()) + " elements, group has " + std::to_string(n));
        std::vector<std::size_t> pos(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            if (new_order[k] >= n || pos[new_order[k]] != n)
                throw Error(ErrorCode::BadOverride, "ordering repeats element '" + label(new_order[k]) + "'");
            pos[new_order[k]] = k;
        }
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t[a][b] = pos[table_[new_order[a]][new_order[b]]];
        std::vector<std::size_t> gens;
        for (std::size_t g : gens_) gens.push_back(pos[g]);
        return Group(std::move(t), gen_names_, std::move(gens), std::move(new_words));
    }

    /// Group with the generators renamed (same count required).
    Group renamed(std::vector<std::string> names) const {
        if (names.size() != gen_names_.size()) throw Error(ErrorCode::InvalidGroup, "generator name count mismatch");
        return Group(table_, std::move(names), gens_, words_);
    }

   private:
    void validate() {
        const std::size_t n = table_.size();
        if (n == 0) throw Error(ErrorCode::InvalidGroup, "empty group");
        if (words_.size() != n) throw Error(ErrorCode::InvalidGroup, "one word per element required");
        if (gens_.size() != gen_names_.size()) throw Error(ErrorCode::InvalidGroup, "generator/name count mismatch");
        for (const auto& row : table_) {
            if (row.size() != n) throw Error(ErrorCode::InvalidGroup, "table is not square");
            std::vector<bool> seen(n, false);
            for (std::size_t v : row) {
                if (v >= n || seen[v]) throw Error(ErrorCode::InvalidGroup, "table is not a Latin square");
                seen[v] = true;
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<bool> seen(n, false);
            for (std::size_t i = 0; i < n; ++i) {
                if (seen[table_[i][j]]) throw Error(ErrorCode::InvalidGroup, "table is not a Latin square");
                seen[table_[i][j]] = true;
            }
        }
        identity_ = n;
        for (std::size_t i = 0; i < n && identity_ == n; ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) ok = table_[i][j] == j && table_[j][i] == j;
            if (ok) identity_ = i;
        }
        if (identity_ == n) throw Error(ErrorCode::InvalidGroup, "no identity element");
        if (n <= 64) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                            throw Error(ErrorCode::InvalidGroup, "multiplication is not associative");
        }
        inverse_.assign(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (table_[a][b] == identity_) inverse_[a] = b;
        for (std::size_t g : gens_)
            if (g >= n) throw Error(ErrorCode::InvalidGroup, "generator index out of range");
    }

    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::string> gen_names_;
    std::vector<std::size_t> gens_;
    std::vector<Word> words_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

namespace detail {

inline Word extend_word(Word w, std::size_t gen) {
    if (!w.empty() && w.back().generator == gen)
        ++w.back().exponent;
    else
        w.push_back({gen, 1});
    return w;
}

/**
 * Closure of concrete generator values under `mul`, enumerated breadth-first from
 * `identity` by right multiplication with each generator in order.
 */
template <class T, class Mul>
Group close_under(const T& identity, const std::vector<T>& generators, std::vector<std::string> names, Mul mul,
                  std::size_t cap = kDefaultClosureCap) {
    std::vector<T> elems{identity};
    std::vector<Word> words{Word{}};
    std::map<T, std::size_t> index{{identity, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
            T next = mul(elems[head], generators[g]);
            if (index.count(next)) continue;
            if (elems.size() >= cap)
                throw Error(ErrorCode::ClosureCapExceeded, "group closure exceeds " + std::to_string(cap) + " elements");
            index.emplace(next, elems.size());
            elems.push_back(next);
            words.push_back(extend_word(words[head], g));
        }
    }
    const std::size_t n = elems.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(mul(elems[i], elems[j]));
    std::vector<std::size_t> gens;
    for (const T& g : generators) gens.push_back(index.at(g));
    return Group(std::move(table), std::move(names), std::move(gens), std::move(words));
}

}  // namespace detail

/// Cyclic group of order n generated by `x`; listed 1, x, x^2, ...
inline Group cyclic(std::size_t n, std::string name = "x") {
    if (n == 0) throw Error(ErrorCode::InvalidGroup, "cyclic group of order 0");
    if (n == 1) return Group({{0}}, {std::move(name)}, {0}, {Word{}});
    return detail::close_under<std::size_t>(0, {1 % n}, {std::move(name)},
                                            [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

/// Dihedral group of order 2m: <u, v | u^2 = v^m = 1, uv = v^-1 u>.
inline Group dihedral(std::size_t m) {
    if (m < 1) throw Error(ErrorCode::InvalidGroup, "dihedral group needs m >= 1");
    using E = std::pair<std::size_t, std::size_t>;  // u^j v^i
    auto mul = [m](const E& a, const E& b) -> E {
        const std::size_t i = b.first ? (m - a.second) % m : a.second;
        return {(a.first + b.first) % 2, (i + b.second) % m};
    };
    return detail::close_under<E>({0, 0}, {{1, 0}, {0, 1 % m}}, {"u", "v"}, mul);
}

/// Quaternion group <u, v | u^4 = 1, u^2 = v^2, v u v^-1 = u^-1>.
inline Group quaternion8() {
    using E = std::pair<int, int>;  // u^i v^j
    auto mul = [](const E& a, const E& b) -> E {
        if (a.second == 0) return {(a.first + b.first) % 4, b.second};
        int i = ((a.first - b.first) % 4 + 4) % 4;
        if (b.second == 1) return {(i + 2) % 4, 0};
        return {i, 1};
    };
    return detail::close_under<E>({0, 0}, {{1, 0}, {0, 1}}, {"u", "v"}, mul);
}

/// Permutation on points 0..n-1 (image list).
using Permutation = std::vector<std::size_t>;

/**
 * Group generated by permutations of a common point set. Composition is left to
 * right: (g*h)(x) = h(g(x)).
 */
inline Group from_permutations(const std::vector<Permutation>& generators, std::vector<std::string> names,
                               std::size_t cap = kDefaultClosureCap) {
    if (generators.empty()) throw Error(ErrorCode::InvalidGroup, "no generators");
    const std::size_t degree = generators.front().size();
    for (const auto& g : generators) {
        if (g.size() != degree) throw Error(ErrorCode::InvalidGroup, "generators act on different point sets");
        std::vector<bool> hit(degree, false);
        for (std::size_t v : g) {
            if (v >= degree || hit[v]) throw Error(ErrorCode::InvalidGroup, "generator is not a permutation");
            hit[v] = true;
        }
    }
    if (names.size() != generators.size()) throw Error(ErrorCode::InvalidGroup, "generator/name count mismatch");
    Permutation id(degree);
    std::iota(id.begin(), id.end(), std::size_t{0});
    auto mul = [](const Permutation& g, const Permutation& h) {
        Permutation r(g.size());
        for (std::size_t x = 0; x < g.size(); ++x) r[x] = h[g[x]];
        return r;
    };
    return detail::close_under<Permutation>(id, generators, std::move(names), mul, cap);
}

/// Default generator names: u, v, w, then g4, g5, ...
inline std::vector<std::string> default_generator_names(std::size_t count) {
    static const char* base[] = {"u", "v", "w"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(i < 3 ? base[i] : "g" + std::to_string(i + 1));
    return out;
}

/**
 * Direct product of the factors. Elements are tuples ordered lexicographically with
 * the leftmost factor slowest. Generator names shared by several factors get the
 * 1-based factor index appended (x, x -> x1, x2).
 */
inline Group direct_product(const std::vector<Group>& factors) {
    if (factors.empty()) throw Error(ErrorCode::InvalidGroup, "empty direct product");
    std::map<std::string, int> name_count;
    for (const auto& f : factors)
        for (const auto& nm : f.generator_names()) ++name_count[nm];
    std::vector<std::string> names;
    std::vector<std::size_t> gen_offset;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        gen_offset.push_back(names.size());
        for (const auto& nm : factors[i].generator_names())
            names.push_back(name_count[nm] > 1 ? nm + std::to_string(i + 1) : nm);
    }
    std::size_t n = 1;
    for (const auto& f : factors) n *= f.order();
    auto decompose = [&](std::size_t idx) {
        std::vector<std::size_t> parts(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            parts[i] = idx % factors[i].order();
            idx /= factors[i].order();
        }
        return parts;
    };
    auto compose = [&](const std::vector<std::size_t>& parts) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i].order() + parts[i];
        return idx;
    };
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<Word> words(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto pa = decompose(a);
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (const auto& l : factors[i].word(pa[i])) words[a].push_back({l.generator + gen_offset[i], l.exponent});
        for (std::size_t b = 0; b < n; ++b) {
            const auto pb = decompose(b);
            std::vector<std::size_t> pc(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i) pc[i] = factors[i].multiply(pa[i], pb[i]);
            table[a][b] = compose(pc);
        }
    }
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t g : factors[i].generators()) {
            std::vector<std::size_t> parts(factors.size());
            for (std::size_t j = 0; j < factors.size(); ++j) parts[j] = factors[j].identity();
            parts[i] = g;
            gens.push_back(compose(parts));
        }
    }
    return Group(std::move(table), std::move(names), std::move(gens), std::move(words));
}

inline Group direct_product(const Group& g, const Group& h) { return direct_product(std::vector<Group>{g, h}); }

namespace detail {

/// Parser context evaluating group words: generator names, `1`, products and powers.
struct GroupWordContext {
    using value_type = std::size_t;
    const Group& group;

    std::size_t from_integer(long long n) const {
        if (n != 1) throw Error(ErrorCode::ParseError, "only the integer 1 denotes a group element");
        return group.identity();
    }
    std::optional<std::size_t> symbol(std::string_view s) const {
        if (auto g = group.generator_by_name(s)) return group.generators()[*g];
        return std::nullopt;
    }
    std::size_t add(std::size_t, std::size_t) const { throw Error(ErrorCode::ParseError, "'+' in a group word"); }
    std::size_t sub(std::size_t, std::size_t) const { throw Error(ErrorCode::ParseError, "'-' in a group word"); }
    std::size_t neg(std::size_t) const { throw Error(ErrorCode::ParseError, "'-' in a group word"); }
    std::size_t mul(std::size_t a, std::size_t b) const { return group.multiply(a, b); }
    std::size_t power(std::size_t a, long long e) const { return group.power(a, e); }
};

/// Word structure of a product-of-powers text like "u^2*v*u" (no evaluation).
inline Word parse_word_letters(const Group& g, std::string_view text) {
    Word w;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (text.substr(pos) == "1") return w;
    while (pos < text.size()) {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        auto gen = g.generator_by_name(text.substr(start, pos - start));
        if (!gen) return {};  // not a plain word; caller falls back to the canonical label
        long long e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            bool neg = pos < text.size() && text[pos] == '-';
            if (neg) ++pos;
            e = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) e = e * 10 + (text[pos++] - '0');
            if (neg) e = -e;
        }
        w.push_back({*gen, e});
        skip();
        if (pos < text.size() && text[pos] == '*') ++pos;
    }
    return w;
}

inline std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trimmed(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace detail

/// Evaluates a group word such as "u^2*v*u" or "1".
inline std::size_t parse_group_word(const Group& g, std::string_view text) {
    return parse_expression(text, detail::GroupWordContext{g});
}

/// Reorders G to the listing given as words; throws BadOverride unless it is a permutation.
inline Group with_ordering(const Group& g, const std::vector<std::string>& listing) {
    std::vector<std::size_t> order;
    std::vector<Word> words;
    for (const auto& text : listing) {
        const std::size_t idx = parse_group_word(g, text);
        order.push_back(idx);
        Word w = detail::parse_word_letters(g, text);
        if (w.empty() && detail::trimmed(text) != "1") w = g.word(idx);
        words.push_back(std::move(w));
    }
    return g.reordered(order, std::move(words));
}

/// Parses "(1,2,3)(4,5)"-style cycle notation over points 1..degree.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
    Permutation perm(degree);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) { return ParseError(ErrorCode::ParseError, pos, why); };
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw fail("expected '('");
        ++pos;
        std::vector<std::size_t> cycle;
        for (;;) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            std::size_t v = 0;
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
            if (pos == start) throw fail("expected a point");
            if (v < 1 || v > degree) throw fail("point out of range");
            cycle.push_back(v - 1);
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            throw fail("expected ',' or ')'");
        }
        // cycles compose left to right like group elements
        Permutation c(degree);
        std::iota(c.begin(), c.end(), std::size_t{0});
        for (std::size_t i = 0; i < cycle.size(); ++i) c[cycle[i]] = cycle[(i + 1) % cycle.size()];
        Permutation r(degree);
        for (std::size_t x = 0; x < degree; ++x) r[x] = c[perm[x]];
        perm = r;
    }
    return perm;
}

/**
 * Group spec text:
 *   cyclic:N | dihedral:M | quaternion8 | product:SPEC,SPEC,... |
 *   perm:[(1,2,3),(1,2)(3,4)]  or  perm:[a=(1,2,3),b=(1,2)]
 * optionally followed by whitespace or ';' and `order=[w1,w2,...]`.
 */
inline Group parse_group_spec(std::string_view text) {
    std::string s = detail::trimmed(text);
    std::optional<std::vector<std::string>> ordering;
    if (auto pos = s.find("order="); pos != std::string::npos) {
        std::string tail = detail::trimmed(std::string_view(s).substr(pos + 6));
        if (tail.size() < 2 || tail.front() != '[' || tail.back() != ']')
            throw ParseError(ErrorCode::ParseError, pos, "order clause must be order=[...]");
        std::vector<std::string> words;
        for (auto& w : detail::split_top_level(std::string_view(tail).substr(1, tail.size() - 2), ','))
            words.push_back(detail::trimmed(w));
        ordering = std::move(words);
        s = detail::trimmed(std::string_view(s).substr(0, pos));
        while (!s.empty() && (s.back() == ';' || s.back() == ' ')) s.pop_back();
    }
    auto to_size = [&](std::string_view v) {
        std::string t = detail::trimmed(v);
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(ErrorCode::ParseError, 0, "bad group spec '" + std::string(text) + "'");
        return static_cast<std::size_t>(std::stoull(t));
    };
    std::optional<Group> g;
    if (s.rfind("cyclic:", 0) == 0) {
        g = cyclic(to_size(s.substr(7)));
    } else if (s.rfind("dihedral:", 0) == 0) {
        g = dihedral(to_size(s.substr(9)));
    } else if (s == "quaternion8" || s == "quaternion") {
        g = quaternion8();
    } else if (s.rfind("product:", 0) == 0) {
        std::vector<Group> factors;
        for (const auto& part : detail::split_top_level(std::string_view(s).substr(8), ','))
            factors.push_back(parse_group_spec(part));
        g = direct_product(factors);
    } else if (s.rfind("perm:", 0) == 0) {
        std::string body = detail::trimmed(std::string_view(s).substr(5));
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw ParseError(ErrorCode::ParseError, 5, "perm spec must be perm:[...]");
        auto parts = detail::split_top_level(std::string_view(body).substr(1, body.size() - 2), ',');
        std::vector<std::string> names, cycles;
        for (auto& part : parts) {
            std::string p = detail::trimmed(part);
            if (auto eq = p.find('='); eq != std::string::npos) {
                names.push_back(detail::trimmed(std::string_view(p).substr(0, eq)));
                cycles.push_back(detail::trimmed(std::string_view(p).substr(eq + 1)));
            } else {
                names.emplace_back();
                cycles.push_back(p);
            }
        }
        std::size_t degree = 1;
        for (const auto& c : cycles) {
            std::size_t v = 0;
            for (char ch : c) {
                if (std::isdigit(static_cast<unsigned char>(ch)))
                    v = v * 10 + static_cast<std::size_t>(ch - '0');
                else {
                    degree = std::max(degree, v);
                    v = 0;
                }
            }
            degree = std::max(degree, v);
        }
        const auto defaults = default_generator_names(cycles.size());
        std::vector<Permutation> perms;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            perms.push_back(parse_cycles(cycles[i], degree));
            if (names[i].empty()) names[i] = defaults[i];
        }
        g = from_permutations(perms, names);
    } else {
        throw ParseError(ErrorCode::ParseError, 0, "unknown group spec '" + std::string(text) + "'");
    }
    if (ordering) return with_ordering(*g, *ordering);
    return *g;
}

}  // namespace idealdim
