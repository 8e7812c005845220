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
 * @file job.hpp
 * @brief One CLI job: parse field / group / element specs, run a command, render a
 * text or JSON report with an exit code.
 *
 * Commands: analyze, idempotent, orbits, indicator, mindist, classify. Exit codes: 0 on
 * success, 1 on parse errors, 2 on domain errors. JSON reports carry `"schema": 1`.
 * Requires nlohmann/json (vendored as json.hpp).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "abelian_codes.hpp"
#include "code_analysis.hpp"
#include "error.hpp"
#include "field.hpp"
#include "group.hpp"
#include "group_algebra.hpp"
#include "ideal_dims.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace idealdim {

inline constexpr int kSchemaVersion = 1;

struct JobSpec {
    std::string command;
    std::string field = "gf:2";
    std::string group;
    std::string order;                  // optional listing "1,u,u^2*v,..." (brackets optional)
    std::vector<std::string> elements;  // expressions or coefficient vectors
    bool json = false;
    std::optional<std::uint64_t> cap;   // distance search cap
    std::string orderings;              // indicator eigenvalues: "1,2;1,2,a^2,a^6"
    std::string ext_modulus;            // splitting-field modulus, e.g. "x^2+2*x+2"
    std::optional<std::uint64_t> q;     // orbits: exponent of the power map (default |F|)
    bool conjecture_notes = true;
};

struct JobOutput {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline const std::vector<std::string>& job_commands() {
    static const std::vector<std::string> names{"analyze", "idempotent", "orbits", "indicator", "mindist", "classify"};
    return names;
}

/// Reads a spec object: command, field, group, order, element | elements, cap,
/// orderings, ext_modulus, q, json, conjecture_notes. Unknown keys are rejected.
inline JobSpec job_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError(ErrorCode::ParseError, 0, "spec file must hold a JSON object");
    JobSpec s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const auto& v = it.value();
        try {
            if (k == "command") s.command = v.get<std::string>();
            else if (k == "field") s.field = v.get<std::string>();
            else if (k == "group") s.group = v.get<std::string>();
            else if (k == "order") {
                if (v.is_array()) {
                    std::string joined;
                    for (const auto& w : v) joined += (joined.empty() ? "" : ",") + w.get<std::string>();
                    s.order = joined;
                } else {
                    s.order = v.get<std::string>();
                }
            } else if (k == "element") s.elements = {v.get<std::string>()};
            else if (k == "elements") s.elements = v.get<std::vector<std::string>>();
            else if (k == "cap") s.cap = v.get<std::uint64_t>();
            else if (k == "orderings") s.orderings = v.get<std::string>();
            else if (k == "ext_modulus") s.ext_modulus = v.get<std::string>();
            else if (k == "q") s.q = v.get<std::uint64_t>();
            else if (k == "json") s.json = v.get<bool>();
            else if (k == "conjecture_notes") s.conjecture_notes = v.get<bool>();
            else if (k == "description") continue;
            else throw ParseError(ErrorCode::ParseError, 0, "unknown spec key '" + k + "'");
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(ErrorCode::ParseError, 0, "spec key '" + k + "': " + e.what());
        }
    }
    return s;
}

namespace detail {

using json = nlohmann::json;

inline Group build_group(const JobSpec& spec) {
    if (spec.group.empty()) throw ParseError(ErrorCode::ParseError, 0, "missing group spec");
    Group g = parse_group_spec(spec.group);
    std::string order = trimmed(spec.order);
    if (order.empty()) return g;
    if (order.front() == '[' && order.back() == ']') order = order.substr(1, order.size() - 2);
    std::vector<std::string> words;
    for (const auto& w : split_top_level(order, ',')) words.push_back(trimmed(w));
    return with_ordering(g, words);
}

/// Cyclic orders of a spec "cyclic:N" or "product:cyclic:N1,cyclic:N2,...".
inline std::vector<std::size_t> cyclic_factors(const std::string& text) {
    const std::string s = trimmed(text);
    auto fail = [&] {
        return Error(ErrorCode::NotApplicable, "indicator needs cyclic:N or product:cyclic:N1,cyclic:N2,..., got '" + s + "'");
    };
    auto one = [&](const std::string& part) -> std::size_t {
        const std::string t = trimmed(part);
        if (t.rfind("cyclic:", 0) != 0) throw fail();
        const std::string num = trimmed(std::string_view(t).substr(7));
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(ErrorCode::ParseError, 0, "bad cyclic order in '" + t + "'");
        return static_cast<std::size_t>(std::stoull(num));
    };
    if (s.find("order=") != std::string::npos)
        throw Error(ErrorCode::BadOverride, "the indicator fixes the Kronecker element order; drop the order clause");
    if (s.rfind("product:", 0) == 0) {
        std::vector<std::size_t> out;
        for (const auto& part : split_top_level(std::string_view(s).substr(8), ',')) out.push_back(one(part));
        return out;
    }
    return {one(s)};
}

inline json poly_json(const Polynomial& f, std::string_view sym) {
    json coeffs = json::array();
    for (Code c : f.codes()) coeffs.push_back(f.field().format(c, sym));
    return json{{"expanded", f.to_string(sym)}, {"factored", factored_string(f, sym)}, {"degree", f.degree()}, {"coefficients", coeffs}};
}

inline json element_json(const AlgebraElement& b) {
    return json{{"expression", b.to_string()}, {"vector", b.to_vector_string()}};
}

inline json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().format(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json codes_json(const GaloisField& F, const std::vector<Code>& v) {
    json a = json::array();
    for (Code c : v) a.push_back(F.format(c));
    return a;
}

/// Digits run together ("10000111") when every entry is a single prime-field digit.
inline std::string codes_text(const GaloisField& F, const std::vector<Code>& v, bool allow_compact = true) {
    bool compact = allow_compact;
    for (Code c : v) compact = compact && c < 10 && F.in_prime_field(c);
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!compact && i) s += ",";
        s += F.format(v[i]);
    }
    return s;
}

inline std::string matrix_text(const Matrix& m, const std::string& indent) {
    std::vector<std::string> cells(m.rows() * m.cols());
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i * m.cols() + j] = m.field().format(m(i, j));
            width = std::max(width, cells[i * m.cols() + j].size());
        }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += indent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string& c = cells[i * m.cols() + j];
            out += std::string(width - c.size() + (j ? 1 : 0), ' ') + c;
        }
        out += "\n";
    }
    return out;
}

inline json bound_json(const DimensionBound& b) {
    return json{{"lower", b.lower}, {"upper", b.upper}, {"divisor", b.divisor}, {"exact", b.exact}, {"note", b.note}};
}

inline json congruence_json(const CongruenceInfo& c, std::string_view sym) {
    json j{{"a", c.a.to_string(sym)},
           {"s", c.s},
           {"class", c.class_value},
           {"p", c.p},
           {"r", c.r},
           {"candidates", c.candidates},
           {"candidates_all_bounds", c.candidates_all_bounds},
           {"ecd_algebra", c.ecd_algebra},
           {"determined", c.determined ? json(*c.determined) : json(nullptr)},
           {"multiple_of_p", c.multiple_of_p},
           {"dim_one_possible", c.dim_one_possible}};
    j["unit_trace"] = c.lambda_one_at_unit ? json(c.complement_set) : json(nullptr);
    j["zero_trace"] = c.lambda_zero ? json(c.multiple_set) : json(nullptr);
    return j;
}

inline json dimension_json(const DimensionReport& r, std::string_view sym) {
    json bounds = json::object();
    for (const auto& b : r.bounds) bounds[b.tag] = bound_json(b);
    json j{{"dim", r.dim_exact},
           {"rank_check", r.rank_check},
           {"m_b", poly_json(r.m_b, sym)},
           {"p_b", poly_json(r.p_b, sym)},
           {"n", r.n},
           {"u", r.u},
           {"zeta_n", r.zeta_n},
           {"t", r.t},
           {"kernel_dim", r.kernel_dim},
           {"unit", r.unit},
           {"simple_zero_root", r.simple_zero_root},
           {"projective", r.projective},
           {"thm_3_2_1", json{{"zeta_n", r.zeta_n}, {"order", r.order}, {"u", r.u}, {"dim", r.zeta_n + r.order - r.u}}},
           {"bounds", bounds}};
    j["cor_3_4"] = r.congruence ? congruence_json(*r.congruence, sym) : json(nullptr);
    j["idempotent_generator"] = r.idempotent_generator ? element_json(*r.idempotent_generator) : json(nullptr);
    return j;
}

inline std::string dimension_text(const DimensionReport& r, std::string_view sym) {
    std::ostringstream os;
    os << "  m_b = " << factored_string(r.m_b, sym) << "\n";
    os << "  p_b = " << factored_string(r.p_b, sym) << "\n";
    os << "  n = " << r.n << ", u = " << r.u << ", zeta_n = " << r.zeta_n << ", t = " << r.t << "\n";
    os << "  dim(Rb) = " << r.dim_exact << " (rank " << r.rank_check << ")" << (r.unit ? ", b is a unit" : "") << "\n";
    for (const auto& b : r.bounds) {
        os << "  bound " << b.tag << ": ";
        if (b.exact) os << "dim = " << b.lower;
        else os << b.lower << " <= dim <= " << b.upper;
        if (b.divisor > 1) os << ", " << b.divisor << " | dim";
        os << "\n";
    }
    if (r.congruence) {
        const auto& c = *r.congruence;
        os << "  congruence: lambda_1 = " << c.a.to_string(sym) << ", s = " << c.s << ", dim = " << c.class_value << " mod " << c.p
           << ", r = " << c.r << ", candidates {";
        for (std::size_t i = 0; i < c.candidates.size(); ++i) os << (i ? ", " : "") << c.candidates[i];
        os << "}\n";
    }
    os << "  projective: " << (r.projective ? "yes" : "no") << "\n";
    if (r.idempotent_generator) os << "  idempotent generator: " << r.idempotent_generator->to_string() << "\n";
    return os.str();
}

inline json relation_json(const Relation& r) {
    return json{{"tag", r.tag},
                {"conditional", r.conditional ? json("mds_conjecture") : json(nullptr)},
                {"statement", r.statement},
                {"status", r.status},
                {"detail", r.detail}};
}

inline json distance_json(const DistanceResult& d) {
    return json{{"d", d.d ? json(*d.d) : json(nullptr)}, {"upper_bound", d.upper_bound}, {"capped", d.capped},
                {"codewords", d.codewords}};
}

inline json code_json(const CodeReport& r, bool notes) {
    json bounds = json::array();
    for (const auto& b : r.distance_bounds)
        bounds.push_back(json{{"tag", b.tag}, {"kind", b.kind}, {"value", b.value}, {"note", b.note}});
    json rel = json::array();
    for (const auto& x : r.relations)
        if (notes || !x.conditional) rel.push_back(relation_json(x));
    return json{{"n", r.n},
                {"k", r.k},
                {"d", r.d ? json(*r.d) : json(nullptr)},
                {"d_upper", r.d_upper},
                {"capped", r.capped},
                {"codewords", r.codewords},
                {"mds", r.mds ? json(*r.mds) : json(nullptr)},
                {"projective", r.projective},
                {"ecd", r.ecd},
                {"ecd_algebra", r.ecd_algebra},
                {"nontrivial", r.nontrivial},
                {"singleton_defect", r.singleton_defect ? json(*r.singleton_defect) : json(nullptr)},
                {"q", r.q},
                {"p", r.p},
                {"q_bound_holds", r.q_bound_holds},
                {"zero_multiplicity", r.zero_multiplicity},
                {"distance_bounds", bounds},
                {"relations", rel}};
}

inline std::string code_text(const CodeReport& r, bool notes) {
    std::ostringstream os;
    os << "  [" << r.n << "," << r.k << "," << (r.d ? std::to_string(*r.d) : "<=" + std::to_string(r.d_upper)) << "]"
       << (r.capped ? " (distance search capped)" : "") << "\n";
    os << "  mds: " << (r.mds ? (*r.mds ? "yes" : "no") : "unknown") << "\n";
    os << "  ecd: " << (r.ecd ? "yes" : "no") << " (idempotent generator: " << (r.projective ? "yes" : "no")
       << ", k <= p = " << r.p << ": " << (r.k <= r.p ? "yes" : "no") << ")\n";
    os << "  ecd algebra: " << (r.ecd_algebra ? "yes" : "no") << "\n";
    if (r.singleton_defect) os << "  singleton defect: " << *r.singleton_defect << "\n";
    if (r.zero_multiplicity > 1) os << "  note: 0 has multiplicity " << r.zero_multiplicity << " in m_b\n";
    for (const auto& b : r.distance_bounds) os << "  " << b.tag << " " << b.kind << ": " << b.value << "\n";
    for (const auto& x : r.relations) {
        if (!notes && x.conditional) continue;
        os << "  " << x.tag << (x.conditional ? " [conditional: mds_conjecture]" : "") << ": " << x.status << " - "
           << x.statement << (x.detail.empty() ? "" : " (" + x.detail + ")") << "\n";
    }
    return os.str();
}

inline std::vector<std::vector<Code>> parse_orderings(const std::string& text, const GaloisField& E) {
    std::vector<std::vector<Code>> out;
    for (const auto& group : split_top_level(text, ';')) {
        std::vector<Code> v;
        for (const auto& lit : split_top_level(group, ',')) v.push_back(E.parse_code(trimmed(lit)));
        out.push_back(std::move(v));
    }
    return out;
}

struct Rendered {
    json j;
    std::string text;
};

inline Rendered run_command(const JobSpec& spec) {
    const GaloisField F = parse_field_spec(spec.field);
    json head{{"schema", kSchemaVersion}, {"command", spec.command}, {"field", F.spec_string()}};
    std::ostringstream text;
    text << "field " << F.spec_string() << "\n";
    const std::uint64_t cap = spec.cap ? *spec.cap : default_distance_cap();

    if (spec.command == "indicator") {
        const auto factors = cyclic_factors(spec.group);
        std::optional<std::vector<Code>> ext;
        if (!trimmed(spec.ext_modulus).empty()) ext = parse_raw_polynomial(F.characteristic(), spec.ext_modulus);
        std::optional<std::vector<std::vector<Code>>> orderings;
        if (!trimmed(spec.orderings).empty()) {
            const auto split = splitting_field(cyclic_product(factors), F, ext);
            orderings = parse_orderings(spec.orderings, split.extension);
        }
        const IndicatorData ind = indicator(factors, F, orderings, ext);
        const GaloisField& E = ind.split.extension;
        json ords = json::array();
        for (const auto& o : ind.orderings) ords.push_back(codes_json(E, o));
        json labels = json::array();
        for (std::size_t g = 0; g < ind.group->order(); ++g) labels.push_back(ind.group->label(g));
        head["group"] = json{{"spec", trimmed(spec.group)}, {"order", ind.group->order()}, {"elements", labels}};
        head["splitting_field"] = json{{"extension", E.spec_string()},
                                       {"degree", ind.split.d},
                                       {"exponent", ind.split.m},
                                       {"theta", E.format(ind.split.theta)},
                                       {"embedding", E.format(ind.split.embedding)}};
        head["orderings"] = ords;
        head["A"] = matrix_json(ind.a);
        head["D"] = matrix_json(ind.d);
        json orbit_sizes = json::array();
        for (const auto& b : base_primitive_idempotents(ind)) orbit_sizes.push_back(b.columns.size());
        head["minimal_ideal_dims"] = orbit_sizes;

        text << "group " << trimmed(spec.group) << " (order " << ind.group->order() << ")\n";
        text << "splitting field " << E.spec_string() << ", degree " << ind.split.d << ", theta = " << E.format(ind.split.theta)
             << "\n";
        text << "orderings";
        for (const auto& o : ind.orderings) text << " {" << codes_text(E, o, false) << "}";
        text << "\nA =\n" << matrix_text(ind.a, "  ") << "D =\n" << matrix_text(ind.d, "  ");

        const GroupAlgebra alg(F, ind.group);
        json results = json::array();
        for (const auto& t : spec.elements) {
            const AlgebraElement e = alg.parse(t);
            const auto r = dimension_via_indicator(ind, e);
            results.push_back(json{{"element", element_json(e)},
                                   {"dim", r.dim},
                                   {"transformed", codes_json(E, r.transformed)},
                                   {"transformed_text", codes_text(E, r.transformed)}});
            text << "element " << e.to_vector_string() << ": D(e) = " << codes_text(E, r.transformed) << ", dim " << r.dim
                 << "\n";
        }
        head["results"] = results;
        return {head, text.str()};
    }

    const Group G = build_group(spec);
    const GroupAlgebra alg(F, G);
    json labels = json::array();
    for (std::size_t g = 0; g < G.order(); ++g) labels.push_back(G.label(g));
    head["group"] = json{{"spec", trimmed(spec.group)}, {"order", G.order()}, {"elements", labels}};
    text << "group " << trimmed(spec.group) << " (order " << G.order() << ")\n";

    if (spec.command == "orbits") {
        const std::uint64_t q = spec.q ? *spec.q : F.order();
        const auto part = q_orbits(G, q);
        json orbits = json::array();
        text << "q = " << q << ", orbits:";
        for (const auto& o : part.orbits) {
            json names = json::array();
            text << " {";
            for (std::size_t i = 0; i < o.size(); ++i) {
                names.push_back(G.label(o[i]));
                text << (i ? ", " : "") << G.label(o[i]);
            }
            text << "}";
            orbits.push_back(names);
        }
        text << "\nsizes:";
        for (auto s : part.sizes()) text << " " << s;
        text << "\n";
        head["q"] = q;
        head["orbits"] = orbits;
        head["sizes"] = part.sizes();
        json results = json::array();
        for (const auto& t : spec.elements) {
            const AlgebraElement e = alg.parse(t);
            const auto b = orbit_bound(e);
            results.push_back(json{{"element", element_json(e)}, {"y", b.y}, {"min", b.min}, {"max", b.max}});
            text << "element " << e.to_string() << ": " << b.min << " <= dim <= " << b.max << "\n";
        }
        head["results"] = results;
        return {head, text.str()};
    }

    if (spec.elements.empty()) throw ParseError(ErrorCode::ParseError, 0, "command '" + spec.command + "' needs --elem");
    json results = json::array();
    for (const auto& t : spec.elements) {
        const AlgebraElement b = alg.parse(t);
        text << "element " << b.to_string() << "\n";
        json item{{"element", element_json(b)}};
        if (spec.command == "analyze") {
            const DimensionReport r = dimension_exact(b);
            item["report"] = dimension_json(r, b.field_symbol());
            text << dimension_text(r, b.field_symbol());
        } else if (spec.command == "idempotent") {
            const AlgebraElement e = idempotent_generator(b);
            item["idempotent"] = element_json(e);
            item["dim"] = ideal_dimension_rank(e);
            text << "  idempotent generator: " << e.to_string() << "\n  vector: " << e.to_vector_string() << "\n";
        } else if (spec.command == "mindist") {
            const auto basis = ideal_basis(b);
            const auto d = min_distance(basis, cap);
            item["k"] = basis.size();
            item["distance"] = distance_json(d);
            text << "  k = " << basis.size() << ", d " << (d.d ? "= " + std::to_string(*d.d) : "<= " + std::to_string(d.upper_bound))
                 << (d.capped ? " (capped)" : "") << "\n";
        } else if (spec.command == "classify") {
            const CodeReport r = classify(b, cap);
            item["code"] = code_json(r, spec.conjecture_notes);
            text << code_text(r, spec.conjecture_notes);
        } else {
            throw ParseError(ErrorCode::ParseError, 0, "unknown command '" + spec.command + "'");
        }
        results.push_back(item);
    }
    head["results"] = results;
    return {head, text.str()};
}

inline int exit_code_for(ErrorCode c) {
    return c == ErrorCode::ParseError || c == ErrorCode::UnknownGenerator ? 1 : 2;
}

}  // namespace detail

/// Runs one job. Never throws for input problems; they become exit codes 1 or 2.
inline JobOutput run(const JobSpec& spec) {
    JobOutput out;
    auto fail = [&](int code, std::string_view name, const std::string& message, std::optional<std::size_t> pos) {
        out.exit_code = code;
        if (spec.json) {
            nlohmann::json err{{"code", name}, {"message", message}};
            if (pos) err["position"] = *pos;
            out.out = nlohmann::json{{"schema", kSchemaVersion}, {"command", spec.command}, {"error", err}}.dump(2) + "\n";
        }
        out.err = "error: " + message + "\n";
    };
    bool known = false;
    for (const auto& c : job_commands()) known = known || c == spec.command;
    if (!known) {
        fail(1, "ParseError", "ParseError: unknown command '" + spec.command + "'", std::nullopt);
        return out;
    }
    try {
        auto r = detail::run_command(spec);
        out.out = spec.json ? r.j.dump(2) + "\n" : r.text;
    } catch (const ParseError& e) {
        fail(detail::exit_code_for(e.code()), error_code_name(e.code()), e.what(), e.position());
    } catch (const Error& e) {
        fail(detail::exit_code_for(e.code()), error_code_name(e.code()), e.what(), std::nullopt);
    } catch (const std::exception& e) {
        fail(2, "InternalError", std::string("InternalError: ") + e.what(), std::nullopt);
    }
    return out;
}

}  // namespace idealdim
