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

// idealdim: dimensions of principal ideals in finite group algebras and the
// resulting group codes.
//
//   idealdim analyze  --field gf:2 --group "perm:[(1,2,3),(1,2)(3,4)]" --elem "u + u^2*v*u"
//   idealdim indicator --field gf:3 --group product:cyclic:2,cyclic:4 --orderings "1,2;1,2,a^2,a^6"
//   idealdim --spec golden/example.json --json

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idealdim/job.hpp"

namespace {

idealdim::JobSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw idealdim::ParseError(idealdim::ErrorCode::ParseError, 0, "cannot open spec file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw idealdim::ParseError(idealdim::ErrorCode::ParseError, e.byte, std::string("spec file: ") + e.what());
    }
    return idealdim::job_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimensions of principal ideals in finite group algebras, and group code analysis"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    std::string spec_file, field, group, order, orderings, ext_modulus;
    std::vector<std::string> elems;
    std::uint64_t cap = 0, q = 0;
    bool json = false, no_notes = false;

    app.add_option("--spec", spec_file, "JSON job file; command-line flags override its entries");
    app.add_option("--field", field, "field: gf:P, gf:P^K or gf:Q, optionally :MODULUS (e.g. gf:3^2:x^2+2*x+2)");
    app.add_option("--group", group, "group: cyclic:N, dihedral:M, quaternion8, product:A,B, perm:[...]");
    app.add_option("--order", order, "element ordering override as a comma-separated list of words");
    app.add_option("--elem", elems, "element (expression or coefficient vector); repeatable");
    app.add_flag("--json", json, "emit a JSON report");
    app.add_option("--cap", cap, "codeword cap for the minimum distance search (env IDEALDIM_DISTANCE_CAP)");
    app.add_option("--orderings", orderings, "indicator eigenvalue lists per cyclic factor, e.g. \"1,2;1,2,a^2,a^6\"");
    app.add_option("--ext-modulus", ext_modulus, "modulus of the splitting field, e.g. x^2+2*x+2");
    app.add_option("--q", q, "exponent of the power map for orbits (default |F|)");
    app.add_flag("--no-conjecture-notes", no_notes, "omit statements that assume the MDS conjecture");

    for (const auto& name : idealdim::job_commands()) app.add_subcommand(name, "run the " + name + " command");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    idealdim::JobSpec spec;
    try {
        if (!spec_file.empty()) spec = load_spec(spec_file);
    } catch (const idealdim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (!app.get_subcommands().empty()) spec.command = app.get_subcommands().front()->get_name();
    if (!field.empty()) spec.field = field;
    if (!group.empty()) spec.group = group;
    if (!order.empty()) spec.order = order;
    if (!elems.empty()) spec.elements = elems;
    if (json) spec.json = true;
    if (cap) spec.cap = cap;
    if (!orderings.empty()) spec.orderings = orderings;
    if (!ext_modulus.empty()) spec.ext_modulus = ext_modulus;
    if (q) spec.q = q;
    if (no_notes) spec.conjecture_notes = false;
    if (spec.command.empty()) {
        std::cerr << "error: no command given\n" << app.help();
        return 1;
    }

    const auto result = idealdim::run(spec);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
