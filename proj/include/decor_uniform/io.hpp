/*
decor-uniform

Copyright 2026 The decor-uniform Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "decor_uniform/errors.hpp"
#include "decor_uniform/mesh.hpp"
#include "decor_uniform/metric.hpp"
#include "decor_uniform/solver.hpp"

namespace decor_uniform::io
{

using nlohmann::json;

struct ProblemTarget {
    double alpha{2.0};
    /** Empty together with constant = true */
    std::vector<double> values;
    bool constant{false};
};

struct SolverOverrides {
    std::optional<double> tol;
    std::optional<int> max_iters;
    std::optional<Normalization> normalization;
    std::optional<ConformalFactor> seed_u;
    std::optional<bool> force;
};

struct Problem {
    Mesh mesh;
    DecoratedMetric metric;
    std::optional<ProblemTarget> target;
    SolverOverrides solver;
};

inline std::string edge_key(VertexId a, VertexId b)
{
    return std::to_string(std::min(a, b)) + "-" + std::to_string(std::max(a, b));
}

namespace detail
{

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, path + ": cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json parse_text(const std::string& text, const std::string& where)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset to line:column
        const std::size_t pos = std::min<std::size_t>(e.byte, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::ParseError, where + ":" + std::to_string(line) + ":" +
                                               std::to_string(col) + ": " + e.what());
    }
}

[[noreturn]] inline void schema_error(const std::string& field, const std::string& msg)
{
    throw Error(ErrorKind::SchemaError, "field '" + field + "': " + msg);
}

inline void require_object(const json& j, const std::string& field,
                           std::initializer_list<const char*> allowed,
                           std::initializer_list<const char*> required = {})
{
    if (!j.is_object()) {
        schema_error(field, "expected an object");
    }
    for (const auto& [k, v] : j.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }) ==
            allowed.end()) {
            schema_error(field.empty() ? k : field + "." + k, "unknown field");
        }
    }
    for (const char* r : required) {
        if (!j.contains(r)) {
            schema_error(field.empty() ? r : field + "." + r, "missing");
        }
    }
}

inline double get_number(const json& j, const std::string& field)
{
    if (!j.is_number()) {
        schema_error(field, "expected a number");
    }
    return j.get<double>();
}

inline int get_int(const json& j, const std::string& field)
{
    if (!j.is_number_integer()) {
        schema_error(field, "expected an integer");
    }
    return j.get<int>();
}

inline std::vector<double> get_numbers(const json& j, const std::string& field)
{
    if (!j.is_array()) {
        schema_error(field, "expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(get_number(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

inline std::vector<Face> get_faces(const json& j, const std::string& field)
{
    if (!j.is_array()) {
        schema_error(field, "expected an array of vertex triples");
    }
    std::vector<Face> faces;
    for (std::size_t f = 0; f < j.size(); ++f) {
        const std::string name = field + "[" + std::to_string(f) + "]";
        if (!j[f].is_array() || j[f].size() != 3) {
            schema_error(name, "expected three vertex indices");
        }
        faces.push_back({get_int(j[f][0], name), get_int(j[f][1], name), get_int(j[f][2], name)});
    }
    return faces;
}

inline std::vector<double> get_lengths(const json& j, const Mesh& mesh, const std::string& field)
{
    if (!j.is_object()) {
        schema_error(field, "expected an object keyed by \"i-j\"");
    }
    std::vector<double> lengths(mesh.edge_count());
    std::vector<bool> seen(mesh.edge_count(), false);
    for (const auto& [key, value] : j.items()) {
        const std::string name = field + "." + key;
        int a = -1, b = -1;
        char dash = 0;
        std::istringstream ks(key);
        if (!(ks >> a >> dash >> b) || dash != '-' || !ks.eof() || a < 0 || b < 0 ||
            edge_key(a, b) != key || a >= b) {
            schema_error(name, "edge key must read \"i-j\" with i < j");
        }
        const auto found = mesh.find_edge(a, b);
        if (!found) {
            schema_error(name, "no such edge in the face list");
        }
        const EdgeId e = *found;
        lengths[e] = get_number(value, name);
        seen[e] = true;
    }
    for (EdgeId e = 0; e < mesh.edge_count(); ++e) {
        if (!seen[e]) {
            const auto& v = mesh.edge(e).v;
            schema_error(field + "." + edge_key(v[0], v[1]), "missing");
        }
    }
    return lengths;
}

inline Normalization parse_normalization(const std::string& s, const std::string& field)
{
    if (s == "sumzero") {
        return Normalization::SumZero;
    }
    if (s == "none") {
        return Normalization::None;
    }
    schema_error(field, "expected \"sumzero\" or \"none\"");
}

}  // namespace detail

/** @brief Parse a problem; topology is checked, metric validity is not */
inline Problem parse_problem(const std::string& text, const std::string& where = "<input>")
{
    using namespace detail;
    const json j = parse_text(text, where);
    require_object(j, "", {"mesh", "metric", "target", "solver"}, {"mesh", "metric"});

    const json& jm = j["mesh"];
    require_object(jm, "mesh", {"vertex_count", "faces"}, {"vertex_count", "faces"});
    const int n = get_int(jm["vertex_count"], "mesh.vertex_count");
    const auto faces = get_faces(jm["faces"], "mesh.faces");

    Problem p{Mesh::build(faces, n), {}, std::nullopt, {}};

    const json& jmet = j["metric"];
    require_object(jmet, "metric", {"lengths", "radii"}, {"lengths", "radii"});
    p.metric.lengths = get_lengths(jmet["lengths"], p.mesh, "metric.lengths");
    p.metric.radii = get_numbers(jmet["radii"], "metric.radii");
    if (static_cast<int>(p.metric.radii.size()) != n) {
        schema_error("metric.radii", "expected " + std::to_string(n) + " entries");
    }

    if (j.contains("target")) {
        const json& jt = j["target"];
        require_object(jt, "target", {"alpha", "values", "constant"}, {"alpha"});
        ProblemTarget t;
        t.alpha = get_number(jt["alpha"], "target.alpha");
        if (jt.contains("constant")) {
            if (!jt["constant"].is_boolean() || !jt["constant"].get<bool>()) {
                schema_error("target.constant", "expected true");
            }
            t.constant = true;
        }
        if (jt.contains("values")) {
            if (t.constant) {
                schema_error("target", "give either values or constant, not both");
            }
            t.values = get_numbers(jt["values"], "target.values");
            if (static_cast<int>(t.values.size()) != n) {
                schema_error("target.values", "expected " + std::to_string(n) + " entries");
            }
        } else if (!t.constant) {
            schema_error("target", "needs values or \"constant\": true");
        }
        p.target = std::move(t);
    }

    if (j.contains("solver")) {
        const json& js = j["solver"];
        require_object(js, "solver", {"tol", "max_iters", "normalize", "seed_u", "force"});
        if (js.contains("tol")) {
            p.solver.tol = get_number(js["tol"], "solver.tol");
            if (!(*p.solver.tol > 0)) {
                schema_error("solver.tol", "must be positive");
            }
        }
        if (js.contains("max_iters")) {
            p.solver.max_iters = get_int(js["max_iters"], "solver.max_iters");
        }
        if (js.contains("normalize")) {
            if (!js["normalize"].is_string()) {
                schema_error("solver.normalize", "expected a string");
            }
            p.solver.normalization =
                parse_normalization(js["normalize"].get<std::string>(), "solver.normalize");
        }
        if (js.contains("seed_u")) {
            p.solver.seed_u = get_numbers(js["seed_u"], "solver.seed_u");
            if (static_cast<int>(p.solver.seed_u->size()) != n) {
                schema_error("solver.seed_u", "expected " + std::to_string(n) + " entries");
            }
        }
        if (js.contains("force")) {
            if (!js["force"].is_boolean()) {
                schema_error("solver.force", "expected a boolean");
            }
            p.solver.force = js["force"].get<bool>();
        }
    }
    return p;
}

inline std::string describe(const ValidationReport& rep)
{
    std::string s;
    for (const auto& v : rep.violations) {
        s += "  " + v.detail + "\n";
    }
    return s;
}

/** @brief Read and validate; an invalid metric fails with the full violation list */
inline Problem load_problem(const std::string& path)
{
    auto p = parse_problem(detail::read_file(path), path);
    const auto rep = validate(p.metric, p.mesh);
    if (!rep.ok()) {
        throw Error(ErrorKind::InvalidInput, path + ": invalid metric\n" + describe(rep));
    }
    return p;
}

inline json problem_to_json(const Mesh& mesh, const DecoratedMetric& m,
                            const std::optional<ProblemTarget>& target = std::nullopt)
{
    json j;
    j["mesh"]["vertex_count"] = mesh.vertex_count();
    j["mesh"]["faces"] = mesh.faces();
    json lengths = json::object();
    for (EdgeId e = 0; e < mesh.edge_count(); ++e) {
        lengths[edge_key(mesh.edge(e).v[0], mesh.edge(e).v[1])] = m.lengths[e];
    }
    j["metric"]["lengths"] = lengths;
    j["metric"]["radii"] = m.radii;
    if (target) {
        j["target"]["alpha"] = target->alpha;
        if (target->constant) {
            j["target"]["constant"] = true;
        } else {
            j["target"]["values"] = target->values;
        }
    }
    return j;
}

/** @brief Target file for --target: {"values": [...]} */
inline std::vector<double> load_target_values(const std::string& path, int vertex_count)
{
    using namespace detail;
    const json j = parse_text(read_file(path), path);
    require_object(j, "", {"values"}, {"values"});
    auto v = get_numbers(j["values"], "values");
    if (static_cast<int>(v.size()) != vertex_count) {
        schema_error("values", "expected " + std::to_string(vertex_count) + " entries");
    }
    return v;
}

inline json verification_to_json(const VerificationRecord& v)
{
    return {{"passed", v.passed()},
            {"max_residual", v.max_residual},
            {"gauss_bonnet_error", v.gauss_bonnet_error},
            {"constraint_error", v.constraint_error},
            {"min_inversive", v.min_inversive},
            {"min_margin", v.min_margin},
            {"radii_mismatch", v.radii_mismatch}};
}

inline json result_to_json(const SolveReport& rep, const VerificationRecord& ver)
{
    const auto& s = rep.state;
    const auto field = curvature_field(s, rep.alpha);
    json j;
    j["alpha"] = rep.alpha;
    j["target"] = rep.target;
    j["vertex_count"] = s.vertex_count();
    j["initial_radii"] = s.base_radii;
    j["u"] = rep.u;
    j["faces"] = s.mesh.faces();
    json lengths = json::object();
    for (EdgeId e = 0; e < s.mesh.edge_count(); ++e) {
        lengths[edge_key(s.mesh.edge(e).v[0], s.mesh.edge(e).v[1])] = s.metric.lengths[e];
    }
    j["lengths"] = lengths;
    j["radii"] = s.metric.radii;
    j["K"] = field.K;
    j["R_alpha"] = field.R_alpha;
    j["calR_alpha"] = field.calR_alpha;
    j["residual"] = rep.residual;
    j["case_label"] = std::string(to_string(rep.case_label));
    j["uniqueness"] = std::string(to_string(rep.uniqueness));
    j["flip_count"] = rep.flip_count;
    j["iterations"] = rep.iterations;
    j["constraint_residual"] = rep.constraint_residual;
    j["lagrange_mu_check"] = std::isfinite(rep.lagrange_mu) ? json(rep.lagrange_mu) : json(nullptr);
    j["constraint_sets"] = rep.constraint_sets;
    j["constant"] = std::isfinite(rep.constant) ? json(rep.constant) : json(nullptr);
    j["verification"] = verification_to_json(ver);
    return j;
}

/** @brief Load the fields of a result file that verification depends on */
inline SolutionRecord parse_result(const std::string& text, const std::string& where = "<result>")
{
    using namespace detail;
    const json j = parse_text(text, where);
    require_object(j, "",
                   {"alpha", "target", "vertex_count", "initial_radii", "u", "faces", "lengths",
                    "radii", "K", "R_alpha", "calR_alpha", "residual", "case_label", "uniqueness",
                    "flip_count", "iterations", "constraint_residual", "lagrange_mu_check",
                    "constraint_sets", "constant", "verification"},
                   {"alpha", "target", "vertex_count", "initial_radii", "u", "faces", "lengths",
                    "radii"});
    const int n = get_int(j["vertex_count"], "vertex_count");
    const auto faces = get_faces(j["faces"], "faces");
    SolutionRecord r{Mesh::build(faces, n), {}, {}, {}, {}, 0.0, {}};
    r.lengths = get_lengths(j["lengths"], r.mesh, "lengths");
    r.radii = get_numbers(j["radii"], "radii");
    r.u = get_numbers(j["u"], "u");
    r.base_radii = get_numbers(j["initial_radii"], "initial_radii");
    r.alpha = get_number(j["alpha"], "alpha");
    r.target = get_numbers(j["target"], "target");
    for (const auto* v : {&r.radii, &r.u, &r.base_radii, &r.target}) {
        if (static_cast<int>(v->size()) != n) {
            schema_error("vertex arrays", "expected " + std::to_string(n) + " entries each");
        }
    }
    for (std::size_t i = 0; i < r.radii.size(); ++i) {
        if (!(r.radii[i] > 0) || !(r.base_radii[i] > 0)) {
            schema_error("radii", "must be positive");
        }
    }
    return r;
}

inline SolutionRecord load_result(const std::string& path)
{
    return parse_result(detail::read_file(path), path);
}

inline void write_json(const std::string& path, const json& j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::InvalidInput, path + ": cannot write file");
    }
    out << j.dump(2) << "\n";
}

}  // namespace decor_uniform::io
