/*
 * Copyright 2026 The covgame Authors
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
 */

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covgame/error.hpp"
#include "covgame/interchange.hpp"
#include "covgame/oracle.hpp"
#include "covgame/random_models.hpp"
#include "covgame/reductions.hpp"
#include "covgame/report.hpp"
#include "covgame/system.hpp"
#include "covgame/validate.hpp"

namespace py = pybind11;
using namespace covgame;

// Models and results cross the boundary as JSON text; the Python package
// converts to and from dicts.
namespace {

Document load(const std::string& text, bool check = true) {
    Document doc = parse_document_text(text);
    if (check) std::visit([](const auto& model) { require_valid(model); }, doc.model);
    return doc;
}

std::string solve(const std::string& model, std::optional<std::size_t> m, bool value) {
    if (!m && !value) throw Error(ErrorKind::Parse, "pass m or value=True");
    report::Query q{value ? report::QueryKind::Value : report::QueryKind::MaxCoverage, m.value_or(0)};
    return report::solve(load(model), q).dump();
}

std::string bounded(const std::string& model, std::size_t m, std::size_t k, bool low_memory) {
    return report::solve(load(model), {report::QueryKind::Bounded, m, k, low_memory}).dump();
}

std::string recurrent(const std::string& model) {
    auto doc = load(model);
    json out;
    if (auto* g = std::get_if<LabeledGraph>(&doc.model)) {
        auto verdict = is_controllably_recurrent_graph(*g);
        out["recurrent"] = verdict.recurrent;
        if (verdict.counterexample) out["counterexample"] = g->vertex_name(*verdict.counterexample);
        if (verdict.recurrent) out["value"] = max_coverage_recurrent_graph(*g);
    } else {
        auto game = report::as_game(doc);
        auto verdict = is_controllably_recurrent_game(game);
        out["recurrent"] = verdict.recurrent;
        if (verdict.counterexample) out["counterexample"] = game.vertex_name(*verdict.counterexample);
    }
    return out.dump();
}

std::string gadget(const std::string& kind, const std::string& text, std::optional<std::string> start) {
    if (kind == "sat") {
        auto g = sat_to_graph(parse_dimacs(text));
        return render(Document{std::move(g.graph), std::move(g.metadata)}).dump();
    }
    if (kind == "qbf") {
        auto g = qbf_to_game(parse_qdimacs(text));
        return render(Document{std::move(g.game), std::move(g.metadata)}).dump();
    }
    if (kind == "vc") {
        json meta;
        auto game = vc_to_game(parse_edge_list(text), &meta);
        return render(Document{std::move(game), std::move(meta)}).dump();
    }
    if (kind == "hampath") {
        auto h = parse_edge_list(text);
        std::uint32_t from = 0;
        if (start) {
            auto it = std::find(h.vertices.begin(), h.vertices.end(), *start);
            if (it == h.vertices.end()) throw Error(ErrorKind::Parse, "unknown start vertex '" + *start + "'");
            from = static_cast<std::uint32_t>(it - h.vertices.begin());
        }
        auto g = hampath_to_bounded(h, from);
        return render(Document{std::move(g.graph), std::move(g.metadata)}).dump();
    }
    throw Error(ErrorKind::Parse, "unknown gadget '" + kind + "'");
}

bool brute_force(const std::string& model, std::size_t m, std::optional<std::size_t> k) {
    auto doc = load(model);
    const auto depth = k.value_or(oracle::kUnbounded);
    if (auto* g = std::get_if<LabeledGraph>(&doc.model)) return oracle::brute_force_graph(*g, m, depth);
    return oracle::brute_force_game(report::as_game(doc), m, depth);
}

std::string random_model(const std::string& kind, std::uint64_t seed, std::size_t vertices, std::size_t props,
                         std::size_t out_degree) {
    random::Rng rng(seed);
    random::ModelShape shape{vertices, vertices, props, props, out_degree};
    if (kind == "graph") return render(random::graph(rng, shape)).dump();
    if (kind == "game") return render(random::game(rng, shape)).dump();
    throw Error(ErrorKind::Parse, "unknown model kind '" + kind + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coverage problems on labeled graphs and game graphs.";
    py::register_exception<Error>(m, "CovgameError", PyExc_ValueError);

    m.def("solve", &solve, py::arg("model"), py::arg("m") = py::none(), py::arg("value") = false);
    m.def("bounded", &bounded, py::arg("model"), py::arg("m"), py::arg("k"), py::arg("low_memory") = false);
    m.def("recurrent", &recurrent, py::arg("model"));
    m.def("certify", [](const std::string& model, const std::string& result) {
        auto verdict = report::certify(load(model), json::parse(result));
        return json{{"certified", verdict.ok}, {"reason", verdict.reason}}.dump();
    }, py::arg("model"), py::arg("result"));
    m.def("compile_system", [](const std::string& model) {
        auto doc = load(model);
        auto* sys = std::get_if<SystemAutomaton>(&doc.model);
        if (!sys) throw Error(ErrorKind::Parse, "expected a system model");
        return render(compile_system(*sys)).dump();
    }, py::arg("model"));
    m.def("gadget", &gadget, py::arg("kind"), py::arg("text"), py::arg("start") = py::none());
    m.def("to_dot", [](const std::string& model) {
        auto doc = load(model, false);
        if (auto* g = std::get_if<LabeledGraph>(&doc.model)) return to_dot(*g);
        return to_dot(report::as_game(doc));
    }, py::arg("model"));
    m.def("validate", [](const std::string& model) {
        auto doc = load(model, false);
        auto report = std::visit([](const auto& x) { return validate(x); }, doc.model);
        std::vector<std::string> messages;
        for (const auto& v : report.violations) messages.push_back(v.message);
        return messages;
    }, py::arg("model"));
    m.def("brute_force", &brute_force, py::arg("model"), py::arg("m"), py::arg("k") = py::none());
    m.def("random_model", &random_model, py::arg("kind"), py::arg("seed"), py::arg("vertices") = 6,
          py::arg("props") = 3, py::arg("out_degree") = 3);
}
