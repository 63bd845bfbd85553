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

#include "covgame/report.hpp"

#include "covgame/error.hpp"
#include "covgame/graph_cover.hpp"
#include "covgame/system.hpp"

namespace covgame::report {

namespace {

std::string_view query_name(QueryKind kind) {
    switch (kind) {
    case QueryKind::MaxCoverage: return "max_coverage";
    case QueryKind::Value: return "coverage_value";
    case QueryKind::Bounded: return "bounded_coverage";
    }
    return "max_coverage";
}

void attach_path(json& out, const LabeledGraph& g, const std::optional<Path>& witness, std::size_t steps) {
    if (!witness) {
        out["certificate"] = "none";
        return;
    }
    out["certificate"] = "path";
    out["witness"] = path_to_json(g, *witness);
    out["steps_used"] = steps;
}

json solve_graph(const LabeledGraph& g, const Query& q, json out) {
    switch (q.kind) {
    case QueryKind::MaxCoverage: {
        auto ans = max_coverage_graph(g, q.m);
        out["decision"] = ans.decision;
        attach_path(out, g, ans.witness, ans.steps_used);
        break;
    }
    case QueryKind::Bounded: {
        auto ans = bounded_coverage_graph(g, q.m, q.k);
        out["decision"] = ans.decision;
        attach_path(out, g, ans.witness, ans.steps_used);
        break;
    }
    case QueryKind::Value: {
        auto value = coverage_value_graph(g);
        out["decision"] = true;
        out["value"] = value.value;
        attach_path(out, g, value.witness, value.witness.size() - 1);
        break;
    }
    }
    return out;
}

json end_component_json(const LabeledGameGraph& g, const EndComponent& ec) {
    json vertices = json::array();
    for (VertexId v : ec.vertices) vertices.push_back(g.vertex_name(v));
    return {{"vertices", vertices}, {"props", props_to_json(g.graph(), ec.covered)}};
}

json solve_game(const LabeledGameGraph& g, const Query& q, json out) {
    GameOptions opts;
    opts.low_memory = q.low_memory;
    switch (q.kind) {
    case QueryKind::MaxCoverage: {
        auto ans = max_coverage_game(g, q.m, opts);
        out["decision"] = ans.decision;
        if (ans.decision) {
            out["certificate"] = "strategy";
            out["strategy"] = strategy_to_json(g, ans.strategy);
            break;
        }
        out["certificate"] = "none";
        if (!is_controllably_recurrent_game(g).recurrent) break;
        try {
            auto ec = min_cover_end_component(g, opts);
            if (ec.covered.size() < q.m) {
                out["certificate"] = "end_component";
                out["end_component"] = end_component_json(g, ec);
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoEndComponent) throw;
        }
        break;
    }
    case QueryKind::Bounded: {
        auto ans = bounded_coverage_game(g, q.m, q.k, opts);
        out["decision"] = ans.decision;
        out["budget"] = ans.budget;
        out["certificate"] = ans.decision ? "strategy" : "none";
        if (ans.decision) out["strategy"] = bounded_strategy_to_json(g, ans.strategy);
        break;
    }
    case QueryKind::Value: {
        auto value = coverage_value_game(g, opts);
        out["decision"] = true;
        out["value"] = value.value;
        out["certificate"] = "strategy";
        out["strategy"] = strategy_to_json(g, value.strategy);
        break;
    }
    }
    return out;
}

json strategy_entry(const LabeledGameGraph& g, VertexId v, PropSet covered, VertexId choice) {
    return {{"vertex", g.vertex_name(v)},
            {"covered", props_to_json(g.graph(), covered)},
            {"choose", g.vertex_name(choice)}};
}

const json& require_field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key))
        throw Error(ErrorKind::Parse, std::string("result is missing '") + key + "'");
    return obj.at(key);
}

std::size_t count_field(const json& obj, const char* key) {
    const json& v = require_field(obj, key);
    if (!v.is_number_unsigned()) throw Error(ErrorKind::Parse, std::string("'") + key + "' must be a count");
    return v.get<std::size_t>();
}

} // namespace

LabeledGameGraph as_game(const Document& doc) {
    switch (doc.kind()) {
    case ModelKind::Graph: return LabeledGameGraph::all_player_one(std::get<LabeledGraph>(doc.model));
    case ModelKind::Game: return std::get<LabeledGameGraph>(doc.model);
    case ModelKind::System: return compile_system(std::get<SystemAutomaton>(doc.model));
    }
    return {};
}

json solve(const Document& doc, const Query& query) {
    json out{{"kind", to_string(doc.kind())}, {"query", query_name(query.kind)}};
    if (query.kind != QueryKind::Value) out["m"] = query.m;
    if (query.kind == QueryKind::Bounded) out["k"] = query.k;
    if (doc.kind() == ModelKind::Graph) return solve_graph(std::get<LabeledGraph>(doc.model), query, std::move(out));
    return solve_game(as_game(doc), query, std::move(out));
}

CertifyResult certify(const Document& doc, const json& result) {
    const auto certificate = require_field(result, "certificate").get<std::string>();
    const bool decision = require_field(result, "decision").get<bool>();
    const std::size_t m = result.contains("m") ? count_field(result, "m") : count_field(result, "value");
    const bool bounded = require_field(result, "query") == "bounded_coverage";

    if (certificate == "none") return CertifyResult::fail("the result carries no certificate");
    if (certificate == "end_component") {
        if (decision) return CertifyResult::fail("an end component certifies a negative answer only");
        auto g = as_game(doc);
        const json& ec = require_field(result, "end_component");
        std::vector<VertexId> vertices;
        for (const auto& name : require_field(ec, "vertices")) vertices.push_back(vertex_from_json(g.graph(), name));
        std::sort(vertices.begin(), vertices.end());
        return certify_end_component(g, vertices, m);
    }
    if (!decision) return CertifyResult::fail("a " + certificate + " certifies a positive answer only");
    if (certificate == "path") {
        if (doc.kind() != ModelKind::Graph) return CertifyResult::fail("path certificates apply to graphs");
        const auto& g = std::get<LabeledGraph>(doc.model);
        auto path = path_from_json(g, require_field(result, "witness"));
        const std::size_t limit = bounded ? count_field(result, "k") : m * g.num_vertices();
        return certify_path(g, path, m, limit);
    }
    if (certificate == "strategy") {
        auto g = as_game(doc);
        if (!bounded) return certify_strategy(g, strategy_from_json(g, require_field(result, "strategy")), m);
        const std::size_t budget = count_field(result, "budget");
        if (budget > count_field(result, "k")) return CertifyResult::fail("budget exceeds k");
        return certify_bounded_strategy(g, bounded_strategy_from_json(g, require_field(result, "strategy")), m,
                                        budget);
    }
    throw Error(ErrorKind::Parse, "unknown certificate kind '" + certificate + "'");
}

json strategy_to_json(const LabeledGameGraph& g, const TesterStrategy& strategy) {
    json out = json::array();
    for (const auto& [state, choice] : strategy) out.push_back(strategy_entry(g, state.vertex, state.covered, choice));
    return out;
}

TesterStrategy strategy_from_json(const LabeledGameGraph& g, const json& entries) {
    TesterStrategy out;
    if (!entries.is_array()) throw Error(ErrorKind::Parse, "strategy must be an array");
    for (const auto& e : entries) {
        ProductState s{vertex_from_json(g.graph(), require_field(e, "vertex")),
                       props_from_json(g.graph(), require_field(e, "covered"))};
        out[s] = vertex_from_json(g.graph(), require_field(e, "choose"));
    }
    return out;
}

json bounded_strategy_to_json(const LabeledGameGraph& g, const BoundedStrategy& strategy) {
    json out = json::array();
    for (const auto& [state, choice] : strategy) {
        auto entry = strategy_entry(g, state.vertex, state.covered, choice);
        entry["remaining"] = state.remaining;
        out.push_back(std::move(entry));
    }
    return out;
}

BoundedStrategy bounded_strategy_from_json(const LabeledGameGraph& g, const json& entries) {
    BoundedStrategy out;
    if (!entries.is_array()) throw Error(ErrorKind::Parse, "strategy must be an array");
    for (const auto& e : entries) {
        BudgetedState s{vertex_from_json(g.graph(), require_field(e, "vertex")),
                        props_from_json(g.graph(), require_field(e, "covered")), count_field(e, "remaining")};
        out[s] = vertex_from_json(g.graph(), require_field(e, "choose"));
    }
    return out;
}

} // namespace covgame::report
