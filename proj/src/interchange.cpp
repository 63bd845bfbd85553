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

#include "covgame/interchange.hpp"

#include <sstream>

#include "covgame/error.hpp"

namespace covgame {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::Graph: return "graph";
    case ModelKind::Game: return "game";
    case ModelKind::System: return "system";
    }
    return "graph";
}

std::optional<ModelKind> parse_model_kind(std::string_view text) {
    if (text == "graph") return ModelKind::Graph;
    if (text == "game") return ModelKind::Game;
    if (text == "system") return ModelKind::System;
    return std::nullopt;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end()) parse_fail(std::string("missing field '") + name + "'");
    return *it;
}

std::string as_name(const json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    parse_fail(std::string(what) + " must be a string or integer");
}

const json& as_array(const json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string("'") + what + "' must be an array");
    return j;
}

PropSet props_of(const SymbolTable& props, const json& names) {
    PropSet s;
    for (const auto& n : as_array(names, "props")) {
        auto name = as_name(n, "proposition");
        auto id = props.find(name);
        if (!id) parse_fail("unknown proposition '" + name + "'");
        s.insert(*id);
    }
    return s;
}

std::uint32_t lookup(const SymbolTable& table, const json& j, const char* what) {
    auto name = as_name(j, what);
    auto id = table.find(name);
    if (!id) parse_fail(std::string("unknown ") + what + " '" + name + "'");
    return *id;
}

json prop_names(const SymbolTable& props, PropSet s) {
    json out = json::array();
    s.for_each([&](PropId p) { out.push_back(props.name(p)); });
    return out;
}

LabeledGameGraph parse_game_like(const json& doc, bool want_owners) {
    LabeledGameGraph game;
    auto& g = game.graph();
    if (auto it = doc.find("ap"); it != doc.end()) {
        for (const auto& p : as_array(*it, "ap")) {
            auto name = as_name(p, "proposition");
            if (g.props().contains(name)) parse_fail("duplicate proposition '" + name + "'");
            g.add_prop(name);
        }
    }
    for (const auto& v : as_array(field(doc, "vertices"), "vertices")) {
        if (!v.is_object()) parse_fail("vertex entries must be objects");
        auto name = as_name(field(v, "id"), "vertex id");
        if (g.vertex_names().contains(name)) parse_fail("duplicate vertex '" + name + "'");
        PropSet labels;
        if (auto it = v.find("props"); it != v.end()) labels = props_of(g.props(), *it);
        Player owner = Player::None;
        if (auto it = v.find("owner"); it != v.end() && want_owners) {
            if (!it->is_number_integer() || (it->get<int>() != 1 && it->get<int>() != 2))
                parse_fail("owner of '" + name + "' must be 1 or 2");
            owner = it->get<int>() == 1 ? Player::One : Player::Two;
        }
        game.add_vertex(name, labels, owner);
    }
    for (const auto& e : as_array(field(doc, "edges"), "edges")) {
        if (!e.is_array() || e.size() != 2) parse_fail("edges must be [src, dst] pairs");
        game.add_edge(lookup(g.vertex_names(), e[0], "vertex"), lookup(g.vertex_names(), e[1], "vertex"));
    }
    game.set_initial(lookup(g.vertex_names(), field(doc, "initial"), "vertex"));
    return game;
}

SystemAutomaton parse_system(const json& doc) {
    SystemAutomaton sys;
    if (auto it = doc.find("ap"); it != doc.end()) {
        for (const auto& p : as_array(*it, "ap")) {
            auto name = as_name(p, "proposition");
            if (sys.props().contains(name)) parse_fail("duplicate proposition '" + name + "'");
            sys.add_prop(name);
        }
    }
    for (const auto& q : as_array(field(doc, "states"), "states")) {
        auto name = as_name(q, "state");
        if (sys.states().contains(name)) parse_fail("duplicate state '" + name + "'");
        sys.add_state(name);
    }
    for (const auto& a : as_array(field(doc, "alphabet"), "alphabet")) {
        auto name = as_name(a, "letter");
        if (sys.alphabet().contains(name)) parse_fail("duplicate letter '" + name + "'");
        sys.add_letter(name);
    }
    for (const auto& t : as_array(field(doc, "transitions"), "transitions")) {
        if (!t.is_array() || t.size() != 3) parse_fail("transitions must be [q, letter, q'] triples");
        sys.add_transition(lookup(sys.states(), t[0], "state"), lookup(sys.alphabet(), t[1], "letter"),
                           lookup(sys.states(), t[2], "state"));
    }
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_object()) parse_fail("'labels' must map state names to proposition lists");
        for (const auto& [name, props] : it->items()) {
            auto q = sys.states().find(name);
            if (!q) parse_fail("labels mention unknown state '" + name + "'");
            sys.set_label(*q, props_of(sys.props(), props));
        }
    }
    sys.set_initial(lookup(sys.states(), field(doc, "initial"), "state"));
    return sys;
}

json render_graph_fields(const LabeledGraph& g, const std::vector<Player>* owners) {
    json doc;
    doc["ap"] = g.props().names();
    json vertices = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        json entry{{"id", g.vertex_name(v)}, {"props", prop_names(g.props(), g.label(v))}};
        if (owners && v < owners->size() && (*owners)[v] != Player::None)
            entry["owner"] = static_cast<int>((*owners)[v]);
        vertices.push_back(std::move(entry));
    }
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId w : g.successors(v)) edges.push_back({g.vertex_name(v), g.vertex_name(w)});
    doc["edges"] = std::move(edges);
    doc["initial"] = g.vertex_name(g.initial());
    return doc;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dot_impl(const LabeledGraph& g, const std::vector<Player>* owners) {
    std::ostringstream out;
    out << "digraph G {\n";
    out << "  __start [shape=point];\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::string label = g.vertex_name(v);
        if (!g.label(v).empty()) {
            label += " {";
            bool first = true;
            g.label(v).for_each([&](PropId p) {
                if (!first) label += ",";
                label += g.prop_name(p);
                first = false;
            });
            label += "}";
        }
        out << "  v" << v << " [label=\"" << dot_escape(label) << "\"";
        if (owners) {
            if ((*owners)[v] == Player::One) out << ", shape=box";
            else if ((*owners)[v] == Player::Two) out << ", shape=diamond";
        }
        out << "];\n";
    }
    out << "  __start -> v" << g.initial() << ";\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId w : g.successors(v)) out << "  v" << v << " -> v" << w << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace

ModelKind infer_kind(const json& doc) {
    if (doc.contains("states")) return ModelKind::System;
    if (auto it = doc.find("vertices"); it != doc.end() && it->is_array()) {
        for (const auto& v : *it)
            if (v.is_object() && v.contains("owner")) return ModelKind::Game;
    }
    return ModelKind::Graph;
}

Document parse_document(const json& doc, std::optional<ModelKind> force) {
    if (!doc.is_object()) parse_fail("model document must be a JSON object");
    const ModelKind kind = force.value_or(infer_kind(doc));
    Document out{LabeledGraph{}, json()};
    switch (kind) {
    case ModelKind::System: out.model = parse_system(doc); break;
    case ModelKind::Game: out.model = parse_game_like(doc, true); break;
    case ModelKind::Graph: out.model = parse_game_like(doc, false).graph(); break;
    }
    if (auto it = doc.find("metadata"); it != doc.end()) out.metadata = *it;
    return out;
}

Document parse_document_text(std::string_view text, std::optional<ModelKind> force) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        parse_fail(e.what());
    }
    return parse_document(doc, force);
}

json render(const LabeledGraph& g) { return render_graph_fields(g, nullptr); }

json render(const LabeledGameGraph& g) { return render_graph_fields(g.graph(), &g.owners()); }

json render(const SystemAutomaton& sys) {
    json doc;
    doc["ap"] = sys.props().names();
    doc["states"] = sys.states().names();
    doc["alphabet"] = sys.alphabet().names();
    json transitions = json::array();
    for (const auto& t : sys.transitions())
        transitions.push_back({sys.states().name(t.from), sys.alphabet().name(t.letter), sys.states().name(t.to)});
    doc["transitions"] = std::move(transitions);
    json labels = json::object();
    for (StateId q = 0; q < sys.num_states(); ++q) labels[sys.states().name(q)] = prop_names(sys.props(), sys.label(q));
    doc["labels"] = std::move(labels);
    doc["initial"] = sys.states().name(sys.initial());
    return doc;
}

json render(const Document& doc) {
    json out = std::visit([](const auto& m) { return render(m); }, doc.model);
    if (!doc.metadata.is_null()) out["metadata"] = doc.metadata;
    return out;
}

std::string to_dot(const LabeledGraph& g) { return dot_impl(g, nullptr); }
std::string to_dot(const LabeledGameGraph& g) { return dot_impl(g.graph(), &g.owners()); }

std::vector<VertexId> patch_self_loops(LabeledGraph& g) {
    std::vector<VertexId> patched;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.successors(v).empty()) {
            g.add_edge(v, v);
            patched.push_back(v);
        }
    }
    return patched;
}

json path_to_json(const LabeledGraph& g, const Path& path) {
    json out = json::array();
    for (VertexId v : path) out.push_back(g.vertex_name(v));
    return out;
}

Path path_from_json(const LabeledGraph& g, const json& names) {
    Path path;
    for (const auto& n : as_array(names, "witness")) path.push_back(lookup(g.vertex_names(), n, "vertex"));
    return path;
}

json props_to_json(const LabeledGraph& g, PropSet s) { return prop_names(g.props(), s); }

PropSet props_from_json(const LabeledGraph& g, const json& names) { return props_of(g.props(), names); }

VertexId vertex_from_json(const LabeledGraph& g, const json& name) { return lookup(g.vertex_names(), name, "vertex"); }

} // namespace covgame
