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

#include "covgame/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace covgame {

PropId LabeledGraph::add_prop(std::string_view name) {
    if (!props_.contains(name) && props_.size() >= kMaxProps)
        throw Error(ErrorKind::ApCapExceeded, "more than 64 propositions");
    return props_.intern(name);
}

VertexId LabeledGraph::add_vertex(std::string_view name, PropSet labels) {
    if (vertex_names_.contains(name))
        throw std::invalid_argument("duplicate vertex name '" + std::string(name) + "'");
    auto id = vertex_names_.intern(name);
    labels_.push_back(labels);
    succ_.emplace_back();
    return id;
}

void LabeledGraph::add_edge(VertexId from, VertexId to) {
    auto& out = succ_.at(from);
    auto it = std::lower_bound(out.begin(), out.end(), to);
    if (it == out.end() || *it != to) out.insert(it, to);
}

std::size_t LabeledGraph::num_edges() const {
    std::size_t n = 0;
    for (const auto& out : succ_) n += out.size();
    return n;
}

PropSet LabeledGraph::all_labels() const {
    PropSet all;
    for (PropSet l : labels_) all |= l;
    return all;
}

LabeledGameGraph::LabeledGameGraph(LabeledGraph graph, std::vector<Player> owners)
    : graph_(std::move(graph)), owners_(std::move(owners)) {
    owners_.resize(graph_.num_vertices(), Player::None);
}

LabeledGameGraph LabeledGameGraph::all_player_one(const LabeledGraph& graph) {
    return LabeledGameGraph(graph, std::vector<Player>(graph.num_vertices(), Player::One));
}

VertexId LabeledGameGraph::add_vertex(std::string_view name, PropSet labels, Player owner) {
    auto v = graph_.add_vertex(name, labels);
    owners_.resize(graph_.num_vertices(), Player::None);
    owners_[v] = owner;
    return v;
}

StateId SystemAutomaton::add_state(std::string_view name, PropSet labels) {
    if (states_.contains(name))
        throw std::invalid_argument("duplicate state name '" + std::string(name) + "'");
    auto id = states_.intern(name);
    labels_.push_back(labels);
    return id;
}

void SystemAutomaton::add_transition(StateId from, LetterId letter, StateId to) {
    Transition t{from, letter, to};
    auto it = std::lower_bound(transitions_.begin(), transitions_.end(), t);
    if (it == transitions_.end() || *it != t) transitions_.insert(it, t);
}

std::vector<StateId> SystemAutomaton::successors(StateId q, LetterId a) const {
    std::vector<StateId> out;
    auto it = std::lower_bound(transitions_.begin(), transitions_.end(), Transition{q, a, 0});
    for (; it != transitions_.end() && it->from == q && it->letter == a; ++it) out.push_back(it->to);
    return out;
}

namespace {

// Successor count per (state, letter), over in-range transitions only.
std::vector<std::size_t> out_degrees(const SystemAutomaton& sys) {
    std::vector<std::size_t> deg(sys.num_states() * sys.num_letters(), 0);
    for (const auto& t : sys.transitions()) {
        if (t.from < sys.num_states() && t.letter < sys.num_letters() && t.to < sys.num_states())
            ++deg[t.from * sys.num_letters() + t.letter];
    }
    return deg;
}

} // namespace

bool SystemAutomaton::is_total() const {
    auto deg = out_degrees(*this);
    return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d >= 1; });
}

bool SystemAutomaton::is_deterministic() const {
    auto deg = out_degrees(*this);
    return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 1; });
}

PropSet cover_of(const LabeledGraph& g, std::span<const VertexId> path) {
    PropSet covered;
    for (VertexId v : path) covered |= g.label(v);
    return covered;
}

bool path_check(const LabeledGraph& g, std::span<const VertexId> path) {
    if (path.empty() || path.front() != g.initial()) return false;
    for (VertexId v : path)
        if (v >= g.num_vertices()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto out = g.successors(path[i]);
        if (!std::binary_search(out.begin(), out.end(), path[i + 1])) return false;
    }
    return true;
}

} // namespace covgame
