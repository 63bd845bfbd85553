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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covgame/prop_set.hpp"

namespace covgame {

using VertexId = std::uint32_t;
using Adjacency = std::vector<std::vector<VertexId>>;

/// Vertex owner in a game graph. `None` only appears in models that fail validation.
enum class Player : std::uint8_t { None = 0, One = 1, Two = 2 };

/// A finite-path prefix, as a vertex sequence starting at the initial vertex.
using Path = std::vector<VertexId>;

/// Directed graph with an initial vertex and a proposition label per vertex.
///
/// Successor lists are kept sorted and duplicate-free so that every search
/// visiting successors in list order explores them in ascending vertex id.
class LabeledGraph {
public:
    PropId add_prop(std::string_view name);
    VertexId add_vertex(std::string_view name, PropSet labels = {});
    /// `from` must name an existing vertex; `to` is stored as given (validate() reports dangling ids).
    void add_edge(VertexId from, VertexId to);
    void set_initial(VertexId v) { initial_ = v; }
    void set_label(VertexId v, PropSet labels) { labels_.at(v) = labels; }

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_props() const { return props_.size(); }
    std::size_t num_edges() const;

    VertexId initial() const { return initial_; }
    PropSet label(VertexId v) const { return labels_[v]; }
    std::span<const VertexId> successors(VertexId v) const { return succ_[v]; }
    const Adjacency& adjacency() const { return succ_; }

    const SymbolTable& props() const { return props_; }
    const SymbolTable& vertex_names() const { return vertex_names_; }
    const std::string& vertex_name(VertexId v) const { return vertex_names_.name(v); }
    const std::string& prop_name(PropId p) const { return props_.name(p); }

    /// Labels of every vertex, unioned.
    PropSet all_labels() const;

    bool operator==(const LabeledGraph&) const = default;

private:
    SymbolTable props_;
    SymbolTable vertex_names_;
    std::vector<PropSet> labels_;
    Adjacency succ_;
    VertexId initial_ = 0;
};

/// Labeled graph with a (V1, V2) partition; Player One is the tester.
class LabeledGameGraph {
public:
    LabeledGameGraph() = default;
    /// Owners default to Player::None for vertices not covered by `owners`.
    explicit LabeledGameGraph(LabeledGraph graph, std::vector<Player> owners = {});

    /// Every vertex owned by Player One: the game with no adversary.
    static LabeledGameGraph all_player_one(const LabeledGraph& graph);

    PropId add_prop(std::string_view name) { return graph_.add_prop(name); }
    VertexId add_vertex(std::string_view name, PropSet labels, Player owner);
    void add_edge(VertexId from, VertexId to) { graph_.add_edge(from, to); }
    void set_initial(VertexId v) { graph_.set_initial(v); }
    void set_owner(VertexId v, Player p) { owners_.at(v) = p; }

    const LabeledGraph& graph() const { return graph_; }
    LabeledGraph& graph() { return graph_; }

    Player owner(VertexId v) const { return owners_[v]; }
    const std::vector<Player>& owners() const { return owners_; }

    std::size_t num_vertices() const { return graph_.num_vertices(); }
    std::size_t num_props() const { return graph_.num_props(); }
    VertexId initial() const { return graph_.initial(); }
    PropSet label(VertexId v) const { return graph_.label(v); }
    std::span<const VertexId> successors(VertexId v) const { return graph_.successors(v); }
    const std::string& vertex_name(VertexId v) const { return graph_.vertex_name(v); }

    bool operator==(const LabeledGameGraph&) const = default;

private:
    LabeledGraph graph_;
    std::vector<Player> owners_;
};

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

struct Transition {
    StateId from = 0;
    LetterId letter = 0;
    StateId to = 0;
    auto operator<=>(const Transition&) const = default;
};

/// Input-driven system: the tester picks letters, the system resolves nondeterminism.
class SystemAutomaton {
public:
    PropId add_prop(std::string_view name) { return props_.intern(name); }
    StateId add_state(std::string_view name, PropSet labels = {});
    LetterId add_letter(std::string_view name) { return alphabet_.intern(name); }
    void add_transition(StateId from, LetterId letter, StateId to);
    void set_initial(StateId q) { initial_ = q; }
    void set_label(StateId q, PropSet labels) { labels_.at(q) = labels; }

    std::size_t num_states() const { return labels_.size(); }
    std::size_t num_letters() const { return alphabet_.size(); }
    std::size_t num_props() const { return props_.size(); }
    StateId initial() const { return initial_; }
    PropSet label(StateId q) const { return labels_[q]; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    std::vector<StateId> successors(StateId q, LetterId a) const;

    const SymbolTable& props() const { return props_; }
    const SymbolTable& states() const { return states_; }
    const SymbolTable& alphabet() const { return alphabet_; }

    /// Every (state, letter) pair has at least one successor.
    bool is_total() const;
    /// Every (state, letter) pair has exactly one successor.
    bool is_deterministic() const;

    bool operator==(const SystemAutomaton&) const = default;

private:
    SymbolTable props_;
    SymbolTable states_;
    SymbolTable alphabet_;
    std::vector<PropSet> labels_;
    std::vector<Transition> transitions_; // sorted, unique
    StateId initial_ = 0;
};

/// Union of the labels along `path`.
PropSet cover_of(const LabeledGraph& g, std::span<const VertexId> path);

/// True iff `path` is nonempty, starts at the initial vertex and follows edges.
bool path_check(const LabeledGraph& g, std::span<const VertexId> path);

} // namespace covgame
