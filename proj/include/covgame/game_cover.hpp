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

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "covgame/graph_cover.hpp"
#include "covgame/model.hpp"

namespace covgame {

struct GameOptions {
    /// Largest proposition universe a game solver accepts (the product has up to |V| * 2^|AP| states).
    std::size_t ap_cap = kDefaultPropCap;
    /// Bounded solver: plain depth-first minimax with the repeated-label
    /// cutoff and no memo table, instead of the memoized recursion.
    bool low_memory = false;
};

/// The reachable part of the V x 2^AP product game, built from the initial state.
///
/// State 0 is (v_in, L(v_in)); an edge (v,b) -> (v',b') exists iff (v,v') is an
/// edge and b' = b | L(v'). Owners are inherited from the vertex.
class ProductGame {
public:
    explicit ProductGame(const LabeledGameGraph& g);

    std::size_t size() const { return states_.size(); }
    const ProductState& state(std::size_t i) const { return states_[i]; }
    const Adjacency& successors() const { return succ_; }
    const Adjacency& predecessors() const { return pred_; }
    const std::vector<Player>& owners() const { return owner_; }

private:
    std::vector<ProductState> states_;
    Adjacency succ_;
    Adjacency pred_;
    std::vector<Player> owner_;
};

/// Memoryless strategy on the product: (vertex, covered) -> chosen successor.
/// On the original game this is a finite-memory strategy whose memory is the covered set.
using TesterStrategy = std::map<ProductState, VertexId>;

struct GameCoverageAnswer {
    bool decision = false;
    TesterStrategy strategy;
    std::size_t product_states = 0;
};

/// Can Player One force at least `m` propositions? Solved as a reachability
/// game on the product with goal {(v,b) : |b| >= m}. On a yes, the strategy is
/// defined on every winning non-goal Player One state and always moves to the
/// lowest-id successor that strictly decreases the attractor rank.
GameCoverageAnswer max_coverage_game(const LabeledGameGraph& g, std::size_t m, const GameOptions& opts = {});

struct GameValue {
    std::size_t value = 0;
    TesterStrategy strategy;
    std::size_t product_states = 0;
};

/// Largest m Player One can force, searched downward from |AP| on one product.
GameValue coverage_value_game(const LabeledGameGraph& g, const GameOptions& opts = {});

struct BudgetedState {
    VertexId vertex = 0;
    PropSet covered;
    std::size_t remaining = 0; // steps left before the horizon
    auto operator<=>(const BudgetedState&) const = default;
};

using BoundedStrategy = std::map<BudgetedState, VertexId>;

struct BoundedGameAnswer {
    bool decision = false;
    /// Horizon actually searched: min(k, m*|V|). Strategy keys count down from it.
    std::size_t budget = 0;
    BoundedStrategy strategy;
    std::size_t nodes_evaluated = 0;
};

/// Can Player One force at least `m` propositions within `k` steps?
///
/// Default mode memoizes win/lose on (vertex, covered, remaining). Low-memory
/// mode evaluates the exploration tree depth-first with leaves at the horizon
/// or at a node repeating an ancestor's (vertex, covered) label, leaf value |b|,
/// max at Player One and min at Player Two.
BoundedGameAnswer bounded_coverage_game(const LabeledGameGraph& g, std::size_t m, std::size_t k,
                                        const GameOptions& opts = {});

/// Every vertex reachable from v_in lies in Player One's attractor of {v_in}.
RecurrenceVerdict is_controllably_recurrent_game(const LabeledGameGraph& g);

struct EndComponent {
    std::vector<VertexId> vertices; // ascending
    PropSet covered;
};

/// True iff U contains v_in, is strongly connected in the induced subgraph,
/// is closed under Player One moves, and covers fewer than `m` propositions.
bool verify_end_component_witness(const LabeledGameGraph& g, std::span<const VertexId> vertices, std::size_t m);

/// End component containing v_in with the fewest covered propositions.
///
/// Searches candidate label budgets P (supersets of L(v_in), by increasing
/// size, lexicographic within a size) and checks whether v_in lies in a maximal
/// end component of the subgame on {v : L(v) within P}. Throws
/// Error(NoEndComponent) when no end component contains v_in, which can only
/// happen on games that are not controllably recurrent.
EndComponent min_cover_end_component(const LabeledGameGraph& g, const GameOptions& opts = {});

/// Smallest label count of a set U containing v_in in which Player Two can
/// confine every play (Player One moves stay in U, Player Two always has a move
/// in U). On controllably recurrent games it equals the end-component minimum
/// and the coverage value.
struct Confinement {
    std::vector<VertexId> vertices;
    PropSet covered;
};

Confinement min_safety_confinement(const LabeledGameGraph& g, const GameOptions& opts = {});
std::size_t min_safety_value(const LabeledGameGraph& g, const GameOptions& opts = {});

} // namespace covgame
