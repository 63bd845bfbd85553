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

#include "covgame/game_cover.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "covgame/graph_algo.hpp"
#include "covgame/validate.hpp"

namespace covgame {

namespace {

void check_game_query(const LabeledGameGraph& g, std::size_t m, const GameOptions& opts) {
    require_valid(g);
    if (g.num_props() > opts.ap_cap)
        throw Error(ErrorKind::ApCapExceeded, "|AP| = " + std::to_string(g.num_props()) + " exceeds the cap of " +
                                                  std::to_string(opts.ap_cap));
    if (m > g.num_props())
        throw Error(ErrorKind::MOutOfRange,
                    "m = " + std::to_string(m) + " exceeds |AP| = " + std::to_string(g.num_props()));
}

struct BudgetedStateHash {
    std::size_t operator()(const BudgetedState& s) const noexcept {
        return ProductStateHash{}(ProductState{s.vertex, s.covered}) * 31 + s.remaining;
    }
};

GameCoverageAnswer solve_product(const ProductGame& pg, std::size_t m) {
    Mask goal(pg.size(), 0);
    for (std::size_t i = 0; i < pg.size(); ++i) goal[i] = pg.state(i).covered.size() >= m;
    auto attr = attractor(pg.successors(), pg.predecessors(), pg.owners(), goal, Player::One);

    GameCoverageAnswer out;
    out.product_states = pg.size();
    out.decision = attr.contains(0);
    if (!out.decision) return out;
    for (std::size_t i = 0; i < pg.size(); ++i) {
        if (pg.owners()[i] != Player::One || !attr.contains(i) || attr.rank[i] == 0) continue;
        // Successors are stored in ascending vertex order.
        for (VertexId j : pg.successors()[i]) {
            if (attr.rank[j] < attr.rank[i]) {
                out.strategy.emplace(pg.state(i), pg.state(j).vertex);
                break;
            }
        }
    }
    return out;
}

// Win/lose on (vertex, covered, remaining), memoized.
class MemoBoundedSolver {
public:
    MemoBoundedSolver(const LabeledGameGraph& g, std::size_t m) : g_(g), m_(m) {}

    bool wins(VertexId v, PropSet covered, std::size_t remaining) {
        if (covered.size() >= m_) return true;
        if (remaining == 0) return false;
        BudgetedState key{v, covered, remaining};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        ++nodes_;
        const bool any = g_.owner(v) == Player::One;
        bool result = !any;
        for (VertexId w : g_.successors(v)) {
            if (wins(w, covered | g_.label(w), remaining - 1) == any) {
                result = any;
                break;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    std::size_t nodes() const { return nodes_; }

private:
    const LabeledGameGraph& g_;
    std::size_t m_;
    std::unordered_map<BudgetedState, bool, BudgetedStateHash> memo_;
    std::size_t nodes_ = 0;
};

// Depth-first exploration tree without a memo table. A node is a leaf when
// the horizon is reached or its (vertex, covered) label repeats an ancestor.
class TreeBoundedSolver {
public:
    TreeBoundedSolver(const LabeledGameGraph& g, std::size_t horizon) : g_(g), horizon_(horizon) {}

    std::size_t value(VertexId v, PropSet covered, std::size_t depth, std::vector<ProductState>& ancestors) {
        ++nodes_;
        ProductState here{v, covered};
        if (depth == horizon_ || std::find(ancestors.begin(), ancestors.end(), here) != ancestors.end())
            return covered.size();
        ancestors.push_back(here);
        const bool maximize = g_.owner(v) == Player::One;
        std::size_t best = maximize ? 0 : std::numeric_limits<std::size_t>::max();
        for (VertexId w : g_.successors(v)) {
            auto child = value(w, covered | g_.label(w), depth + 1, ancestors);
            best = maximize ? std::max(best, child) : std::min(best, child);
        }
        ancestors.pop_back();
        return best;
    }

    std::size_t nodes() const { return nodes_; }

private:
    const LabeledGameGraph& g_;
    std::size_t horizon_;
    std::size_t nodes_ = 0;
};

// Walks every play consistent with Player One's choices and records them.
// `choose(state, path)` returns Player One's successor at a non-goal state.
template <class Choose>
BoundedStrategy extract_bounded_strategy(const LabeledGameGraph& g, std::size_t m, std::size_t budget,
                                         Choose&& choose) {
    BoundedStrategy strategy;
    std::set<BudgetedState> seen;
    std::vector<ProductState> path;
    auto walk = [&](auto&& self, VertexId v, PropSet covered, std::size_t remaining) -> void {
        if (covered.size() >= m || remaining == 0) return;
        BudgetedState key{v, covered, remaining};
        if (!seen.insert(key).second) return;
        path.push_back({v, covered});
        if (g.owner(v) == Player::One) {
            VertexId w = choose(key, path);
            strategy.emplace(key, w);
            self(self, w, covered | g.label(w), remaining - 1);
        } else {
            for (VertexId w : g.successors(v)) self(self, w, covered | g.label(w), remaining - 1);
        }
        path.pop_back();
    };
    walk(walk, g.initial(), g.label(g.initial()), budget);
    return strategy;
}

// Maximal end components of the subgame on `candidates`; returns the one
// holding `root`, or an empty vector.
std::vector<VertexId> end_component_containing(const LabeledGameGraph& g, Mask candidates, VertexId root) {
    const auto& adj = g.graph().adjacency();
    for (;;) {
        if (!candidates[root]) return {};
        auto scc = tarjan_scc(adj, &candidates);
        bool changed = false;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (!candidates[v]) continue;
            const auto comp = scc.component[v];
            bool has_inside = false;
            bool leaks = false;
            for (VertexId w : adj[v]) {
                const bool inside = candidates[w] && scc.component[w] == comp;
                has_inside |= inside;
                leaks |= !inside;
            }
            if (!has_inside || (leaks && g.owner(v) == Player::One)) {
                candidates[v] = 0;
                changed = true;
            }
        }
        if (!changed) {
            std::vector<VertexId> out;
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                if (candidates[v] && scc.component[v] == scc.component[root]) out.push_back(v);
            return out;
        }
    }
}

// Enumerates label budgets L(v_in) | S for subsets S of the other reachable
// labels, by increasing |S| then lexicographically, until `accept` succeeds.
template <class Accept>
bool for_each_label_budget(const LabeledGameGraph& g, const Mask& reach, Accept&& accept) {
    const PropSet base = g.label(g.initial());
    PropSet reachable;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (reach[v]) reachable |= g.label(v);
    std::vector<PropId> free;
    reachable.for_each([&](PropId p) {
        if (!base.contains(p)) free.push_back(p);
    });

    const std::size_t n = free.size();
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            PropSet budget = base;
            for (auto i : pick) budget.insert(free[i]);
            if (accept(budget)) return true;
            // Next combination in lexicographic order.
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return false;
}

Mask within_budget(const LabeledGameGraph& g, const Mask& reach, PropSet budget) {
    Mask allowed(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) allowed[v] = reach[v] && g.label(v).subset_of(budget);
    return allowed;
}

PropSet labels_of(const LabeledGameGraph& g, std::span<const VertexId> vertices) {
    PropSet covered;
    for (VertexId v : vertices) covered |= g.label(v);
    return covered;
}

} // namespace

ProductGame::ProductGame(const LabeledGameGraph& g) {
    std::unordered_map<ProductState, std::uint32_t, ProductStateHash> index;
    auto intern = [&](ProductState s) {
        auto [it, fresh] = index.try_emplace(s, static_cast<std::uint32_t>(states_.size()));
        if (fresh) {
            states_.push_back(s);
            succ_.emplace_back();
            owner_.push_back(g.owner(s.vertex));
        }
        return it->second;
    };
    intern({g.initial(), g.label(g.initial())});
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const ProductState s = states_[i];
        for (VertexId w : g.successors(s.vertex)) {
            auto j = intern({w, s.covered | g.label(w)});
            succ_[i].push_back(j);
        }
    }
    pred_ = reverse(succ_);
}

GameCoverageAnswer max_coverage_game(const LabeledGameGraph& g, std::size_t m, const GameOptions& opts) {
    check_game_query(g, m, opts);
    ProductGame pg(g);
    return solve_product(pg, m);
}

GameValue coverage_value_game(const LabeledGameGraph& g, const GameOptions& opts) {
    check_game_query(g, 0, opts);
    ProductGame pg(g);
    std::size_t top = 0;
    for (std::size_t i = 0; i < pg.size(); ++i) top = std::max(top, pg.state(i).covered.size());
    for (std::size_t m = top;; --m) {
        auto answer = solve_product(pg, m);
        if (answer.decision) return {m, std::move(answer.strategy), pg.size()};
        // m = 0 always wins, so the loop ends there at the latest.
    }
}

BoundedGameAnswer bounded_coverage_game(const LabeledGameGraph& g, std::size_t m, std::size_t k,
                                        const GameOptions& opts) {
    check_game_query(g, m, opts);
    BoundedGameAnswer out;
    // Player One never needs more than m*|V| steps to collect m propositions.
    out.budget = std::min(k, m * g.num_vertices());
    const PropSet start = g.label(g.initial());

    if (!opts.low_memory) {
        MemoBoundedSolver solver(g, m);
        out.decision = solver.wins(g.initial(), start, out.budget);
        if (out.decision) {
            out.strategy = extract_bounded_strategy(g, m, out.budget, [&](const BudgetedState& s, const auto&) {
                for (VertexId w : g.successors(s.vertex))
                    if (solver.wins(w, s.covered | g.label(w), s.remaining - 1)) return w;
                return g.successors(s.vertex).front(); // unreachable on a winning state
            });
        }
        out.nodes_evaluated = solver.nodes();
        return out;
    }

    TreeBoundedSolver solver(g, out.budget);
    std::vector<ProductState> ancestors;
    out.decision = solver.value(g.initial(), start, 0, ancestors) >= m;
    if (out.decision) {
        out.strategy = extract_bounded_strategy(g, m, out.budget, [&](const BudgetedState& s, const auto& path) {
            std::vector<ProductState> anc(path.begin(), path.end());
            const std::size_t depth = out.budget - s.remaining + 1;
            for (VertexId w : g.successors(s.vertex))
                if (solver.value(w, s.covered | g.label(w), depth, anc) >= m) return w;
            return g.successors(s.vertex).front();
        });
    }
    out.nodes_evaluated = solver.nodes();
    return out;
}

RecurrenceVerdict is_controllably_recurrent_game(const LabeledGameGraph& g) {
    require_valid(g);
    const auto& adj = g.graph().adjacency();
    auto reach = forward_reachable(adj, g.initial());
    Mask home(g.num_vertices(), 0);
    home[g.initial()] = 1;
    auto attr = attractor(adj, reverse(adj), g.owners(), home, Player::One);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (reach[v] && !attr.contains(v)) return {false, v};
    return {true, std::nullopt};
}

bool verify_end_component_witness(const LabeledGameGraph& g, std::span<const VertexId> vertices, std::size_t m) {
    require_valid(g);
    Mask in(g.num_vertices(), 0);
    for (VertexId v : vertices) {
        if (v >= g.num_vertices()) return false;
        in[v] = 1;
    }
    if (!in[g.initial()]) return false;

    const auto& adj = g.graph().adjacency();
    for (VertexId v : vertices) {
        bool has_inside = false;
        for (VertexId w : adj[v]) {
            if (in[w]) has_inside = true;
            else if (g.owner(v) == Player::One) return false; // not Player One closed
        }
        if (!has_inside) return false;
    }
    if (tarjan_scc(adj, &in).count != 1) return false;
    return labels_of(g, vertices).size() < m;
}

EndComponent min_cover_end_component(const LabeledGameGraph& g, const GameOptions& opts) {
    check_game_query(g, 0, opts);
    auto reach = forward_reachable(g.graph().adjacency(), g.initial());
    if (end_component_containing(g, reach, g.initial()).empty())
        throw Error(ErrorKind::NoEndComponent,
                    "no end component contains the initial vertex (the game is not controllably recurrent)");

    EndComponent best;
    for_each_label_budget(g, reach, [&](PropSet budget) {
        auto ec = end_component_containing(g, within_budget(g, reach, budget), g.initial());
        if (ec.empty()) return false;
        best.covered = labels_of(g, ec);
        best.vertices = std::move(ec);
        return true;
    });
    return best;
}

Confinement min_safety_confinement(const LabeledGameGraph& g, const GameOptions& opts) {
    check_game_query(g, 0, opts);
    const auto& adj = g.graph().adjacency();
    const auto pred = reverse(adj);
    auto reach = forward_reachable(adj, g.initial());

    Confinement best;
    for_each_label_budget(g, reach, [&](PropSet budget) {
        Mask outside = within_budget(g, reach, budget);
        for (auto& c : outside) c = !c;
        // Player Two confines the play to the complement of Player One's attractor of `outside`.
        auto escape = attractor(adj, pred, g.owners(), outside, Player::One);
        if (escape.contains(g.initial())) return false;
        best.vertices.clear();
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (!escape.contains(v)) best.vertices.push_back(v);
        best.covered = labels_of(g, best.vertices);
        return true;
    });
    return best;
}

std::size_t min_safety_value(const LabeledGameGraph& g, const GameOptions& opts) {
    return min_safety_confinement(g, opts).covered.size();
}

} // namespace covgame
