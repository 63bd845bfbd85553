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

#include "covgame/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include "covgame/error.hpp"
#include "covgame/validate.hpp"

namespace covgame::oracle {

namespace {

class NodeBudget {
public:
    explicit NodeBudget(const OracleLimits& limits) : cap_(limits.max_nodes) {}
    void tick() {
        if (++used_ > cap_)
            throw Error(ErrorKind::BudgetExceeded, "oracle exceeded " + std::to_string(cap_) + " node expansions");
    }

private:
    std::uint64_t cap_;
    std::uint64_t used_ = 0;
};

void check_m(std::size_t m, std::size_t props) {
    if (m > props)
        throw Error(ErrorKind::MOutOfRange, "m = " + std::to_string(m) + " exceeds |AP| = " + std::to_string(props));
}

class GraphSearch {
public:
    GraphSearch(const LabeledGraph& g, std::size_t m, std::size_t cap, const OracleLimits& limits)
        : g_(g), m_(m), cap_(cap), budget_(limits) {}

    bool run() {
        std::vector<char> since_gain(g_.num_vertices(), 0);
        since_gain[g_.initial()] = 1;
        return dfs(g_.initial(), g_.label(g_.initial()), 0, since_gain);
    }

private:
    bool dfs(VertexId v, PropSet covered, std::size_t depth, std::vector<char>& since_gain) {
        budget_.tick();
        if (covered.size() >= m_) return true;
        if (depth == cap_) return false;
        for (VertexId w : g_.successors(v)) {
            const PropSet next = covered | g_.label(w);
            if (next == covered) {
                if (since_gain[w]) continue;
                since_gain[w] = 1;
                const bool found = dfs(w, next, depth + 1, since_gain);
                since_gain[w] = 0;
                if (found) return true;
            } else {
                std::vector<char> fresh(g_.num_vertices(), 0);
                fresh[w] = 1;
                if (dfs(w, next, depth + 1, fresh)) return true;
            }
        }
        return false;
    }

    const LabeledGraph& g_;
    std::size_t m_;
    std::size_t cap_;
    NodeBudget budget_;
};

// Labels of every vertex reachable from v in one or more steps, plus v itself.
std::vector<PropSet> reachable_labels(const LabeledGraph& g) {
    std::vector<PropSet> out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<char> seen(g.num_vertices(), 0);
        std::vector<VertexId> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            out[v] |= g.label(u);
            for (VertexId w : g.successors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return out;
}

class GameSearch {
public:
    GameSearch(const LabeledGameGraph& g, std::size_t m, const OracleLimits& limits)
        : g_(g), m_(m), reach_(reachable_labels(g.graph())), budget_(limits) {}

    // Whether the exploration-tree value at (v, covered) with `depth` levels left reaches m.
    bool wins(VertexId v, PropSet covered, std::size_t depth) {
        budget_.tick();
        if (covered.size() >= m_) return true;
        if (depth == 0 || (covered | reach_[v]).size() < m_) return false;
        const bool max_node = g_.owner(v) == Player::One;
        for (VertexId w : g_.successors(v)) {
            const bool child = wins(w, covered | g_.label(w), depth - 1);
            if (child == max_node) return child;
        }
        return !max_node;
    }

private:
    const LabeledGameGraph& g_;
    std::size_t m_;
    std::vector<PropSet> reach_;
    NodeBudget budget_;
};

bool clause_satisfied(const std::vector<int>& clause, const std::vector<char>& value) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](int lit) { return (value[std::abs(lit)] != 0) == (lit > 0); });
}

bool matrix_satisfied(const CnfFormula& phi, const std::vector<char>& value) {
    return std::all_of(phi.clauses.begin(), phi.clauses.end(),
                       [&](const auto& c) { return clause_satisfied(c, value); });
}

class QbfEval {
public:
    QbfEval(const QbfFormula& phi, const OracleLimits& limits)
        : phi_(phi), value_(phi.matrix.num_vars + 1, 0), budget_(limits) {}

    bool eval(std::size_t i) {
        budget_.tick();
        if (i == phi_.prefix.size()) return matrix_satisfied(phi_.matrix, value_);
        const auto [q, var] = phi_.prefix[i];
        const bool exists = q == Quantifier::Exists;
        for (char b : {0, 1}) {
            value_[var] = b;
            if (eval(i + 1) == exists) return exists;
        }
        return !exists;
    }

private:
    const QbfFormula& phi_;
    std::vector<char> value_;
    NodeBudget budget_;
};

void check_subset_size(std::size_t n, const char* what) {
    if (n >= 63) throw Error(ErrorKind::BudgetExceeded, std::string(what) + " is too large to enumerate");
}

} // namespace

bool brute_force_graph(const LabeledGraph& g, std::size_t m, std::size_t k, const OracleLimits& limits) {
    require_valid(g);
    check_m(m, g.num_props());
    return GraphSearch(g, m, std::min(k, m * g.num_vertices()), limits).run();
}

bool brute_force_game(const LabeledGameGraph& g, std::size_t m, std::size_t k, const OracleLimits& limits) {
    require_valid(g);
    check_m(m, g.num_props());
    const std::size_t depth = k == kUnbounded ? g.num_vertices() * (g.num_props() + 1) : k;
    return GameSearch(g, m, limits).wins(g.initial(), g.label(g.initial()), depth);
}

std::size_t maxsat_brute(const CnfFormula& phi, const OracleLimits& limits) {
    check_formula(phi);
    check_subset_size(phi.num_vars, "formula");
    NodeBudget budget(limits);
    std::vector<char> value(phi.num_vars + 1, 0);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.num_vars); ++mask) {
        budget.tick();
        for (std::size_t v = 1; v <= phi.num_vars; ++v) value[v] = (mask >> (v - 1)) & 1;
        std::size_t sat = 0;
        for (const auto& c : phi.clauses) sat += clause_satisfied(c, value);
        best = std::max(best, sat);
    }
    return best;
}

bool qbf_eval_brute(const QbfFormula& phi, const OracleLimits& limits) {
    check_formula(phi);
    return QbfEval(phi, limits).eval(0);
}

std::size_t min_vertex_cover_brute(const EdgeListGraph& h, const OracleLimits& limits) {
    const std::size_t n = h.vertices.size();
    check_subset_size(n, "graph");
    NodeBudget budget(limits);
    for (std::size_t size = 0; size <= n; ++size) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
            budget.tick();
            const bool covers = std::all_of(h.edges.begin(), h.edges.end(), [&](auto e) {
                return ((mask >> e.first) & 1) || ((mask >> e.second) & 1);
            });
            if (covers) return size;
        }
    }
    return n;
}

bool hampath_brute(const EdgeListGraph& h, std::uint32_t start, const OracleLimits& limits) {
    const std::size_t n = h.vertices.size();
    if (start >= n) throw Error(ErrorKind::InvalidModel, "start vertex out of range");
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto [u, w] : h.edges) adj[u].push_back(w);
    std::vector<char> on_path(n, 0);
    NodeBudget budget(limits);
    auto extend = [&](auto&& self, std::uint32_t v, std::size_t length) -> bool {
        budget.tick();
        if (length == n) return true;
        for (auto w : adj[v]) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            if (self(self, w, length + 1)) return true;
            on_path[w] = 0;
        }
        return false;
    };
    on_path[start] = 1;
    return extend(extend, start, 1);
}

PlayoutReport enumerate_playouts(const LabeledGameGraph& g, const Chooser& chooser, std::size_t m,
                                 std::size_t max_steps, const OracleLimits& limits) {
    require_valid(g);
    PlayoutReport report;
    NodeBudget budget(limits);
    Path play{g.initial()};

    auto finish = [&](bool success) {
        ++report.playouts;
        if (success)
            ++report.successes;
        else if (!report.counterexample)
            report.counterexample = play;
    };
    auto step = [&](auto&& self, PropSet covered) -> void {
        budget.tick();
        if (covered.size() >= m) return finish(true);
        if (play.size() - 1 >= max_steps) return finish(false);
        const VertexId v = play.back();
        if (g.owner(v) == Player::One) {
            auto choice = chooser(play, covered);
            auto succ = g.successors(v);
            if (!choice || std::find(succ.begin(), succ.end(), *choice) == succ.end()) return finish(false);
            play.push_back(*choice);
            self(self, covered | g.label(*choice));
            play.pop_back();
            return;
        }
        for (VertexId w : g.successors(v)) {
            play.push_back(w);
            self(self, covered | g.label(w));
            play.pop_back();
        }
    };
    step(step, g.label(g.initial()));
    return report;
}

} // namespace covgame::oracle
