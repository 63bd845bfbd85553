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

#include "covgame/certify.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "covgame/validate.hpp"

namespace covgame {

namespace {

std::string describe(const LabeledGameGraph& g, VertexId v, PropSet covered) {
    std::string out = "(" + g.vertex_name(v) + ", {";
    bool first = true;
    covered.for_each([&](PropId p) {
        out += (first ? "" : ",") + g.graph().prop_name(p);
        first = false;
    });
    return out + "})";
}

bool is_successor(const LabeledGameGraph& g, VertexId from, VertexId to) {
    auto succ = g.successors(from);
    return std::binary_search(succ.begin(), succ.end(), to);
}

// Depth-first search over the plays allowed by a strategy. `Expand(state,
// out, why)` fills the successor states of a non-goal state or returns false
// with a reason. Fails on a cycle that avoids the goal.
template <class State, class IsGoal, class Expand>
CertifyResult explore(const State& start, IsGoal&& is_goal, Expand&& expand) {
    enum class Color { Active, Done };
    struct Info {
        Color color;
        std::size_t longest = 0;
    };
    struct Frame {
        State state;
        std::vector<State> next;
        std::size_t index = 0;
    };
    std::map<State, Info> info;
    std::vector<Frame> stack;
    std::string why;

    auto open = [&](const State& s) -> bool {
        if (is_goal(s)) {
            info[s] = {Color::Done, 0};
            return true;
        }
        Frame f{s, {}, 0};
        if (!expand(s, f.next, why)) return false;
        info[s] = {Color::Active, 0};
        stack.push_back(std::move(f));
        return true;
    };

    if (!open(start)) return CertifyResult::fail(why);
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.index == top.next.size()) {
            info[top.state].color = Color::Done;
            stack.pop_back();
            continue;
        }
        const State child = top.next[top.index++];
        const State parent = top.state;
        auto it = info.find(child);
        if (it == info.end()) {
            if (!open(child)) return CertifyResult::fail(why);
            it = info.find(child);
            if (it->second.color == Color::Active) {
                --stack[stack.size() - 2].index; // revisit the edge once the child is done
                continue;
            }
        }
        if (it->second.color == Color::Active) return CertifyResult::fail("a play can cycle without reaching the goal");
        auto& p = info[parent];
        p.longest = std::max(p.longest, it->second.longest + 1);
    }
    return CertifyResult::pass(info[start].longest);
}

} // namespace

CertifyResult certify_path(const LabeledGraph& g, std::span<const VertexId> path, std::size_t m,
                           std::size_t max_edges) {
    require_valid(g);
    if (!path_check(g, path)) return CertifyResult::fail("not a path from the initial vertex");
    if (path.size() - 1 > max_edges)
        return CertifyResult::fail("path has " + std::to_string(path.size() - 1) + " edges, limit " +
                                   std::to_string(max_edges));
    const auto covered = cover_of(g, path).size();
    if (covered < m)
        return CertifyResult::fail("path covers " + std::to_string(covered) + " < " + std::to_string(m) +
                                   " propositions");
    return CertifyResult::pass(path.size() - 1);
}

CertifyResult certify_strategy(const LabeledGameGraph& g, const TesterStrategy& strategy, std::size_t m) {
    require_valid(g);
    const ProductState start{g.initial(), g.label(g.initial())};
    auto is_goal = [&](const ProductState& s) { return s.covered.size() >= m; };
    auto expand = [&](const ProductState& s, std::vector<ProductState>& out, std::string& why) {
        auto step = [&](VertexId w) { out.push_back({w, s.covered | g.label(w)}); };
        if (g.owner(s.vertex) == Player::Two) {
            for (VertexId w : g.successors(s.vertex)) step(w);
            return true;
        }
        auto it = strategy.find(s);
        if (it == strategy.end()) {
            why = "strategy undefined at " + describe(g, s.vertex, s.covered);
            return false;
        }
        if (!is_successor(g, s.vertex, it->second)) {
            why = "strategy moves along a missing edge at " + describe(g, s.vertex, s.covered);
            return false;
        }
        step(it->second);
        return true;
    };
    return explore(start, is_goal, expand);
}

CertifyResult certify_bounded_strategy(const LabeledGameGraph& g, const BoundedStrategy& strategy, std::size_t m,
                                       std::size_t budget) {
    require_valid(g);
    const BudgetedState start{g.initial(), g.label(g.initial()), budget};
    auto is_goal = [&](const BudgetedState& s) { return s.covered.size() >= m; };
    auto expand = [&](const BudgetedState& s, std::vector<BudgetedState>& out, std::string& why) {
        if (s.remaining == 0) {
            why = "budget exhausted at " + describe(g, s.vertex, s.covered);
            return false;
        }
        auto step = [&](VertexId w) { out.push_back({w, s.covered | g.label(w), s.remaining - 1}); };
        if (g.owner(s.vertex) == Player::Two) {
            for (VertexId w : g.successors(s.vertex)) step(w);
            return true;
        }
        auto it = strategy.find(s);
        if (it == strategy.end()) {
            why = "strategy undefined at " + describe(g, s.vertex, s.covered) + " with " +
                  std::to_string(s.remaining) + " steps left";
            return false;
        }
        if (!is_successor(g, s.vertex, it->second)) {
            why = "strategy moves along a missing edge at " + describe(g, s.vertex, s.covered);
            return false;
        }
        step(it->second);
        return true;
    };
    return explore(start, is_goal, expand);
}

CertifyResult certify_end_component(const LabeledGameGraph& g, std::span<const VertexId> vertices, std::size_t m) {
    require_valid(g);
    if (!verify_end_component_witness(g, vertices, m))
        return CertifyResult::fail("not an end component containing the initial vertex with fewer than " +
                                   std::to_string(m) + " propositions");
    return CertifyResult::pass(0);
}

} // namespace covgame
