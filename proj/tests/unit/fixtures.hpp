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

#include <string>
#include <vector>

#include "covgame/model.hpp"
#include "covgame/reductions.hpp"

namespace covgame::fixtures {

// a -> b -> c -> a with labels {p}, {q}, {r}.
inline LabeledGraph triangle() {
    LabeledGraph g;
    auto p = g.add_prop("p"), q = g.add_prop("q"), r = g.add_prop("r");
    auto a = g.add_vertex("a", {p}), b = g.add_vertex("b", {q}), c = g.add_vertex("c", {r});
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(c, a);
    g.set_initial(a);
    return g;
}

// s -> {t, u}; t and u absorbing. L(s) = {}, L(t) = {p}, L(u) = {q}.
inline LabeledGraph branch() {
    LabeledGraph g;
    auto p = g.add_prop("p"), q = g.add_prop("q");
    auto s = g.add_vertex("s"), t = g.add_vertex("t", {p}), u = g.add_vertex("u", {q});
    g.add_edge(s, t);
    g.add_edge(s, u);
    g.add_edge(t, t);
    g.add_edge(u, u);
    g.set_initial(s);
    return g;
}

// The branch graph as a game; v0 (= s) owned by `root`, a and b by Player One.
inline LabeledGameGraph branch_game(Player root = Player::Two) {
    return LabeledGameGraph(branch(), {root, Player::One, Player::One});
}

inline LabeledGameGraph triangle_game() { return LabeledGameGraph::all_player_one(triangle()); }

inline LabeledGraph self_loop(PropSet labels = {}, bool with_prop = false) {
    LabeledGraph g;
    if (with_prop) g.add_prop("p");
    auto v = g.add_vertex("v", labels);
    g.add_edge(v, v);
    g.set_initial(v);
    return g;
}

inline EdgeListGraph edge_list(std::vector<std::string> vertices,
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    return {std::move(vertices), std::move(edges)};
}

inline EdgeListGraph k3() { return edge_list({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}); }

} // namespace covgame::fixtures
