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

#include "covgame/system.hpp"

#include "covgame/validate.hpp"

namespace covgame {

LabeledGameGraph compile_system(const SystemAutomaton& sys) {
    require_valid(sys);
    LabeledGameGraph game;
    for (const auto& p : sys.props().names()) game.add_prop(p);

    const auto nq = sys.num_states();
    const auto na = sys.num_letters();
    for (StateId q = 0; q < nq; ++q) game.add_vertex(sys.states().name(q), sys.label(q), Player::One);
    for (StateId q = 0; q < nq; ++q) {
        for (LetterId a = 0; a < na; ++a) {
            game.add_vertex("(" + sys.states().name(q) + "," + sys.alphabet().name(a) + ")", sys.label(q),
                            Player::Two);
        }
    }
    auto pair_vertex = [&](StateId q, LetterId a) { return static_cast<VertexId>(nq + q * na + a); };
    for (StateId q = 0; q < nq; ++q)
        for (LetterId a = 0; a < na; ++a) game.add_edge(q, pair_vertex(q, a));
    for (const auto& t : sys.transitions()) game.add_edge(pair_vertex(t.from, t.letter), t.to);
    game.set_initial(sys.initial());
    return game;
}

LabeledGraph game_to_graph(const LabeledGameGraph& g) {
    require_valid(g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.owner(v) == Player::Two && g.successors(v).size() != 1)
            throw Error(ErrorKind::NotDeterministic, "Player Two vertex '" + g.vertex_name(v) + "' has " +
                                                         std::to_string(g.successors(v).size()) + " successors");
    }
    return g.graph();
}

} // namespace covgame
