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
#include <cstdint>
#include <random>

#include "covgame/model.hpp"
#include "covgame/reductions.hpp"

/// Seeded random instances for tests and the `random` CLI subcommand.
namespace covgame::random {

using Rng = std::mt19937_64;

struct ModelShape {
    std::size_t min_vertices = 1;
    std::size_t max_vertices = 6;
    std::size_t min_props = 1;
    std::size_t max_props = 3;
    /// Out-degree is drawn from [1, max_out_degree], capped by |V|.
    std::size_t max_out_degree = 3;
    double label_probability = 0.4;
};

/// Total graph; vertices v0.., propositions p0.., initial vertex 0.
LabeledGraph graph(Rng& rng, const ModelShape& shape);
/// Total game graph with owners drawn uniformly.
LabeledGameGraph game(Rng& rng, const ModelShape& shape);
/// A random Hamiltonian cycle plus random extra edges.
LabeledGraph strongly_connected_graph(Rng& rng, const ModelShape& shape);
/// Game in which Player One can force a return to vertex 0 from every vertex:
/// in a random order starting at 0, Player Two vertices only point backwards
/// and Player One vertices have at least one backward edge.
LabeledGameGraph recurrent_game(Rng& rng, const ModelShape& shape);

CnfFormula cnf(Rng& rng, std::size_t max_vars, std::size_t max_clauses, std::size_t max_width = 3);
/// Prefix is a random quantifier per variable in ascending order.
QbfFormula qbf(Rng& rng, std::size_t max_vars, std::size_t max_clauses, std::size_t max_width = 3);
/// Undirected simple graph, each pair an edge with probability `p`.
EdgeListGraph undirected(Rng& rng, std::size_t vertices, double p);
/// Directed graph without self-loops, each ordered pair an edge with probability `p`.
EdgeListGraph directed(Rng& rng, std::size_t vertices, double p);

} // namespace covgame::random
