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

#include "covgame/random_models.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace covgame::random {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Vertices and propositions with random labels, no edges yet.
LabeledGraph skeleton(Rng& rng, const ModelShape& shape) {
    LabeledGraph g;
    const auto props = uniform(rng, shape.min_props, shape.max_props);
    for (std::size_t p = 0; p < props; ++p) g.add_prop("p" + std::to_string(p));
    const auto n = uniform(rng, shape.min_vertices, shape.max_vertices);
    for (std::size_t v = 0; v < n; ++v) {
        PropSet labels;
        for (PropId p = 0; p < props; ++p)
            if (coin(rng, shape.label_probability)) labels.insert(p);
        g.add_vertex("v" + std::to_string(v), labels);
    }
    g.set_initial(0);
    return g;
}

void add_random_edges(Rng& rng, LabeledGraph& g, VertexId v, std::size_t count) {
    std::vector<VertexId> targets(g.num_vertices());
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t i = 0; i < std::min(count, targets.size()); ++i) g.add_edge(v, targets[i]);
}

std::vector<int> random_clause(Rng& rng, std::size_t vars, std::size_t max_width) {
    std::vector<int> clause;
    const auto width = uniform(rng, 1, std::min(max_width, vars));
    std::vector<int> pool(vars);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t i = 0; i < width; ++i) clause.push_back(coin(rng, 0.5) ? pool[i] : -pool[i]);
    return clause;
}

} // namespace

LabeledGraph graph(Rng& rng, const ModelShape& shape) {
    auto g = skeleton(rng, shape);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        add_random_edges(rng, g, v, uniform(rng, 1, std::max<std::size_t>(1, shape.max_out_degree)));
    return g;
}

LabeledGameGraph game(Rng& rng, const ModelShape& shape) {
    auto g = graph(rng, shape);
    std::vector<Player> owners(g.num_vertices());
    for (auto& o : owners) o = coin(rng, 0.5) ? Player::One : Player::Two;
    return LabeledGameGraph(std::move(g), std::move(owners));
}

LabeledGraph strongly_connected_graph(Rng& rng, const ModelShape& shape) {
    auto g = skeleton(rng, shape);
    std::vector<VertexId> cycle(g.num_vertices());
    std::iota(cycle.begin(), cycle.end(), 0);
    std::shuffle(cycle.begin(), cycle.end(), rng);
    for (std::size_t i = 0; i < cycle.size(); ++i) g.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    for (VertexId v = 0; v < g.num_vertices(); ++v) add_random_edges(rng, g, v, uniform(rng, 0, shape.max_out_degree));
    return g;
}

LabeledGameGraph recurrent_game(Rng& rng, const ModelShape& shape) {
    auto g = skeleton(rng, shape);
    const auto n = g.num_vertices();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin() + 1, order.end(), rng);

    std::vector<Player> owners(n);
    for (auto& o : owners) o = coin(rng, 0.5) ? Player::One : Player::Two;
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = order[i];
        const auto degree = uniform(rng, 1, std::max<std::size_t>(1, shape.max_out_degree));
        if (i == 0) {
            add_random_edges(rng, g, v, degree);
            continue;
        }
        g.add_edge(v, order[uniform(rng, 0, i - 1)]);
        for (std::size_t e = 1; e < degree; ++e) {
            const VertexId w = owners[v] == Player::Two ? order[uniform(rng, 0, i - 1)] : order[uniform(rng, 0, n - 1)];
            g.add_edge(v, w);
        }
    }
    return LabeledGameGraph(std::move(g), std::move(owners));
}

CnfFormula cnf(Rng& rng, std::size_t max_vars, std::size_t max_clauses, std::size_t max_width) {
    CnfFormula phi;
    phi.num_vars = uniform(rng, 1, max_vars);
    const auto clauses = uniform(rng, 1, max_clauses);
    for (std::size_t i = 0; i < clauses; ++i) phi.clauses.push_back(random_clause(rng, phi.num_vars, max_width));
    return phi;
}

QbfFormula qbf(Rng& rng, std::size_t max_vars, std::size_t max_clauses, std::size_t max_width) {
    QbfFormula phi;
    phi.matrix = cnf(rng, max_vars, max_clauses, max_width);
    for (std::size_t v = 1; v <= phi.matrix.num_vars; ++v)
        phi.prefix.emplace_back(coin(rng, 0.5) ? Quantifier::Exists : Quantifier::Forall, static_cast<int>(v));
    return phi;
}

EdgeListGraph undirected(Rng& rng, std::size_t vertices, double p) {
    EdgeListGraph h;
    for (std::size_t v = 0; v < vertices; ++v) h.vertices.push_back("u" + std::to_string(v));
    for (std::uint32_t a = 0; a < vertices; ++a)
        for (std::uint32_t b = a + 1; b < vertices; ++b)
            if (coin(rng, p)) h.edges.emplace_back(a, b);
    return h;
}

EdgeListGraph directed(Rng& rng, std::size_t vertices, double p) {
    EdgeListGraph h;
    for (std::size_t v = 0; v < vertices; ++v) h.vertices.push_back("u" + std::to_string(v));
    for (std::uint32_t a = 0; a < vertices; ++a)
        for (std::uint32_t b = 0; b < vertices; ++b)
            if (a != b && coin(rng, p)) h.edges.emplace_back(a, b);
    return h;
}

} // namespace covgame::random
