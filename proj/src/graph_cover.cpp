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

#include "covgame/graph_cover.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "covgame/graph_algo.hpp"
#include "covgame/validate.hpp"

namespace covgame {

namespace {

void check_m(const LabeledGraph& g, std::size_t m) {
    if (m > g.num_props())
        throw Error(ErrorKind::MOutOfRange,
                    "m = " + std::to_string(m) + " exceeds |AP| = " + std::to_string(g.num_props()));
}

// Product search that only keeps the visited set and the current layer.
GraphCoverageAnswer search_frontier_only(const LabeledGraph& g, std::size_t m, std::size_t depth_cap) {
    ProductState start{g.initial(), g.label(g.initial())};
    std::unordered_set<ProductState, ProductStateHash> visited{start};
    std::vector<ProductState> frontier{start}, next;
    for (std::size_t depth = 1; depth <= depth_cap && !frontier.empty(); ++depth) {
        next.clear();
        for (const auto& s : frontier) {
            for (VertexId w : g.successors(s.vertex)) {
                ProductState t{w, s.covered | g.label(w)};
                if (!visited.insert(t).second) continue;
                if (t.covered.size() >= m) return {true, std::nullopt, depth, visited.size()};
                next.push_back(t);
            }
        }
        frontier.swap(next);
    }
    return {false, std::nullopt, 0, visited.size()};
}

GraphCoverageAnswer search_with_witness(const LabeledGraph& g, std::size_t m, std::size_t depth_cap) {
    constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();
    std::vector<ProductState> states{{g.initial(), g.label(g.initial())}};
    std::vector<std::uint32_t> parent{kRoot};
    std::unordered_map<ProductState, std::uint32_t, ProductStateHash> index{{states[0], 0}};

    auto extract = [&](std::uint32_t i) {
        Path path;
        for (; i != kRoot; i = parent[i]) path.push_back(states[i].vertex);
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::size_t layer_begin = 0;
    for (std::size_t depth = 1; depth <= depth_cap; ++depth) {
        const std::size_t layer_end = states.size();
        if (layer_begin == layer_end) break;
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            const ProductState s = states[i];
            for (VertexId w : g.successors(s.vertex)) {
                ProductState t{w, s.covered | g.label(w)};
                auto [it, fresh] = index.try_emplace(t, static_cast<std::uint32_t>(states.size()));
                if (!fresh) continue;
                states.push_back(t);
                parent.push_back(static_cast<std::uint32_t>(i));
                if (t.covered.size() >= m) {
                    Path path = extract(it->second);
                    return {true, path, path.size() - 1, states.size()};
                }
            }
        }
        layer_begin = layer_end;
    }
    return {false, std::nullopt, 0, states.size()};
}

GraphCoverageAnswer search(const LabeledGraph& g, std::size_t m, std::size_t depth_cap, bool want_witness) {
    if (g.label(g.initial()).size() >= m) {
        GraphCoverageAnswer yes{true, std::nullopt, 0, 1};
        if (want_witness) yes.witness = Path{g.initial()};
        return yes;
    }
    return want_witness ? search_with_witness(g, m, depth_cap) : search_frontier_only(g, m, depth_cap);
}

} // namespace

GraphCoverageAnswer max_coverage_graph(const LabeledGraph& g, std::size_t m, GraphSearchOptions opts) {
    require_valid(g);
    check_m(g, m);
    // A shortest witness never repeats a vertex while the covered set is unchanged.
    return search(g, m, m * g.num_vertices(), opts.want_witness);
}

GraphCoverageAnswer bounded_coverage_graph(const LabeledGraph& g, std::size_t m, std::size_t k,
                                           GraphSearchOptions opts) {
    require_valid(g);
    check_m(g, m);
    return search(g, m, std::min(k, m * g.num_vertices()), opts.want_witness);
}

CoverageValue coverage_value_graph(const LabeledGraph& g) {
    require_valid(g);
    auto reach = forward_reachable(g.adjacency(), g.initial());
    PropSet reachable_labels;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (reach[v]) reachable_labels |= g.label(v);

    // Invariant: lo is attainable, every m > hi is not.
    std::size_t lo = g.label(g.initial()).size();
    std::size_t hi = reachable_labels.size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo + 1) / 2;
        if (search(g, mid, mid * g.num_vertices(), false).decision)
            lo = mid;
        else
            hi = mid - 1;
    }
    auto best = search(g, lo, lo * g.num_vertices(), true);
    return {lo, std::move(*best.witness)};
}

RecurrenceVerdict is_controllably_recurrent_graph(const LabeledGraph& g) {
    require_valid(g);
    auto forward = forward_reachable(g.adjacency(), g.initial());
    auto backward = forward_reachable(reverse(g.adjacency()), g.initial());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (forward[v] && !backward[v]) return {false, v};
    return {true, std::nullopt};
}

std::size_t max_coverage_recurrent_graph(const LabeledGraph& g) {
    auto verdict = is_controllably_recurrent_graph(g);
    if (!verdict.recurrent)
        throw Error(ErrorKind::NotRecurrent,
                    "vertex '" + g.vertex_name(*verdict.counterexample) + "' cannot return to the initial vertex");
    auto scc = tarjan_scc(g.adjacency());
    const auto home = scc.component[g.initial()];
    PropSet covered;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (scc.component[v] == home) covered |= g.label(v);
    return covered.size();
}

} // namespace covgame
