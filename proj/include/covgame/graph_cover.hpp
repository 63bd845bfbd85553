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
#include <functional>
#include <optional>

#include "covgame/model.hpp"

namespace covgame {

/// A vertex paired with the propositions covered on the way to it.
struct ProductState {
    VertexId vertex = 0;
    PropSet covered;
    auto operator<=>(const ProductState&) const = default;
};

struct ProductStateHash {
    std::size_t operator()(const ProductState& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.covered.bits() * 0x9E3779B97F4A7C15ULL ^ s.vertex);
    }
};

struct GraphCoverageAnswer {
    bool decision = false;
    std::optional<Path> witness;
    /// Edges in the witness (0 when there is none).
    std::size_t steps_used = 0;
    std::size_t product_states = 0;
};

struct GraphSearchOptions {
    /// Without witnesses the search keeps only the visited set and the current
    /// frontier, no predecessor links.
    bool want_witness = true;
};

/// Is there a path from the initial vertex covering at least `m` propositions?
///
/// Breadth-first search over (vertex, covered) states; successors are expanded
/// in ascending vertex id and the first goal state found is returned, so the
/// witness is a shortest one and has at most m*|V| edges.
GraphCoverageAnswer max_coverage_graph(const LabeledGraph& g, std::size_t m, GraphSearchOptions opts = {});

/// Same question restricted to prefixes of at most `k` edges.
GraphCoverageAnswer bounded_coverage_graph(const LabeledGraph& g, std::size_t m, std::size_t k,
                                           GraphSearchOptions opts = {});

struct CoverageValue {
    std::size_t value = 0;
    Path witness;
};

/// Largest m for which max_coverage_graph answers yes, with a witness attaining it.
CoverageValue coverage_value_graph(const LabeledGraph& g);

struct RecurrenceVerdict {
    bool recurrent = false;
    std::optional<VertexId> counterexample;
};

/// Every vertex reachable from the initial vertex can reach it back.
/// The counterexample is the lowest-id reachable vertex that cannot.
RecurrenceVerdict is_controllably_recurrent_graph(const LabeledGraph& g);

/// Label count of the initial vertex's SCC. Linear time; throws
/// Error(NotRecurrent) when the graph is not controllably recurrent.
std::size_t max_coverage_recurrent_graph(const LabeledGraph& g);

} // namespace covgame
