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
#include <optional>
#include <span>
#include <string>

#include "covgame/game_cover.hpp"
#include "covgame/model.hpp"

namespace covgame {

struct CertifyResult {
    bool ok = false;
    std::string reason; // empty when ok
    /// Longest play (in edges) before the goal is met, when ok.
    std::size_t max_steps = 0;

    static CertifyResult pass(std::size_t steps) { return {true, {}, steps}; }
    static CertifyResult fail(std::string why) { return {false, std::move(why), 0}; }
};

/// A valid path from v_in covering at least `m` propositions in at most `max_edges` edges.
CertifyResult certify_path(const LabeledGraph& g, std::span<const VertexId> path, std::size_t m,
                           std::size_t max_edges);

/// Every play consistent with `strategy` reaches m covered propositions: the
/// product states reachable under it have a defined, legal Player One move
/// until the goal and contain no cycle avoiding the goal.
CertifyResult certify_strategy(const LabeledGameGraph& g, const TesterStrategy& strategy, std::size_t m);

/// Same for a budgeted strategy starting with `budget` remaining steps.
CertifyResult certify_bounded_strategy(const LabeledGameGraph& g, const BoundedStrategy& strategy, std::size_t m,
                                       std::size_t budget);

/// End component containing v_in covering fewer than m propositions: Player Two
/// can keep every play inside it, so no strategy reaches m.
CertifyResult certify_end_component(const LabeledGameGraph& g, std::span<const VertexId> vertices, std::size_t m);

} // namespace covgame
