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

#include <cstdint>
#include <limits>
#include <vector>

#include "covgame/model.hpp"

namespace covgame {

/// Vertex membership mask; `char` rather than `bool` to keep element access cheap.
using Mask = std::vector<char>;

Mask forward_reachable(const Adjacency& succ, VertexId from);
Adjacency reverse(const Adjacency& succ);

/// Strongly connected components (iterative Tarjan), optionally restricted to
/// the vertices set in `allowed`. Vertices outside `allowed` get kNoComponent.
struct SccDecomposition {
    static constexpr std::uint32_t kNoComponent = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> component;
    std::uint32_t count = 0;
};

SccDecomposition tarjan_scc(const Adjacency& succ, const Mask* allowed = nullptr);

/// Attractor of `target` for `player` in a turn-based arena.
///
/// rank[v] is the number of moves within which `player` can force a visit to
/// `target` from v (0 on the target), or kUnreached. Ranks come from a FIFO
/// backward sweep, so they are exact shortest forcing distances.
struct Attractor {
    static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> rank;

    bool contains(std::size_t v) const { return rank[v] != kUnreached; }
};

Attractor attractor(const Adjacency& succ, const Adjacency& pred, const std::vector<Player>& owner,
                    const Mask& target, Player player);

} // namespace covgame
