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
#include <functional>
#include <limits>
#include <optional>

#include "covgame/model.hpp"
#include "covgame/reductions.hpp"

/// Exhaustive reference implementations for testing. Nothing here depends on
/// the solver code.
namespace covgame::oracle {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct OracleLimits {
    /// Node expansions before Error(BudgetExceeded).
    std::uint64_t max_nodes = 200'000'000;
};

/// Enumerates paths from v_in of at most min(k, m*|V|) edges. A path is
/// abandoned when it revisits a vertex without having covered anything new
/// since the previous visit; cutting such a cycle never lowers coverage.
bool brute_force_graph(const LabeledGraph& g, std::size_t m, std::size_t k = kUnbounded,
                       const OracleLimits& limits = {});

/// Minimax over the depth-k exploration tree with leaf value |b|, without
/// memoization or a repeated-label cutoff. kUnbounded means depth |V|*(|AP|+1).
bool brute_force_game(const LabeledGameGraph& g, std::size_t m, std::size_t k = kUnbounded,
                      const OracleLimits& limits = {});

/// Most clauses satisfiable by one assignment.
std::size_t maxsat_brute(const CnfFormula& phi, const OracleLimits& limits = {});
bool qbf_eval_brute(const QbfFormula& phi, const OracleLimits& limits = {});
/// Undirected reading of `h`; a self-loop forces its vertex into the cover.
std::size_t min_vertex_cover_brute(const EdgeListGraph& h, const OracleLimits& limits = {});
/// Directed Hamiltonian path starting at `start`.
bool hampath_brute(const EdgeListGraph& h, std::uint32_t start, const OracleLimits& limits = {});

/// Player One's move given the play so far (ending at a Player One vertex) and
/// the propositions it covers. std::nullopt means the strategy is undefined there.
using Chooser = std::function<std::optional<VertexId>(const Path& play, PropSet covered)>;

struct PlayoutReport {
    std::size_t playouts = 0;
    std::size_t successes = 0;
    /// First failing play in depth-first order (Player Two successors ascending).
    std::optional<Path> counterexample;
    bool all_succeeded() const { return playouts == successes; }
};

/// Plays `chooser` against every Player Two behaviour. A playout succeeds once
/// it covers `m` propositions within `max_steps` edges and fails otherwise,
/// including when the chooser is undefined or picks a non-successor.
PlayoutReport enumerate_playouts(const LabeledGameGraph& g, const Chooser& chooser, std::size_t m,
                                 std::size_t max_steps, const OracleLimits& limits = {});

} // namespace covgame::oracle
