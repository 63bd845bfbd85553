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

#include "covgame/certify.hpp"
#include "covgame/game_cover.hpp"
#include "covgame/interchange.hpp"

/// Structured answers shared by the command line and the Python module.
namespace covgame::report {

enum class QueryKind { MaxCoverage, Value, Bounded };

struct Query {
    QueryKind kind = QueryKind::MaxCoverage;
    std::size_t m = 0;
    std::size_t k = 0; // Bounded only
    bool low_memory = false;
};

/// Solves `query` on a graph, game or system (systems are compiled first).
///
/// Result fields: kind, query, m, k (bounded), decision, value (value
/// queries), certificate ("path" | "strategy" | "end_component" | "none"),
/// and the certificate body: witness + steps_used for paths, strategy for
/// games, end_component {vertices, props} for a NO on a recurrent game.
/// Bounded game answers also carry the searched budget.
json solve(const Document& doc, const Query& query);

/// Re-checks the certificate in a `solve` result against the model.
CertifyResult certify(const Document& doc, const json& result);

json strategy_to_json(const LabeledGameGraph& g, const TesterStrategy& strategy);
TesterStrategy strategy_from_json(const LabeledGameGraph& g, const json& entries);
json bounded_strategy_to_json(const LabeledGameGraph& g, const BoundedStrategy& strategy);
BoundedStrategy bounded_strategy_from_json(const LabeledGameGraph& g, const json& entries);

/// Graphs are returned as all-Player-One games and systems are compiled.
LabeledGameGraph as_game(const Document& doc);

} // namespace covgame::report
