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

#include "covgame/model.hpp"

namespace covgame {

/// Compiles a system into its tester game.
///
/// Vertex layout: ids [0, |Q|) are the states (Player One, the tester picks a
/// letter); id |Q| + q*|Sigma| + a is the pair (q, a) (Player Two, the system
/// picks a successor state). Pair vertices copy the label of their state.
/// Throws Error(InvalidModel) when the system fails validation.
LabeledGameGraph compile_system(const SystemAutomaton& sys);

/// Erases ownership from a game whose Player Two vertices each have exactly
/// one successor. Throws Error(NotDeterministic) naming the first offender.
LabeledGraph game_to_graph(const LabeledGameGraph& g);

} // namespace covgame
