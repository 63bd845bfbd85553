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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "covgame/model.hpp"

namespace covgame {

/// CNF over variables 1..num_vars; literals are signed variable indices (DIMACS style).
struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

enum class Quantifier { Exists, Forall };

struct QbfFormula {
    std::vector<std::pair<Quantifier, int>> prefix; // outermost first
    CnfFormula matrix;
};

/// Plain vertex/edge list; read as undirected or directed depending on the consumer.
struct EdgeListGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// Throws Error(InvalidFormula) on empty clauses or out-of-range literals.
void check_formula(const CnfFormula& phi);
/// Additionally requires every matrix variable to be bound exactly once.
void check_formula(const QbfFormula& phi);

/// DIMACS `p cnf` input; `c` lines are comments.
CnfFormula parse_dimacs(std::string_view text);
/// QDIMACS: `p cnf` header, then `e`/`a` prefix lines, then clauses.
/// Variables missing from the prefix are bound existentially outermost.
QbfFormula parse_qdimacs(std::string_view text);
/// One `u v` edge per line; a single token declares a vertex; `#` starts a comment.
EdgeListGraph parse_edge_list(std::string_view text);

struct SatGadget {
    LabeledGraph graph;
    /// Number of clauses left after forced assignments, plus one.
    std::size_t target = 1;
    /// Clauses satisfied by forced assignments: coverage value + offset = maxsat + 1.
    std::size_t offset = 0;
    /// All clauses were satisfied during normalization; the graph is one X-labeled loop.
    bool trivial = false;
    nlohmann::json metadata;
};

/// Clause-chain gadget: variable vertices x1..x(n+1) labeled {X}, a chain of
/// clause vertices per literal polarity visited in ascending clause order, and
/// an absorbing x(n+1). Variables occurring with a single polarity are first
/// assigned to satisfy their clauses, repeatedly, so every remaining variable
/// has two nonempty chains.
SatGadget sat_to_graph(const CnfFormula& phi);

struct QbfGadget {
    LabeledGameGraph game;
    /// The formula is true iff Player One can force `target` propositions.
    std::size_t target = 1;
    std::size_t offset = 0;
    bool trivial = false;
    nlohmann::json metadata;
};

/// The clause-chain gadget with variable vertices owned by their quantifier
/// (exists -> Player One, forall -> Player Two), x(n+1) owned by Player Two and
/// chain vertices by Player One. Pure existential literals are set to satisfy
/// their clauses and pure universal literals are deleted from the matrix.
QbfGadget qbf_to_game(const QbfFormula& phi);

/// Vertex-cover game: Player One picks an edge from v_in, Player Two picks one
/// of its endpoints, and play returns to v_in. Coverage value = min vertex cover + 1.
/// Throws Error(EmptyEdgeSet) when `h` has no edges.
LabeledGameGraph vc_to_game(const EdgeListGraph& h, nlohmann::json* metadata = nullptr);

struct HamPathGadget {
    LabeledGraph graph;
    std::size_t m = 0;
    std::size_t k = 0;
    std::vector<VertexId> patched_sinks;
    nlohmann::json metadata;
};

/// State-coverage instance of `h` from `start` with m = n and k = n - 1; sinks get self-loops.
HamPathGadget hampath_to_bounded(const EdgeListGraph& h, std::uint32_t start);

} // namespace covgame
