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
#include <string>
#include <vector>

#include "covgame/model.hpp"

namespace covgame {

enum class ViolationKind {
    NoVertices,
    BadInitial,
    NonTotal,      // vertex without successors, or (state, letter) without successors
    DanglingEdge,  // edge/transition endpoint out of range
    MissingOwner,
    UnknownProp,   // label mentions a proposition outside the universe
};

struct Violation {
    ViolationKind kind;
    std::uint32_t subject = 0; // vertex / state id
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool contains(ViolationKind kind, std::uint32_t subject) const;
    bool contains(ViolationKind kind) const;
    /// One violation per line.
    std::string to_string() const;
};

ValidationReport validate(const LabeledGraph& g);
ValidationReport validate(const LabeledGameGraph& g);
ValidationReport validate(const SystemAutomaton& sys);

/// Throws Error(InvalidModel) carrying the report when validation fails.
void require_valid(const LabeledGraph& g);
void require_valid(const LabeledGameGraph& g);
void require_valid(const SystemAutomaton& sys);

} // namespace covgame
