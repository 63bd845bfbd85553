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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "covgame/model.hpp"

namespace covgame {

using json = nlohmann::json;

enum class ModelKind { Graph, Game, System };

std::string_view to_string(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view text);

using AnyModel = std::variant<LabeledGraph, LabeledGameGraph, SystemAutomaton>;

/// A model plus its free-form `metadata` block (null when absent).
struct Document {
    AnyModel model;
    json metadata;

    ModelKind kind() const { return static_cast<ModelKind>(model.index()); }
};

/// `states` => system; any vertex carrying `owner` => game; otherwise graph.
ModelKind infer_kind(const json& doc);

/// Parses the interchange format. Unknown vertex/prop names and malformed
/// fields raise Error(Parse); structural problems (sinks, missing owners) are
/// left for validate().
Document parse_document(const json& doc, std::optional<ModelKind> force = std::nullopt);
Document parse_document_text(std::string_view text, std::optional<ModelKind> force = std::nullopt);

json render(const LabeledGraph& g);
json render(const LabeledGameGraph& g);
json render(const SystemAutomaton& sys);
/// Renders the model and attaches `metadata` when it is not null.
json render(const Document& doc);

std::string to_dot(const LabeledGraph& g);
std::string to_dot(const LabeledGameGraph& g);

/// Adds a self-loop to every vertex without successors; returns the patched vertices.
std::vector<VertexId> patch_self_loops(LabeledGraph& g);

/// Vertex names of a path.
json path_to_json(const LabeledGraph& g, const Path& path);
Path path_from_json(const LabeledGraph& g, const json& names);
json props_to_json(const LabeledGraph& g, PropSet s);
PropSet props_from_json(const LabeledGraph& g, const json& names);
VertexId vertex_from_json(const LabeledGraph& g, const json& name);

} // namespace covgame
