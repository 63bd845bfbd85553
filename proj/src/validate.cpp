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

#include "covgame/validate.hpp"

#include <algorithm>

namespace covgame {

namespace {

std::string vertex_label(const LabeledGraph& g, VertexId v) {
    return v < g.num_vertices() ? "'" + g.vertex_name(v) + "'" : "#" + std::to_string(v);
}

void add(ValidationReport& r, ViolationKind kind, std::uint32_t subject, std::string message) {
    r.violations.push_back(Violation{kind, subject, std::move(message)});
}

void check_labels(ValidationReport& r, std::size_t count, std::size_t num_props,
                  auto label_of, auto name_of) {
    const PropSet universe = num_props >= 64 ? PropSet::from_bits(~std::uint64_t{0})
                                             : PropSet::from_bits((std::uint64_t{1} << num_props) - 1);
    for (std::uint32_t v = 0; v < count; ++v) {
        if (!label_of(v).subset_of(universe))
            add(r, ViolationKind::UnknownProp, v, "label of " + name_of(v) + " uses an undeclared proposition");
    }
}

} // namespace

bool ValidationReport::contains(ViolationKind kind, std::uint32_t subject) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.kind == kind && v.subject == subject; });
}

bool ValidationReport::contains(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
    std::string out;
    for (const auto& v : violations) {
        out += v.message;
        out += '\n';
    }
    return out;
}

ValidationReport validate(const LabeledGraph& g) {
    ValidationReport r;
    const auto n = g.num_vertices();
    if (n == 0) {
        add(r, ViolationKind::NoVertices, 0, "model has no vertices");
        return r;
    }
    if (g.initial() >= n)
        add(r, ViolationKind::BadInitial, g.initial(), "initial vertex #" + std::to_string(g.initial()) + " does not exist");
    for (VertexId v = 0; v < n; ++v) {
        auto out = g.successors(v);
        if (out.empty())
            add(r, ViolationKind::NonTotal, v, "vertex " + vertex_label(g, v) + " has no outgoing edge");
        for (VertexId w : out) {
            if (w >= n)
                add(r, ViolationKind::DanglingEdge, v,
                    "edge " + vertex_label(g, v) + " -> #" + std::to_string(w) + " leaves the vertex set");
        }
    }
    check_labels(r, n, g.num_props(), [&](VertexId v) { return g.label(v); },
                 [&](VertexId v) { return vertex_label(g, v); });
    return r;
}

ValidationReport validate(const LabeledGameGraph& g) {
    ValidationReport r = validate(g.graph());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (v >= g.owners().size() || g.owner(v) == Player::None)
            add(r, ViolationKind::MissingOwner, v, "vertex " + vertex_label(g.graph(), v) + " has no owner");
    }
    return r;
}

ValidationReport validate(const SystemAutomaton& sys) {
    ValidationReport r;
    const auto nq = sys.num_states();
    const auto na = sys.num_letters();
    if (nq == 0) {
        add(r, ViolationKind::NoVertices, 0, "system has no states");
        return r;
    }
    if (sys.initial() >= nq)
        add(r, ViolationKind::BadInitial, sys.initial(), "initial state #" + std::to_string(sys.initial()) + " does not exist");
    for (const auto& t : sys.transitions()) {
        if (t.from >= nq || t.to >= nq || t.letter >= na)
            add(r, ViolationKind::DanglingEdge, t.from, "transition (#" + std::to_string(t.from) + ", #" +
                                                           std::to_string(t.letter) + ", #" + std::to_string(t.to) +
                                                           ") references an unknown state or letter");
    }
    if (na == 0)
        add(r, ViolationKind::NonTotal, sys.initial(), "system has an empty alphabet");
    for (StateId q = 0; q < nq; ++q) {
        for (LetterId a = 0; a < na; ++a) {
            if (sys.successors(q, a).empty())
                add(r, ViolationKind::NonTotal, q,
                    "state '" + sys.states().name(q) + "' has no successor on '" + sys.alphabet().name(a) + "'");
        }
    }
    check_labels(r, nq, sys.num_props(), [&](StateId q) { return sys.label(q); },
                 [&](StateId q) { return "'" + sys.states().name(q) + "'"; });
    return r;
}

namespace {

template <class M>
void require_valid_impl(const M& m) {
    auto report = validate(m);
    if (!report.ok()) {
        auto text = report.to_string();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        throw Error(ErrorKind::InvalidModel, text);
    }
}

} // namespace

void require_valid(const LabeledGraph& g) { require_valid_impl(g); }
void require_valid(const LabeledGameGraph& g) { require_valid_impl(g); }
void require_valid(const SystemAutomaton& sys) { require_valid_impl(sys); }

} // namespace covgame
