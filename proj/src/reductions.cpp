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

#include "covgame/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "covgame/error.hpp"

namespace covgame {

namespace {

[[noreturn]] void formula_fail(const std::string& what) { throw Error(ErrorKind::InvalidFormula, what); }
[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    return lines;
}

long long parse_int(const std::string& token) {
    char* end = nullptr;
    long long value = std::strtoll(token.c_str(), &end, 10);
    if (token.empty() || *end != '\0') parse_fail("expected an integer, got '" + token + "'");
    return value;
}

// Clause set after forced assignments. Clause ids are 1-based original indices.
struct Normalized {
    std::vector<int> variables; // remaining, in gadget order
    std::vector<std::vector<int>> clauses;
    std::vector<std::size_t> clause_ids;
    std::size_t offset = 0;
    std::optional<std::size_t> falsified_clause; // QBF only: a clause emptied by universal reduction
};

struct Polarity {
    bool positive = false;
    bool negative = false;
};

std::map<int, Polarity> occurrences(const std::vector<std::vector<int>>& clauses) {
    std::map<int, Polarity> occ;
    for (const auto& c : clauses) {
        for (int lit : c) {
            auto& p = occ[std::abs(lit)];
            (lit > 0 ? p.positive : p.negative) = true;
        }
    }
    return occ;
}

// Repeatedly eliminates single-polarity variables. `universal(v)` selects the
// QBF rule (delete the literal) over the satisfying assignment.
template <class IsUniversal>
Normalized normalize(const CnfFormula& phi, IsUniversal&& universal) {
    Normalized out;
    out.clauses = phi.clauses;
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) out.clause_ids.push_back(i + 1);

    for (bool changed = true; changed && !out.falsified_clause;) {
        changed = false;
        for (const auto& [var, pol] : occurrences(out.clauses)) {
            if (pol.positive && pol.negative) continue;
            const int lit = pol.positive ? var : -var;
            changed = true;
            std::vector<std::vector<int>> kept;
            std::vector<std::size_t> kept_ids;
            for (std::size_t i = 0; i < out.clauses.size(); ++i) {
                auto clause = out.clauses[i];
                const bool has = std::find(clause.begin(), clause.end(), lit) != clause.end();
                if (has && !universal(var)) {
                    ++out.offset;
                    continue;
                }
                if (has) {
                    std::erase(clause, lit);
                    if (clause.empty() && !out.falsified_clause) out.falsified_clause = out.clause_ids[i];
                }
                kept.push_back(std::move(clause));
                kept_ids.push_back(out.clause_ids[i]);
            }
            out.clauses = std::move(kept);
            out.clause_ids = std::move(kept_ids);
            break; // occurrence table is stale
        }
    }
    for (const auto& [var, pol] : occurrences(out.clauses)) out.variables.push_back(var);
    return out;
}

struct ChainGadget {
    LabeledGameGraph game;
    std::size_t remaining_clauses = 0;
};

// Shared clause-chain construction; `owner_of(var)` gives the variable vertex owner.
template <class OwnerOf>
ChainGadget build_chain_gadget(const Normalized& nf, OwnerOf&& owner_of) {
    ChainGadget out;
    auto& game = out.game;
    std::vector<PropId> clause_prop;
    for (auto id : nf.clause_ids) clause_prop.push_back(game.add_prop("C" + std::to_string(id)));
    const PropId x = game.add_prop("X");

    const auto n = nf.variables.size();
    for (int var : nf.variables) game.add_vertex("x" + std::to_string(var), PropSet{x}, owner_of(var));
    const VertexId end = game.add_vertex("x_end", PropSet{x}, Player::Two);
    game.add_edge(end, end);

    for (std::size_t j = 0; j < n; ++j) {
        const int var = nf.variables[j];
        const VertexId next = j + 1 < n ? static_cast<VertexId>(j + 1) : end;
        for (int sign : {+1, -1}) {
            VertexId prev = static_cast<VertexId>(j);
            for (std::size_t c = 0; c < nf.clauses.size(); ++c) {
                const auto& clause = nf.clauses[c];
                if (std::find(clause.begin(), clause.end(), sign * var) == clause.end()) continue;
                auto name = std::string(sign > 0 ? "" : "~") + "x" + std::to_string(var) + ".C" +
                            std::to_string(nf.clause_ids[c]);
                VertexId v = game.add_vertex(name, PropSet{clause_prop[c]}, Player::One);
                game.add_edge(prev, v);
                prev = v;
            }
            game.add_edge(prev, next);
        }
    }
    game.set_initial(n > 0 ? 0 : end);
    out.remaining_clauses = nf.clauses.size();
    return out;
}

} // namespace

void check_formula(const CnfFormula& phi) {
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        if (phi.clauses[i].empty()) formula_fail("clause " + std::to_string(i + 1) + " is empty");
        for (int lit : phi.clauses[i]) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > phi.num_vars)
                formula_fail("literal " + std::to_string(lit) + " in clause " + std::to_string(i + 1) +
                             " is out of range");
        }
    }
}

void check_formula(const QbfFormula& phi) {
    check_formula(phi.matrix);
    std::set<int> bound;
    for (const auto& [q, var] : phi.prefix) {
        if (var <= 0 || static_cast<std::size_t>(var) > phi.matrix.num_vars)
            formula_fail("quantified variable " + std::to_string(var) + " is out of range");
        if (!bound.insert(var).second) formula_fail("variable " + std::to_string(var) + " is quantified twice");
    }
    for (const auto& c : phi.matrix.clauses)
        for (int lit : c)
            if (!bound.contains(std::abs(lit))) formula_fail("variable " + std::to_string(std::abs(lit)) + " is free");
}

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula phi;
    std::optional<std::size_t> declared_vars;
    std::vector<int> current;
    for (const auto& line : split_lines(text)) {
        std::istringstream in(line);
        std::string tok;
        if (!(in >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
        if (tok == "p") {
            std::string fmt, vars, clauses;
            if (!(in >> fmt >> vars >> clauses) || fmt != "cnf") parse_fail("malformed DIMACS header: " + line);
            declared_vars = static_cast<std::size_t>(parse_int(vars));
            continue;
        }
        do {
            auto lit = parse_int(tok);
            if (lit == 0) {
                phi.clauses.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(static_cast<int>(lit));
            }
        } while (in >> tok);
    }
    if (!current.empty()) phi.clauses.push_back(std::move(current));
    std::size_t max_var = 0;
    for (const auto& c : phi.clauses)
        for (int lit : c) max_var = std::max<std::size_t>(max_var, static_cast<std::size_t>(std::abs(lit)));
    phi.num_vars = declared_vars.value_or(max_var);
    check_formula(phi);
    return phi;
}

QbfFormula parse_qdimacs(std::string_view text) {
    QbfFormula phi;
    std::string matrix_text;
    for (const auto& line : split_lines(text)) {
        std::istringstream in(line);
        std::string tok;
        if (!(in >> tok)) continue;
        if (tok == "e" || tok == "a") {
            const auto q = tok == "e" ? Quantifier::Exists : Quantifier::Forall;
            while (in >> tok) {
                auto var = parse_int(tok);
                if (var == 0) break;
                phi.prefix.emplace_back(q, static_cast<int>(var));
            }
            continue;
        }
        matrix_text += line;
        matrix_text += '\n';
    }
    phi.matrix = parse_dimacs(matrix_text);

    std::set<int> bound;
    for (const auto& [q, var] : phi.prefix) bound.insert(var);
    std::set<int> free;
    for (const auto& c : phi.matrix.clauses)
        for (int lit : c)
            if (!bound.contains(std::abs(lit))) free.insert(std::abs(lit));
    std::vector<std::pair<Quantifier, int>> prefix;
    for (int var : free) prefix.emplace_back(Quantifier::Exists, var);
    prefix.insert(prefix.end(), phi.prefix.begin(), phi.prefix.end());
    phi.prefix = std::move(prefix);
    check_formula(phi);
    return phi;
}

EdgeListGraph parse_edge_list(std::string_view text) {
    EdgeListGraph h;
    std::map<std::string, std::uint32_t> index;
    auto intern = [&](const std::string& name) {
        auto [it, fresh] = index.try_emplace(name, static_cast<std::uint32_t>(h.vertices.size()));
        if (fresh) h.vertices.push_back(name);
        return it->second;
    };
    for (auto line : split_lines(text)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream in(line);
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() > 2) parse_fail("edge-list line has more than two vertices: " + line);
        auto u = intern(tokens[0]);
        if (tokens.size() == 2) h.edges.emplace_back(u, intern(tokens[1]));
    }
    return h;
}

SatGadget sat_to_graph(const CnfFormula& phi) {
    check_formula(phi);
    auto nf = normalize(phi, [](int) { return false; });
    auto chain = build_chain_gadget(nf, [](int) { return Player::One; });

    SatGadget out;
    out.graph = chain.game.graph();
    out.offset = nf.offset;
    out.trivial = nf.variables.empty();
    out.target = chain.remaining_clauses + 1;
    out.metadata = {
        {"reduction", "sat_to_graph"},
        {"variables", phi.num_vars},
        {"clauses", phi.clauses.size()},
        {"remaining_variables", nf.variables.size()},
        {"remaining_clauses", chain.remaining_clauses},
        {"offset", out.offset},
        {"target", out.target},
        {"trivial", out.trivial},
        {"guarantee", "coverage value + offset = maxsat + 1"},
    };
    return out;
}

QbfGadget qbf_to_game(const QbfFormula& phi) {
    check_formula(phi);
    std::map<int, Quantifier> quantifier;
    std::map<int, std::size_t> position;
    for (std::size_t i = 0; i < phi.prefix.size(); ++i) {
        quantifier[phi.prefix[i].second] = phi.prefix[i].first;
        position[phi.prefix[i].second] = i;
    }
    auto nf = normalize(phi.matrix, [&](int var) { return quantifier.at(var) == Quantifier::Forall; });

    QbfGadget out;
    out.offset = nf.offset;
    if (nf.falsified_clause) {
        // Universal reduction emptied a clause: the formula is false. One
        // absorbing vertex that can never see the emptied clause's proposition.
        out.trivial = true;
        LabeledGameGraph game;
        const PropId clause = game.add_prop("C" + std::to_string(*nf.falsified_clause));
        const PropId x = game.add_prop("X");
        (void)clause;
        auto end = game.add_vertex("x_end", PropSet{x}, Player::Two);
        game.add_edge(end, end);
        game.set_initial(end);
        out.game = std::move(game);
        out.target = 2;
    } else {
        std::sort(nf.variables.begin(), nf.variables.end(),
                  [&](int a, int b) { return position.at(a) < position.at(b); });
        auto chain = build_chain_gadget(nf, [&](int var) {
            return quantifier.at(var) == Quantifier::Exists ? Player::One : Player::Two;
        });
        out.game = std::move(chain.game);
        out.trivial = nf.variables.empty();
        out.target = chain.remaining_clauses + 1;
    }
    out.metadata = {
        {"reduction", "qbf_to_game"},
        {"variables", phi.matrix.num_vars},
        {"clauses", phi.matrix.clauses.size()},
        {"remaining_variables", nf.variables.size()},
        {"offset", out.offset},
        {"target", out.target},
        {"trivial", out.trivial},
        {"guarantee", "formula true iff Player 1 can force target propositions"},
    };
    return out;
}

LabeledGameGraph vc_to_game(const EdgeListGraph& h, nlohmann::json* metadata) {
    if (h.edges.empty()) throw Error(ErrorKind::EmptyEdgeSet, "vertex-cover source graph has no edges");
    LabeledGameGraph game;
    for (const auto& name : h.vertices) {
        if (name == "$") parse_fail("vertex name '$' is reserved");
        game.add_prop(name);
    }
    const PropId dollar = game.add_prop("$");

    const VertexId start = game.add_vertex("v_in", PropSet{dollar}, Player::One);
    const auto ell = h.edges.size();
    for (std::size_t i = 0; i < ell; ++i) game.add_vertex("e" + std::to_string(i + 1), PropSet{dollar}, Player::Two);
    for (std::size_t i = 0; i < ell; ++i) {
        const auto [u, w] = h.edges[i];
        const VertexId edge = static_cast<VertexId>(1 + i);
        const VertexId first = game.add_vertex("e" + std::to_string(i + 1) + "^1", PropSet{u}, Player::One);
        const VertexId second = game.add_vertex("e" + std::to_string(i + 1) + "^2", PropSet{w}, Player::One);
        game.add_edge(start, edge);
        game.add_edge(edge, first);
        game.add_edge(edge, second);
        game.add_edge(first, start);
        game.add_edge(second, start);
    }
    game.set_initial(start);

    if (metadata) {
        std::vector<char> touched(h.vertices.size(), 0);
        for (auto [u, w] : h.edges) touched[u] = touched[w] = 1;
        nlohmann::json isolated = nlohmann::json::array();
        for (std::size_t v = 0; v < h.vertices.size(); ++v)
            if (!touched[v]) isolated.push_back(h.vertices[v]);
        *metadata = {
            {"reduction", "vc_to_game"},
            {"vertices", h.vertices.size()},
            {"edges", ell},
            {"isolated_vertices", isolated},
            {"guarantee", "coverage value = minimum vertex cover + 1"},
        };
    }
    return game;
}

HamPathGadget hampath_to_bounded(const EdgeListGraph& h, std::uint32_t start) {
    if (h.vertices.empty()) throw Error(ErrorKind::InvalidModel, "HAM-PATH source graph has no vertices");
    if (start >= h.vertices.size()) throw Error(ErrorKind::InvalidModel, "start vertex out of range");
    HamPathGadget out;
    auto& g = out.graph;
    for (const auto& name : h.vertices) g.add_prop(name);
    for (std::uint32_t v = 0; v < h.vertices.size(); ++v) g.add_vertex(h.vertices[v], PropSet{v});
    for (auto [u, w] : h.edges) g.add_edge(u, w);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.successors(v).empty()) {
            g.add_edge(v, v);
            out.patched_sinks.push_back(v);
        }
    }
    g.set_initial(start);
    out.m = h.vertices.size();
    out.k = h.vertices.size() - 1;
    nlohmann::json patched = nlohmann::json::array();
    for (auto v : out.patched_sinks) patched.push_back(h.vertices[v]);
    out.metadata = {
        {"reduction", "hampath_to_bounded"},
        {"start", h.vertices[start]},
        {"m", out.m},
        {"k", out.k},
        {"patched_sinks", patched},
        {"guarantee", "bounded coverage (m, k) holds iff a Hamiltonian path starts at start"},
    };
    return out;
}

} // namespace covgame
