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

#include <doctest.h>

#include "covgame/error.hpp"
#include "covgame/game_cover.hpp"
#include "covgame/graph_cover.hpp"
#include "covgame/oracle.hpp"
#include "covgame/reductions.hpp"
#include "covgame/validate.hpp"
#include "fixtures.hpp"

using namespace covgame;

namespace {

std::size_t chain_vertex_count(const CnfFormula& phi) {
    std::size_t total = 0;
    for (const auto& c : phi.clauses) total += c.size();
    return total;
}

bool qbf_gadget_decision(const QbfFormula& phi) {
    auto gadget = qbf_to_game(phi);
    return max_coverage_game(gadget.game, gadget.target).decision;
}

} // namespace

TEST_CASE("parse_dimacs") {
    auto phi = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n3\n-1 0\n");
    CHECK(phi.num_vars == 3);
    REQUIRE(phi.clauses.size() == 2);
    CHECK(phi.clauses[0] == std::vector<int>{1, -2});
    CHECK(phi.clauses[1] == std::vector<int>{3, -1});
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\nx 0\n"), Error);
}

TEST_CASE("parse_qdimacs binds free variables existentially outermost") {
    auto phi = parse_qdimacs("p cnf 3 1\na 2 0\ne 1 0\n1 2 3 0\n");
    REQUIRE(phi.prefix.size() == 3);
    CHECK(phi.prefix[0] == std::pair{Quantifier::Exists, 3});
    CHECK(phi.prefix[1] == std::pair{Quantifier::Forall, 2});
    CHECK(phi.prefix[2] == std::pair{Quantifier::Exists, 1});
    CHECK_THROWS_AS(parse_qdimacs("p cnf 1 1\ne 1 0\na 1 0\n1 0\n"), Error);
}

TEST_CASE("parse_edge_list") {
    auto h = parse_edge_list("# triangle\na b\nb c\nc a # closing edge\nd\n");
    CHECK(h.vertices == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(h.edges.size() == 3);
    CHECK_THROWS_AS(parse_edge_list("a b c\n"), Error);
}

TEST_CASE("sat_to_graph: two complementary binary clauses") {
    CnfFormula phi{2, {{1, 2}, {-1, -2}}};
    auto gadget = sat_to_graph(phi);
    CHECK(gadget.graph.num_vertices() == 7);
    CHECK(gadget.graph.num_vertices() == phi.num_vars + 1 + chain_vertex_count(phi));
    CHECK(gadget.offset == 0);
    CHECK(gadget.target == 3);
    CHECK(validate(gadget.graph).ok());
    CHECK(coverage_value_graph(gadget.graph).value == 3);
    CHECK(oracle::maxsat_brute(phi) == 2);
}

TEST_CASE("sat_to_graph: complementary units") {
    CnfFormula phi{1, {{1}, {-1}}};
    auto gadget = sat_to_graph(phi);
    CHECK(coverage_value_graph(gadget.graph).value + gadget.offset == 2);
    CHECK(oracle::maxsat_brute(phi) == 1);
}

TEST_CASE("sat_to_graph: forced assignments carry an offset") {
    // x3 is pure and satisfies two clauses; the rest is (x1 | x2) & (~x1 | ~x2).
    CnfFormula phi{3, {{1, 2}, {-1, -2}, {3, 1}, {3}}};
    auto gadget = sat_to_graph(phi);
    CHECK(gadget.offset == 2);
    CHECK(gadget.metadata["remaining_clauses"] == 2);
    CHECK(coverage_value_graph(gadget.graph).value + gadget.offset == oracle::maxsat_brute(phi) + 1);
}

TEST_CASE("sat_to_graph: everything forced gives the trivial instance") {
    CnfFormula phi{2, {{1}, {1, 2}}};
    auto gadget = sat_to_graph(phi);
    CHECK(gadget.trivial);
    CHECK(gadget.graph.num_vertices() == 1);
    CHECK(gadget.offset == 2);
    CHECK(coverage_value_graph(gadget.graph).value + gadget.offset == 3);
}

TEST_CASE("qbf_to_game: examples") {
    QbfFormula exists_twice{{{Quantifier::Exists, 1}}, {1, {{1}, {1}}}};
    CHECK(oracle::qbf_eval_brute(exists_twice));
    CHECK(qbf_gadget_decision(exists_twice));

    QbfFormula forall_unit{{{Quantifier::Forall, 1}}, {1, {{1}}}};
    CHECK_FALSE(oracle::qbf_eval_brute(forall_unit));
    CHECK_FALSE(qbf_gadget_decision(forall_unit));

    QbfFormula ef{{{Quantifier::Exists, 1}, {Quantifier::Forall, 2}}, {2, {{1, 2}, {1, -2}}}};
    CHECK(oracle::qbf_eval_brute(ef));
    CHECK(qbf_gadget_decision(ef));
}

TEST_CASE("qbf_to_game: ownership follows quantifiers") {
    QbfFormula phi{{{Quantifier::Forall, 2}, {Quantifier::Exists, 1}}, {2, {{1, 2}, {-1, -2}}}};
    auto gadget = qbf_to_game(phi);
    const auto& names = gadget.game.graph().vertex_names();
    CHECK(gadget.game.initial() == names.find("x2").value());
    CHECK(gadget.game.owner(names.find("x2").value()) == Player::Two);
    CHECK(gadget.game.owner(names.find("x1").value()) == Player::One);
    CHECK(gadget.game.owner(names.find("x_end").value()) == Player::Two);
    CHECK(validate(gadget.game).ok());
    // For every x2 there is an x1 with x1 != x2.
    CHECK(qbf_gadget_decision(phi) == oracle::qbf_eval_brute(phi));
    CHECK(oracle::qbf_eval_brute(phi));
}

TEST_CASE("vc_to_game: values") {
    auto k3 = vc_to_game(fixtures::k3());
    CHECK(k3.num_vertices() == 1 + 3 + 6);
    CHECK(validate(k3).ok());
    CHECK(coverage_value_game(k3).value == 3);

    auto edge = vc_to_game(fixtures::edge_list({"u", "v"}, {{0, 1}}));
    CHECK(coverage_value_game(edge).value == 2);

    auto star = vc_to_game(fixtures::edge_list({"c", "l1", "l2", "l3"}, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(coverage_value_game(star).value == 2);
}

TEST_CASE("vc_to_game: metadata and errors") {
    nlohmann::json meta;
    vc_to_game(fixtures::edge_list({"a", "b", "z"}, {{0, 1}}), &meta);
    CHECK(meta["isolated_vertices"] == nlohmann::json::array({"z"}));
    try {
        vc_to_game(fixtures::edge_list({"a"}, {}));
        FAIL("expected EmptyEdgeSet");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyEdgeSet);
    }
}

TEST_CASE("hampath_to_bounded: examples") {
    auto path = hampath_to_bounded(fixtures::edge_list({"a", "b", "c"}, {{0, 1}, {1, 2}}), 0);
    CHECK(path.m == 3);
    CHECK(path.k == 2);
    CHECK(path.patched_sinks == std::vector<VertexId>{2});
    CHECK(bounded_coverage_graph(path.graph, path.m, path.k).decision);

    auto fork = hampath_to_bounded(fixtures::edge_list({"a", "b", "c"}, {{0, 1}, {0, 2}}), 0);
    CHECK_FALSE(bounded_coverage_graph(fork.graph, fork.m, fork.k).decision);
    CHECK_FALSE(oracle::hampath_brute(fixtures::edge_list({"a", "b", "c"}, {{0, 1}, {0, 2}}), 0));

    auto k3 = fixtures::edge_list({"a", "b", "c"}, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
    for (std::uint32_t start = 0; start < 3; ++start) {
        auto gadget = hampath_to_bounded(k3, start);
        CHECK(bounded_coverage_graph(gadget.graph, gadget.m, gadget.k).decision);
    }
}
