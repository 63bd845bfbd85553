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
#include "covgame/graph_cover.hpp"
#include "fixtures.hpp"

using namespace covgame;

TEST_CASE("max_coverage_graph: triangle") {
    auto ans = max_coverage_graph(fixtures::triangle(), 3);
    CHECK(ans.decision);
    REQUIRE(ans.witness);
    CHECK(*ans.witness == Path{0, 1, 2});
    CHECK(ans.steps_used == 2);
}

TEST_CASE("max_coverage_graph: branch graph cannot cover both leaves") {
    auto ans = max_coverage_graph(fixtures::branch(), 2);
    CHECK_FALSE(ans.decision);
    CHECK_FALSE(ans.witness);
}

TEST_CASE("max_coverage_graph: m = 0 is witnessed by the initial vertex") {
    for (const auto& g : {fixtures::triangle(), fixtures::branch()}) {
        auto ans = max_coverage_graph(g, 0);
        CHECK(ans.decision);
        REQUIRE(ans.witness);
        CHECK(*ans.witness == Path{g.initial()});
    }
}

TEST_CASE("max_coverage_graph: m above |AP|") {
    try {
        max_coverage_graph(fixtures::triangle(), 4);
        FAIL("expected MOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MOutOfRange);
    }
}

TEST_CASE("max_coverage_graph: without witness keeps the decision") {
    auto ans = max_coverage_graph(fixtures::triangle(), 3, {.want_witness = false});
    CHECK(ans.decision);
    CHECK_FALSE(ans.witness);
    CHECK(ans.steps_used == 2);
}

TEST_CASE("coverage_value_graph") {
    CHECK(coverage_value_graph(fixtures::triangle()).value == 3);
    auto branch = coverage_value_graph(fixtures::branch());
    CHECK(branch.value == 1);
    CHECK(path_check(fixtures::branch(), branch.witness));
    CHECK(cover_of(fixtures::branch(), branch.witness).size() == 1);
    CHECK(coverage_value_graph(fixtures::self_loop()).value == 0);
}

TEST_CASE("bounded_coverage_graph: triangle") {
    CHECK(bounded_coverage_graph(fixtures::triangle(), 3, 2).decision);
    CHECK_FALSE(bounded_coverage_graph(fixtures::triangle(), 3, 1).decision);
    CHECK(bounded_coverage_graph(fixtures::triangle(), 1, 0).decision);
    CHECK_FALSE(bounded_coverage_graph(fixtures::triangle(), 2, 0).decision);
}

TEST_CASE("bounded witness respects k") {
    auto ans = bounded_coverage_graph(fixtures::triangle(), 2, 5);
    REQUIRE(ans.witness);
    CHECK(ans.witness->size() - 1 <= 5);
    CHECK(*ans.witness == Path{0, 1});
}

TEST_CASE("is_controllably_recurrent_graph") {
    CHECK(is_controllably_recurrent_graph(fixtures::triangle()).recurrent);
    auto branch = is_controllably_recurrent_graph(fixtures::branch());
    CHECK_FALSE(branch.recurrent);
    REQUIRE(branch.counterexample);
    CHECK(*branch.counterexample == 1); // t

    // The reachable part a <-> b is one SCC; the absorbing d is unreachable.
    LabeledGraph g;
    auto a = g.add_vertex("a"), b = g.add_vertex("b"), d = g.add_vertex("d");
    g.add_edge(a, b);
    g.add_edge(b, a);
    g.add_edge(d, d);
    g.add_edge(d, a);
    g.set_initial(a);
    CHECK(is_controllably_recurrent_graph(g).recurrent);
}

TEST_CASE("max_coverage_recurrent_graph") {
    CHECK(max_coverage_recurrent_graph(fixtures::triangle()) == 3);
    CHECK(max_coverage_recurrent_graph(fixtures::self_loop(PropSet{0}, true)) == 1);
    try {
        max_coverage_recurrent_graph(fixtures::branch());
        FAIL("expected NotRecurrent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRecurrent);
    }
}

TEST_CASE("solvers reject invalid graphs") {
    LabeledGraph g;
    g.add_vertex("a");
    g.set_initial(0);
    try {
        max_coverage_graph(g, 0);
        FAIL("expected InvalidModel");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidModel);
    }
}
