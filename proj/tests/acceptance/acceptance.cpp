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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
//   covgame_acceptance [path/to/covgame]
//
// With a CLI path, criterion 9 also runs the installed binary in subprocesses.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "covgame/certify.hpp"
#include "covgame/cli.hpp"
#include "covgame/error.hpp"
#include "covgame/game_cover.hpp"
#include "covgame/graph_cover.hpp"
#include "covgame/interchange.hpp"
#include "covgame/oracle.hpp"
#include "covgame/random_models.hpp"
#include "covgame/reductions.hpp"
#include "covgame/validate.hpp"

using namespace covgame;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checks << " checks, " << failures << " failures";
        if (!ok()) s << " (first: " << first_failure << ")";
        return s.str();
    }
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<std::pair<std::string, Outcome>> results;

void record(const std::string& name, Outcome outcome) {
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": " << outcome.detail << std::endl;
    results.emplace_back(name, std::move(outcome));
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

std::string where(const std::string& corpus, std::size_t index, std::size_t m, long k = -1) {
    std::ostringstream s;
    s << corpus << " #" << index << " m=" << m;
    if (k >= 0) s << " k=" << k;
    return s.str();
}

std::size_t player_two_count(const LabeledGameGraph& g) {
    return static_cast<std::size_t>(std::count(g.owners().begin(), g.owners().end(), Player::Two));
}

constexpr std::size_t kMaxK = 6;

// ---------------------------------------------------------------------------
// Corpora

std::vector<LabeledGraph> graph_corpus() {
    random::Rng rng(20240601);
    random::ModelShape shape;
    shape.min_props = 0;
    std::vector<LabeledGraph> out;
    for (int i = 0; i < 1000; ++i) out.push_back(random::graph(rng, shape));
    return out;
}

std::vector<LabeledGameGraph> game_corpus() {
    random::Rng rng(20240602);
    random::ModelShape shape;
    shape.min_props = 0;
    std::vector<LabeledGameGraph> out;
    for (int i = 0; i < 500; ++i) out.push_back(random::game(rng, shape));
    return out;
}

// ---------------------------------------------------------------------------
// Criteria 1, 7, 8 on graphs

struct GraphRun {
    Tally equivalence, witness, monotone;
    std::size_t yes = 0, no = 0;
    double seconds = 0;
};

GraphRun run_graphs(const std::vector<LabeledGraph>& corpus) {
    GraphRun run;
    const auto start = Clock::now();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        const std::size_t n = g.num_vertices();
        std::vector<bool> unbounded(g.num_props() + 1);
        std::vector<std::vector<bool>> bounded(g.num_props() + 1, std::vector<bool>(kMaxK + 1));
        for (std::size_t m = 0; m <= g.num_props(); ++m) {
            auto ans = max_coverage_graph(g, m);
            auto lean = max_coverage_graph(g, m, {.want_witness = false});
            const bool truth = oracle::brute_force_graph(g, m);
            unbounded[m] = ans.decision;
            ++(ans.decision ? run.yes : run.no);
            run.equivalence.expect(ans.decision == truth && lean.decision == truth, where("graph", i, m));
            if (ans.decision) {
                auto c = certify_path(g, *ans.witness, m, m * n);
                run.witness.expect(c.ok, where("graph", i, m) + ": " + c.reason);
            }
            for (std::size_t k = 0; k <= kMaxK; ++k) {
                auto b = bounded_coverage_graph(g, m, k);
                bounded[m][k] = b.decision;
                run.equivalence.expect(b.decision == oracle::brute_force_graph(g, m, k), where("graph", i, m, k));
                if (b.decision) {
                    auto c = certify_path(g, *b.witness, m, k);
                    run.witness.expect(c.ok, where("graph", i, m, k) + ": " + c.reason);
                }
                run.monotone.expect(!b.decision || ans.decision, where("graph", i, m, k) + " bounded without unbounded");
            }
            for (std::size_t k : {m * n, m * n + 1, m * n + 7})
                run.monotone.expect(bounded_coverage_graph(g, m, k).decision == ans.decision,
                                    where("graph", i, m, static_cast<long>(k)) + " saturation");
        }
        for (std::size_t m = 1; m <= g.num_props(); ++m) {
            run.monotone.expect(!unbounded[m] || unbounded[m - 1], where("graph", i, m) + " monotone in m");
            for (std::size_t k = 0; k <= kMaxK; ++k)
                run.monotone.expect(!bounded[m][k] || bounded[m - 1][k], where("graph", i, m, k) + " monotone in m");
        }
        for (std::size_t m = 0; m <= g.num_props(); ++m)
            for (std::size_t k = 1; k <= kMaxK; ++k)
                run.monotone.expect(!bounded[m][k - 1] || bounded[m][k], where("graph", i, m, k) + " monotone in k");

        auto value = coverage_value_graph(g);
        const auto expected = static_cast<std::size_t>(std::find(unbounded.begin(), unbounded.end(), false) -
                                                       unbounded.begin()) - 1;
        run.equivalence.expect(value.value == expected, where("graph", i, value.value) + " coverage value");
    }
    run.seconds = seconds_since(start);
    return run;
}

// ---------------------------------------------------------------------------
// Criteria 2, 3, 7, 8 on games

struct GameRun {
    Tally equivalence, strategies, witness, monotone;
    std::size_t yes = 0, no = 0;
    std::size_t playouts = 0;
    double seconds = 0;
};

oracle::Chooser follow(const TesterStrategy& strategy) {
    return [&strategy](const Path& play, PropSet covered) -> std::optional<VertexId> {
        auto it = strategy.find({play.back(), covered});
        if (it == strategy.end()) return std::nullopt;
        return it->second;
    };
}

oracle::Chooser follow(const BoundedStrategy& strategy, std::size_t budget) {
    return [&strategy, budget](const Path& play, PropSet covered) -> std::optional<VertexId> {
        const std::size_t used = play.size() - 1;
        if (used > budget) return std::nullopt;
        auto it = strategy.find({play.back(), covered, budget - used});
        if (it == strategy.end()) return std::nullopt;
        return it->second;
    };
}

GameRun run_games(const std::vector<LabeledGameGraph>& corpus) {
    GameRun run;
    const auto start = Clock::now();
    GameOptions memo, low;
    low.low_memory = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& g = corpus[i];
        const std::size_t n = g.num_vertices();
        const bool small_adversary = player_two_count(g) <= 5;
        const std::size_t horizon = n * (g.num_props() + 1);
        std::vector<bool> unbounded(g.num_props() + 1);
        std::vector<std::vector<bool>> bounded(g.num_props() + 1, std::vector<bool>(kMaxK + 1));

        for (std::size_t m = 0; m <= g.num_props(); ++m) {
            auto ans = max_coverage_game(g, m);
            unbounded[m] = ans.decision;
            ++(ans.decision ? run.yes : run.no);
            run.equivalence.expect(ans.decision == oracle::brute_force_game(g, m), where("game", i, m));
            if (ans.decision) {
                auto c = certify_strategy(g, ans.strategy, m);
                run.witness.expect(c.ok && c.max_steps <= m * n, where("game", i, m) + " strategy length " + c.reason);
                if (small_adversary) {
                    auto report = oracle::enumerate_playouts(g, follow(ans.strategy), m, m * n);
                    run.playouts += report.playouts;
                    run.strategies.expect(report.all_succeeded(), where("game", i, m));
                }
            }
            for (std::size_t k = 0; k <= kMaxK; ++k) {
                auto b = bounded_coverage_game(g, m, k, memo);
                auto t = bounded_coverage_game(g, m, k, low);
                bounded[m][k] = b.decision;
                const bool truth = oracle::brute_force_game(g, m, k);
                run.equivalence.expect(b.decision == truth && t.decision == truth, where("game", i, m, k));
                for (const auto* a : {&b, &t}) {
                    if (!a->decision) continue;
                    auto c = certify_bounded_strategy(g, a->strategy, m, a->budget);
                    run.witness.expect(c.ok && a->budget <= k && c.max_steps <= k,
                                       where("game", i, m, k) + " bounded strategy " + c.reason);
                    if (small_adversary) {
                        auto report = oracle::enumerate_playouts(g, follow(a->strategy, a->budget), m, k);
                        run.playouts += report.playouts;
                        run.strategies.expect(report.all_succeeded(), where("game", i, m, k) + " bounded");
                    }
                }
                run.monotone.expect(!b.decision || ans.decision, where("game", i, m, k) + " bounded without unbounded");
            }
            for (std::size_t k : {horizon, horizon + 3})
                run.monotone.expect(bounded_coverage_game(g, m, k, memo).decision == ans.decision,
                                    where("game", i, m, static_cast<long>(k)) + " saturation");
        }
        for (std::size_t m = 1; m <= g.num_props(); ++m) {
            run.monotone.expect(!unbounded[m] || unbounded[m - 1], where("game", i, m) + " monotone in m");
            for (std::size_t k = 0; k <= kMaxK; ++k)
                run.monotone.expect(!bounded[m][k] || bounded[m - 1][k], where("game", i, m, k) + " monotone in m");
        }
        for (std::size_t m = 0; m <= g.num_props(); ++m)
            for (std::size_t k = 1; k <= kMaxK; ++k)
                run.monotone.expect(!bounded[m][k - 1] || bounded[m][k], where("game", i, m, k) + " monotone in k");

        auto value = coverage_value_game(g);
        const auto expected = static_cast<std::size_t>(std::find(unbounded.begin(), unbounded.end(), false) -
                                                       unbounded.begin()) - 1;
        run.equivalence.expect(value.value == expected, where("game", i, value.value) + " coverage value");
    }
    run.seconds = seconds_since(start);
    return run;
}

// ---------------------------------------------------------------------------
// Criterion 4

// Strongly connected graph with n vertices: a cycle plus two chords per vertex.
LabeledGraph ladder_graph(std::size_t n, random::Rng& rng) {
    LabeledGraph g;
    for (int p = 0; p < 16; ++p) g.add_prop("p" + std::to_string(p));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<PropId> prop(0, 15);
    for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), PropSet{prop(rng)});
    for (std::size_t v = 0; v < n; ++v) {
        g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n));
        g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(pick(rng)));
        g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(pick(rng)));
    }
    g.set_initial(0);
    return g;
}

Outcome criterion_recurrent_fast_path() {
    Tally agree;
    random::Rng rng(20240604);
    random::ModelShape shape;
    shape.max_vertices = 8;
    shape.max_props = 4;
    for (int i = 0; i < 300; ++i) {
        auto g = random::strongly_connected_graph(rng, shape);
        agree.expect(max_coverage_recurrent_graph(g) == coverage_value_graph(g).value,
                     where("strongly connected graph", i, 0));
    }

    const std::vector<std::size_t> sizes{20'000, 40'000, 80'000, 140'000, 200'000};
    std::vector<double> x, t;
    for (std::size_t n : sizes) {
        auto g = ladder_graph(n, rng);
        double best = 1e9;
        for (int rep = 0; rep < 7; ++rep) {
            const auto start = Clock::now();
            volatile auto value = max_coverage_recurrent_graph(g);
            (void)value;
            best = std::min(best, seconds_since(start));
        }
        x.push_back(static_cast<double>(g.num_vertices() + g.num_edges()));
        t.push_back(best);
    }
    double sxx = 0, sxt = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += x[i] * x[i];
        sxt += x[i] * t[i];
    }
    const double slope = sxt / sxx;
    bool monotone = true, linear = true;
    std::ostringstream ladder;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ratio = t[i] / (slope * x[i]);
        if (i > 0 && t[i] < t[i - 1]) monotone = false;
        if (ratio > 3.0 || ratio < 1.0 / 3.0) linear = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%.0f:%.2fms(x%.2f)", i ? " " : "", x[i], t[i] * 1e3, ratio);
        ladder << buf;
    }
    std::ostringstream detail;
    detail << "300 graphs " << agree.summary() << "; ladder |V|+|E| " << ladder.str()
           << (monotone ? "; monotone" : "; NOT monotone") << (linear ? ", within 3x of linear fit" : ", NOT linear");
    return {agree.ok() && monotone && linear, detail.str()};
}

// ---------------------------------------------------------------------------
// Criterion 5

Outcome criterion_end_components() {
    Tally tally;
    random::Rng rng(20240605);
    random::ModelShape shape;
    shape.max_vertices = 8;
    shape.max_props = 4;
    for (int i = 0; i < 200; ++i) {
        auto g = random::recurrent_game(rng, shape);
        tally.expect(is_controllably_recurrent_game(g).recurrent, where("recurrent game", i, 0) + " not recurrent");
        const auto value = coverage_value_game(g).value;
        const auto ec = min_cover_end_component(g);
        tally.expect(ec.covered.size() == value, where("recurrent game", i, value) + " end component count");
        tally.expect(verify_end_component_witness(g, ec.vertices, value + 1), where("recurrent game", i, value + 1));
        tally.expect(min_safety_value(g) == value, where("recurrent game", i, value) + " safety value");
    }
    return {tally.ok(), "200 recurrent games, " + tally.summary()};
}

// ---------------------------------------------------------------------------
// Criterion 6

EdgeListGraph from_mask(std::size_t n, std::uint32_t mask) {
    EdgeListGraph h;
    for (std::size_t v = 0; v < n; ++v) h.vertices.push_back("u" + std::to_string(v));
    std::uint32_t bit = 0;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b, ++bit)
            if (mask >> bit & 1) h.edges.emplace_back(a, b);
    return h;
}

EdgeListGraph star(std::size_t leaves) {
    EdgeListGraph h{{"c"}, {}};
    for (std::uint32_t i = 1; i <= leaves; ++i) {
        h.vertices.push_back("l" + std::to_string(i));
        h.edges.emplace_back(0, i);
    }
    return h;
}

Outcome criterion_reductions() {
    random::Rng rng(20240606);
    Tally sat, qbf, vc, ham;
    for (int i = 0; i < 500; ++i) {
        auto phi = random::cnf(rng, 5, 8);
        auto gadget = sat_to_graph(phi);
        sat.expect(validate(gadget.graph).ok(), where("cnf", i, 0) + " invalid gadget");
        sat.expect(coverage_value_graph(gadget.graph).value + gadget.offset == oracle::maxsat_brute(phi) + 1,
                   where("cnf", i, 0));
    }
    for (int i = 0; i < 200; ++i) {
        auto phi = random::qbf(rng, 4, 6);
        auto gadget = qbf_to_game(phi);
        qbf.expect(validate(gadget.game).ok(), where("qbf", i, 0) + " invalid gadget");
        qbf.expect(max_coverage_game(gadget.game, gadget.target).decision == oracle::qbf_eval_brute(phi),
                   where("qbf", i, gadget.target));
    }
    std::vector<EdgeListGraph> family;
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::uint32_t mask = 1; mask < (1u << (n * (n - 1) / 2)); ++mask) family.push_back(from_mask(n, mask));
    family.push_back(from_mask(3, 0b111));
    family.push_back(from_mask(4, 0b111111));
    for (std::size_t leaves : {3, 4, 5}) family.push_back(star(leaves));
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto game = vc_to_game(family[i]);
        vc.expect(validate(game).ok(), where("vc", i, 0) + " invalid gadget");
        vc.expect(coverage_value_game(game).value == oracle::min_vertex_cover_brute(family[i]) + 1,
                  where("vc", i, 0));
        vc.expect(is_controllably_recurrent_game(game).recurrent, where("vc", i, 0) + " not recurrent");
    }
    for (int i = 0; i < 200; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        const double p = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
        auto h = random::directed(rng, n, p);
        const auto start = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(n - 1))(rng);
        auto gadget = hampath_to_bounded(h, start);
        ham.expect(validate(gadget.graph).ok(), where("digraph", i, 0) + " invalid gadget");
        ham.expect(bounded_coverage_graph(gadget.graph, gadget.m, gadget.k).decision == oracle::hampath_brute(h, start),
                   where("digraph", i, gadget.m, static_cast<long>(gadget.k)));
    }
    std::ostringstream s;
    s << "(a) 500 CNFs " << sat.summary() << "; (b) 200 QBFs " << qbf.summary() << "; (c) " << family.size()
      << " undirected graphs " << vc.summary() << "; (d) 200 digraphs " << ham.summary();
    return {sat.ok() && qbf.ok() && vc.ok() && ham.ok(), s.str()};
}

// ---------------------------------------------------------------------------
// Criterion 9

std::string run_cli(const std::vector<std::string>& args) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
}

std::string run_process(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return "<popen failed>";
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    const int status = pclose(pipe);
    return std::to_string(status) + "\n" + output;
}

Outcome criterion_determinism(const std::vector<LabeledGraph>& graphs, const std::vector<LabeledGameGraph>& games,
                              const std::string& binary) {
    const fs::path dir = fs::temp_directory_path() / ("covgame_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::vector<std::pair<fs::path, std::size_t>> files; // path, |AP|
    auto write = [&](const json& doc, std::size_t props) {
        fs::path p = dir / ("model" + std::to_string(files.size()) + ".json");
        std::ofstream(p) << doc.dump();
        files.emplace_back(p, props);
    };
    for (const auto& g : graphs) write(render(g), g.num_props());
    for (const auto& g : games) write(render(g), g.num_props());

    Tally tally;
    std::size_t runs = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const auto& [path, props] = files[i];
        std::vector<std::vector<std::string>> commands{{"solve", path.string(), "--value", "--json"},
                                                       {"bounded", path.string(), "--m", std::to_string(props),
                                                        "--k", "4", "--json"}};
        for (std::size_t m = 0; m <= props; ++m)
            commands.push_back({"solve", path.string(), "--m", std::to_string(m), "--json"});
        for (const auto& args : commands) {
            runs += 2;
            tally.expect(run_cli(args) == run_cli(args), "in-process " + args[0] + " on model " + std::to_string(i));
        }
        if (!binary.empty()) {
            const std::string command = "'" + binary + "' solve '" + path.string() + "' --value --json 2>&1";
            runs += 2;
            tally.expect(run_process(command) == run_process(command), "subprocess on model " + std::to_string(i));
        }
    }
    fs::remove_all(dir);
    std::ostringstream s;
    s << files.size() << " models, " << runs << " solve --json runs" << (binary.empty() ? " (in-process only)" : "")
      << ", " << tally.summary();
    return {tally.ok(), s.str()};
}

Outcome guarded(const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
    }
}

} // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    const auto graphs = graph_corpus();
    const auto games = game_corpus();

    GraphRun graph_run;
    GameRun game_run;
    record("C1 oracle equivalence, graphs", guarded([&] {
               graph_run = run_graphs(graphs);
               const bool fast = graph_run.seconds < 60;
               return Outcome{graph_run.equivalence.ok() && fast,
                              "1000 graphs (" + std::to_string(graph_run.yes) + " yes / " +
                                  std::to_string(graph_run.no) + " no unbounded), " +
                                  graph_run.equivalence.summary() + ", " +
                                  fmt_seconds(graph_run.seconds) + " (limit 60 s)"};
           }));
    record("C2 oracle equivalence, games", guarded([&] {
               game_run = run_games(games);
               const bool fast = game_run.seconds < 120;
               return Outcome{game_run.equivalence.ok() && fast,
                              "500 games (" + std::to_string(game_run.yes) + " yes / " +
                                  std::to_string(game_run.no) + " no unbounded), " + game_run.equivalence.summary() +
                                  ", " + fmt_seconds(game_run.seconds) +
                                  " (limit 120 s)"};
           }));
    record("C3 strategy soundness", guarded([&] {
               std::ostringstream s;
               s << game_run.strategies.summary() << ", " << game_run.playouts << " adversary playouts";
               return Outcome{game_run.strategies.ok() && game_run.strategies.checks > 0, s.str()};
           }));
    record("C4 recurrent-graph fast path", guarded(criterion_recurrent_fast_path));
    record("C5 end-component equivalence", guarded(criterion_end_components));
    record("C6 reduction correctness", guarded(criterion_reductions));
    record("C7 witness bounds", guarded([&] {
               Tally all = graph_run.witness;
               all.checks += game_run.witness.checks;
               if (all.ok()) all.first_failure = game_run.witness.first_failure;
               all.failures += game_run.witness.failures;
               return Outcome{all.ok() && all.checks > 0, "graph and game witnesses, " + all.summary()};
           }));
    record("C8 monotonicity and saturation", guarded([&] {
               Tally all = graph_run.monotone;
               all.checks += game_run.monotone.checks;
               if (all.ok()) all.first_failure = game_run.monotone.first_failure;
               all.failures += game_run.monotone.failures;
               return Outcome{all.ok() && all.checks > 0, all.summary()};
           }));
    record("C9 determinism", guarded([&] { return criterion_determinism(graphs, games, binary); }));

    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.second.pass; });
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
