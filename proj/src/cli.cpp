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

#include "covgame/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "covgame/error.hpp"
#include "covgame/graph_cover.hpp"
#include "covgame/oracle.hpp"
#include "covgame/random_models.hpp"
#include "covgame/reductions.hpp"
#include "covgame/report.hpp"
#include "covgame/system.hpp"
#include "covgame/validate.hpp"

namespace covgame::cli {

namespace {

struct Globals {
    bool json = false;
    bool low_memory = false;
    bool patch_self_loops = false;
    std::uint64_t seed = 0;
    std::string kind;
};

class Runner {
public:
    Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    Globals globals;

    std::string read_text(const std::string& path) {
        if (path == "-") return {std::istreambuf_iterator<char>(in_), {}};
        std::ifstream file(path, std::ios::binary);
        if (!file) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
        return {std::istreambuf_iterator<char>(file), {}};
    }

    Document load(const std::string& path, bool check = true) {
        std::optional<ModelKind> force;
        if (!globals.kind.empty()) force = parse_model_kind(globals.kind);
        Document doc = parse_document_text(read_text(path), force);
        if (globals.patch_self_loops) {
            std::vector<VertexId> patched;
            if (auto* g = std::get_if<LabeledGraph>(&doc.model)) patched = patch_self_loops(*g);
            if (auto* g = std::get_if<LabeledGameGraph>(&doc.model)) patched = patch_self_loops(g->graph());
            if (!patched.empty() && !globals.json) err_ << "note: added self-loops to " << patched.size() << " sinks\n";
        }
        if (check) std::visit([](const auto& model) { require_valid(model); }, doc.model);
        return doc;
    }

    void emit(const json& payload) { out_ << payload.dump(2) << '\n'; }

    int solve(const std::string& path, const report::Query& query) {
        auto doc = load(path);
        auto result = report::solve(doc, query);
        if (globals.json)
            emit(result);
        else
            print_answer(result);
        if (query.kind == report::QueryKind::Value) return kYes;
        return result["decision"].get<bool>() ? kYes : kNo;
    }

    int recurrent(const std::string& path) {
        auto doc = load(path);
        json result{{"kind", to_string(doc.kind())}};
        RecurrenceVerdict verdict;
        std::string counterexample;
        if (auto* g = std::get_if<LabeledGraph>(&doc.model)) {
            verdict = is_controllably_recurrent_graph(*g);
            if (verdict.recurrent) result["value"] = max_coverage_recurrent_graph(*g);
            if (verdict.counterexample) counterexample = g->vertex_name(*verdict.counterexample);
        } else {
            auto game = report::as_game(doc);
            verdict = is_controllably_recurrent_game(game);
            if (verdict.counterexample) counterexample = game.vertex_name(*verdict.counterexample);
        }
        result["recurrent"] = verdict.recurrent;
        if (!counterexample.empty()) result["counterexample"] = counterexample;
        if (globals.json) {
            emit(result);
        } else {
            out_ << "recurrent: " << (verdict.recurrent ? "yes" : "no") << '\n';
            if (!counterexample.empty()) out_ << "counterexample: " << counterexample << '\n';
            if (result.contains("value")) out_ << "value: " << result["value"] << '\n';
        }
        return verdict.recurrent ? kYes : kNo;
    }

    int compile(const std::string& path) {
        auto doc = load(path);
        const auto* sys = std::get_if<SystemAutomaton>(&doc.model);
        if (!sys) throw Error(ErrorKind::Parse, "compile expects a system model");
        emit(render(compile_system(*sys)));
        return kYes;
    }

    int gadget(const std::string& type, const std::string& path, const std::string& start) {
        const std::string text = read_text(path);
        Document doc{LabeledGraph{}, {}};
        if (type == "sat") {
            auto g = sat_to_graph(parse_dimacs(text));
            doc = {std::move(g.graph), std::move(g.metadata)};
        } else if (type == "qbf") {
            auto g = qbf_to_game(parse_qdimacs(text));
            doc = {std::move(g.game), std::move(g.metadata)};
        } else if (type == "vc") {
            json meta;
            auto game = vc_to_game(parse_edge_list(text), &meta);
            doc = {std::move(game), std::move(meta)};
        } else {
            auto h = parse_edge_list(text);
            std::uint32_t from = 0;
            if (!start.empty()) {
                auto it = std::find(h.vertices.begin(), h.vertices.end(), start);
                if (it == h.vertices.end()) throw Error(ErrorKind::Parse, "unknown start vertex '" + start + "'");
                from = static_cast<std::uint32_t>(it - h.vertices.begin());
            }
            auto g = hampath_to_bounded(h, from);
            doc = {std::move(g.graph), std::move(g.metadata)};
        }
        emit(render(doc));
        return kYes;
    }

    int certify(const std::string& path, const std::string& witness) {
        auto doc = load(path);
        json result;
        try {
            result = json::parse(read_text(witness));
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::Parse, std::string("witness file: ") + e.what());
        }
        auto verdict = report::certify(doc, result);
        if (globals.json) {
            json payload{{"certified", verdict.ok}};
            if (verdict.ok)
                payload["max_steps"] = verdict.max_steps;
            else
                payload["reason"] = verdict.reason;
            emit(payload);
        } else {
            out_ << (verdict.ok ? "certified" : "rejected: " + verdict.reason) << '\n';
        }
        return verdict.ok ? kYes : kNo;
    }

    int export_dot(const std::string& path) {
        auto doc = load(path, false);
        if (auto* g = std::get_if<LabeledGraph>(&doc.model))
            out_ << to_dot(*g);
        else
            out_ << to_dot(report::as_game(doc));
        return kYes;
    }

    int verify(const std::string& path, std::size_t m, std::optional<std::size_t> k) {
        auto doc = load(path);
        report::Query query{k ? report::QueryKind::Bounded : report::QueryKind::MaxCoverage, m, k.value_or(0),
                            globals.low_memory};
        const bool solver = report::solve(doc, query)["decision"].get<bool>();
        const auto depth = k.value_or(oracle::kUnbounded);
        bool reference = false;
        if (auto* g = std::get_if<LabeledGraph>(&doc.model))
            reference = oracle::brute_force_graph(*g, m, depth);
        else
            reference = oracle::brute_force_game(report::as_game(doc), m, depth);
        if (globals.json) {
            emit({{"solver", solver}, {"oracle", reference}, {"agree", solver == reference}});
        } else {
            out_ << "solver: " << (solver ? "yes" : "no") << "\noracle: " << (reference ? "yes" : "no") << '\n'
                 << (solver == reference ? "agree" : "DISAGREE") << '\n';
        }
        return solver == reference ? kYes : kNo;
    }

    int validate_model(const std::string& path) {
        auto doc = load(path, false);
        auto report = std::visit([](const auto& model) { return validate(model); }, doc.model);
        if (globals.json) {
            json violations = json::array();
            for (const auto& v : report.violations) violations.push_back(v.message);
            emit({{"kind", to_string(doc.kind())}, {"ok", report.ok()}, {"violations", violations}});
        } else {
            out_ << (report.ok() ? "ok\n" : report.to_string());
            if (!report.ok() && report.to_string().back() != '\n') out_ << '\n';
        }
        return report.ok() ? kYes : kUsage;
    }

    int random_model(const std::string& type, const random::ModelShape& shape) {
        random::Rng rng(globals.seed);
        if (type == "graph")
            emit(render(random::graph(rng, shape)));
        else
            emit(render(random::game(rng, shape)));
        return kYes;
    }

private:
    void print_answer(const json& r) {
        out_ << "decision: " << (r["decision"].get<bool>() ? "yes" : "no") << '\n';
        if (r.contains("value")) out_ << "value: " << r["value"] << '\n';
        if (r.contains("budget")) out_ << "budget: " << r["budget"] << '\n';
        if (r.contains("witness")) {
            out_ << "witness:";
            for (const auto& v : r["witness"]) out_ << ' ' << v.get<std::string>();
            out_ << "\nsteps: " << r["steps_used"] << '\n';
        }
        if (r.contains("strategy")) {
            out_ << "strategy: " << r["strategy"].size() << " entries\n";
            for (const auto& e : r["strategy"]) {
                out_ << "  (" << e["vertex"].get<std::string>() << ", " << prop_list(e["covered"]);
                if (e.contains("remaining")) out_ << ", " << e["remaining"];
                out_ << ") -> " << e["choose"].get<std::string>() << '\n';
            }
        }
        if (r.contains("end_component")) {
            const auto& ec = r["end_component"];
            out_ << "end component:";
            for (const auto& v : ec["vertices"]) out_ << ' ' << v.get<std::string>();
            out_ << "\ncovers: " << prop_list(ec["props"]) << '\n';
        }
    }

    static std::string prop_list(const json& names) {
        std::string s = "{";
        for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i].get<std::string>();
        return s + "}";
    }

    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
};

std::string one_line(std::string text) {
    while (!text.empty() && text.back() == '\n') text.pop_back();
    for (std::size_t pos; (pos = text.find('\n')) != std::string::npos;) text.replace(pos, 1, "; ");
    return text;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Runner runner(in, out, err);
    auto& gl = runner.globals;
    std::function<int()> action;

    CLI::App app{"Coverage problems on labeled graphs and game graphs", "covgame"};
    app.require_subcommand(1);
    app.add_flag("--json", gl.json, "Machine-readable output");
    app.add_flag("--low-memory", gl.low_memory, "Bounded games: depth-first search without a memo table");
    app.add_flag("--patch-self-loops", gl.patch_self_loops, "Add self-loops to vertices without successors");
    app.add_option("--seed", gl.seed, "Seed for random model generation");
    app.add_option("--kind", gl.kind, "Override the inferred model kind")
        ->check(CLI::IsMember({"graph", "game", "system"}));

    auto subcommand = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };

    std::string model, witness, gadget_type, instance, start, random_type;
    std::optional<std::size_t> m, k;
    bool value = false;
    random::ModelShape shape;

    auto* solve = subcommand("solve", "Maximal coverage decision, or the coverage value");
    solve->add_option("model", model, "Model file, - for stdin")->required();
    auto* m_opt = solve->add_option("--m", m, "Propositions to cover");
    solve->add_flag("--value", value, "Compute the coverage value")->excludes(m_opt);
    solve->callback([&] {
        if (!m && !value) throw CLI::RequiredError("--m or --value");
        action = [&] {
            report::Query q{value ? report::QueryKind::Value : report::QueryKind::MaxCoverage, m.value_or(0), 0,
                            gl.low_memory};
            return runner.solve(model, q);
        };
    });

    auto* bounded = subcommand("bounded", "Coverage within k steps");
    bounded->add_option("model", model, "Model file, - for stdin")->required();
    bounded->add_option("--m", m, "Propositions to cover")->required();
    bounded->add_option("--k", k, "Step budget")->required();
    bounded->callback([&] {
        action = [&] { return runner.solve(model, {report::QueryKind::Bounded, *m, *k, gl.low_memory}); };
    });

    auto* recurrent = subcommand("recurrent", "Controllable recurrence check");
    recurrent->add_option("model", model, "Model file, - for stdin")->required();
    recurrent->callback([&] { action = [&] { return runner.recurrent(model); }; });

    auto* compile = subcommand("compile", "Compile a system into a game");
    compile->add_option("system", model)->required();
    compile->callback([&] { action = [&] { return runner.compile(model); }; });

    auto* gadget = subcommand("gadget", "Generate a reduction instance");
    gadget->add_option("type", gadget_type)->required()->check(CLI::IsMember({"sat", "qbf", "vc", "hampath"}));
    gadget->add_option("instance", instance, "DIMACS, QDIMACS or edge-list file")->required();
    gadget->add_option("--start", start, "hampath: start vertex (default: first vertex)");
    gadget->callback([&] { action = [&] { return runner.gadget(gadget_type, instance, start); }; });

    auto* certify = subcommand("certify", "Re-check the certificate in a solve --json result");
    certify->add_option("model", model, "Model file, - for stdin")->required();
    certify->add_option("--witness", witness, "Result file")->required();
    certify->callback([&] { action = [&] { return runner.certify(model, witness); }; });

    auto* dot = subcommand("export-dot", "Render a model as DOT");
    dot->add_option("model", model, "Model file, - for stdin")->required();
    dot->callback([&] { action = [&] { return runner.export_dot(model); }; });

    auto* verify = subcommand("verify", "Compare the solver with brute-force enumeration");
    verify->add_option("model", model, "Model file, - for stdin")->required();
    verify->add_option("--m", m, "Propositions to cover")->required();
    verify->add_option("--k", k, "Step budget (default: unbounded)");
    verify->callback([&] { action = [&] { return runner.verify(model, *m, k); }; });

    auto* validate_cmd = subcommand("validate", "Report model invariant violations");
    validate_cmd->add_option("model", model, "Model file, - for stdin")->required();
    validate_cmd->callback([&] { action = [&] { return runner.validate_model(model); }; });

    auto* random_cmd = subcommand("random", "Print a random model (see --seed)");
    random_cmd->add_option("type", random_type)->required()->check(CLI::IsMember({"graph", "game"}));
    random_cmd->add_option("--vertices", shape.max_vertices, "Vertex count")->check(CLI::Range(1, 100000));
    random_cmd->add_option("--props", shape.max_props, "Proposition count")->check(CLI::Range(0, 64));
    random_cmd->add_option("--out-degree", shape.max_out_degree, "Maximum out-degree")->check(CLI::Range(1, 100000));
    random_cmd->callback([&] {
        shape.min_vertices = shape.max_vertices;
        shape.min_props = shape.max_props;
        action = [&] { return runner.random_model(random_type, shape); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "covgame: " << one_line(e.what()) << '\n';
        return kUsage;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << "covgame: " << one_line(e.what()) << '\n';
        const bool budget = e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::ApCapExceeded;
        return budget ? kBudget : kUsage;
    } catch (const std::exception& e) {
        err << "covgame: " << one_line(e.what()) << '\n';
        return kUsage;
    }
}

} // namespace covgame::cli
