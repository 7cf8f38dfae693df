// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgsynth/bounds.hpp"
#include "qgsynth/diag_ancilla.hpp"
#include "qgsynth/errors.hpp"
#include "qgsynth/io.hpp"
#include "qgsynth/sim.hpp"
#include "qgsynth/state_unitary.hpp"
#include "qgsynth/transform.hpp"
#include "qgsynth/unary.hpp"

namespace qgsynth {

namespace {

constexpr double kResidualTol = 1e-8;

struct Options {
    std::string graph, angles, state, unitary, target, circuit, out, report, trace, task = "qsp", strategy = "auto";
    std::string kind = "path", m_rule = "zero";
    int m = 0;
    int n = -1;
    int n_min = 4, n_max = 10;
    bool verify = false;
    bool improved = false;
    std::uint64_t seed = 1;
};

bool passes(const SynthesisReport& r) {
    return r.violations.empty() && r.residual && *r.residual <= kResidualTol && r.ancilla_restored;
}

Graph load_graph(const Options& o) {
    if (o.graph.empty()) throw InvalidParameters("--graph is required");
    return parse_graph(read_text_file(o.graph));
}

int data_width(const Graph& g, const Options& o) {
    const int n = g.size() - o.m;
    if (o.m < 0 || n < 1) throw InvalidParameters("-m must leave at least one data qubit");
    return n;
}

int emit(const Options& o, const Circuit& c, const SynthesisReport& r, std::ostream& out,
         const nlohmann::json& extra = nlohmann::json::object()) {
    if (!o.out.empty()) write_text_file(o.out, encode_circuit(c));
    auto j = nlohmann::json::parse(encode_report(r));
    j["seed"] = o.seed;
    for (const auto& [k, v] : extra.items()) j[k] = v;
    const std::string text = j.dump(2);
    if (!o.report.empty()) {
        write_text_file(o.report, text);
    } else {
        out << text << "\n";
    }
    return o.verify && !passes(r) ? 1 : 0;
}

int cmd_synth_diag(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const int n = data_width(g, o);
    std::mt19937_64 rng(o.seed);
    const DiagonalSpec theta = o.angles.empty() ? random_angles(n, rng) : parse_angles(read_text_file(o.angles));
    if (theta.n != n) throw InvalidParameters("angle file width does not match the graph and -m");
    const auto res = synth_diag(g, theta, o.m, parse_strategy(o.strategy), o.verify);
    if (!o.trace.empty() && res.report.backend.rfind("ancilla/", 0) == 0) {
        write_text_file(o.trace, encode_stage_trace(synth_diag_ancilla(g, theta, o.m, false).trace));
    }
    return emit(o, res.circuit, res.report, out);
}

int cmd_synth_qsp(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const int n = data_width(g, o);
    std::mt19937_64 rng(o.seed);
    const StateSpec v = o.state.empty() ? random_state(n, rng) : parse_state(read_text_file(o.state));
    if (v.n != n) throw InvalidParameters("state width does not match the graph and -m");
    if (o.improved) {
        if (g.kind() != GraphKind::Tree || g.arity != 2) throw InvalidParameters("--improved needs a binary tree");
        const Circuit c = qsp_tree_improved(v, o.m);
        const auto plan = hybrid_plan(n, o.m);
        TargetSpec t = v;
        auto r = assemble_report(c, g, o.verify ? &t : nullptr, o.m, plan.t > 0 ? "unary+cascade" : "cascade");
        r.notes.push_back(plan.note);
        return emit(o, c, r, out);
    }
    const auto res = qsp_synthesize(g, v, o.m, o.verify);
    return emit(o, res.circuit, res.report, out);
}

int cmd_synth_ucg(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const int n = data_width(g, o);
    std::mt19937_64 rng(o.seed);
    const UcgSpec v = o.target.empty() ? random_ucg(n, rng) : parse_ucg(read_text_file(o.target));
    if (v.n != n) throw InvalidParameters("UCG width does not match the graph and -m");
    const Circuit c = synth_ucg(g, v, o.m);
    TargetSpec t = v;
    return emit(o, c, assemble_report(c, g, o.verify ? &t : nullptr, o.m, "ucg"), out);
}

int cmd_synth_gus(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const int n = data_width(g, o);
    std::mt19937_64 rng(o.seed);
    const UnitarySpec u = o.unitary.empty() ? random_unitary(n, rng) : parse_unitary(read_text_file(o.unitary));
    if (u.n != n) throw InvalidParameters("unitary width does not match the graph and -m");
    const auto res = gus_synthesize(g, u, o.m, o.verify);
    return emit(o, res.circuit, res.report, out);
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    if (o.circuit.empty()) throw InvalidParameters("--circuit is required");
    const Circuit c = decode_circuit(read_text_file(o.circuit));
    TargetSpec t;
    if (!o.angles.empty()) {
        t = parse_angles(read_text_file(o.angles));
    } else if (!o.state.empty()) {
        t = parse_state(read_text_file(o.state));
    } else if (!o.unitary.empty()) {
        t = parse_unitary(read_text_file(o.unitary));
    } else if (!o.target.empty()) {
        t = parse_ucg(read_text_file(o.target));
    } else {
        throw InvalidParameters("verify needs --angles, --state, --unitary or --target");
    }
    const auto r = assemble_report(c, g, &t, o.m, "input");
    Options v = o;
    v.verify = true;
    v.out.clear();
    return emit(v, c, r, out);
}

int cmd_bound(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const int n = o.n > 0 ? o.n : data_width(g, o);
    const auto b = depth_lower_bound(g, parse_task(o.task), n, g.size() - n);
    out << encode_bound(b) << "\n";
    return 0;
}

int cmd_lightcone(const Options& o, std::ostream& out) {
    if (o.circuit.empty()) throw InvalidParameters("--circuit is required");
    const Circuit c = decode_circuit(read_text_file(o.circuit));
    const int n = o.n > 0 ? o.n : c.num_qubits - c.ancilla;
    const auto chk = lightcone_budget_check(c, parse_task(o.task), n);
    nlohmann::json j{{"budget", chk.budget},
                     {"required", chk.required},
                     {"pass", chk.pass},
                     {"layered_depth", chk.layered_depth},
                     {"note", "necessary condition with the hidden constant set to 1"}};
    out << j.dump() << "\n";
    return o.verify && !chk.pass ? 1 : 0;
}

int cmd_transform_brickwall(const Options& o, std::ostream& out) {
    const Graph bw = load_graph(o);
    const auto emb = brickwall_embedding(bw);
    validate_bridge(bw, emb.bridge);
    nlohmann::json j{{"grid_dims", emb.grid.dims},
                     {"classes", emb.bridge.class_count()},
                     {"max_path", emb.bridge.max_path_length()}};
    std::vector<int> map1;
    for (int v : emb.vertex_map) map1.push_back(v + 1);
    j["vertex_map"] = map1;
    int code = 0;
    if (!o.circuit.empty()) {
        const Circuit c = decode_circuit(read_text_file(o.circuit));
        const Circuit t = transform_circuit(c, bw, emb.grid, emb.bridge);
        const auto viol = validate_connectivity(t, bw);
        const Metrics before = metrics(c), after = metrics(t);
        j["depth_in"] = before.depth;
        j["depth_out"] = after.depth;
        j["depth_factor_limit"] = 1 + 4 * emb.bridge.max_path_length() * emb.bridge.class_count();
        j["violations"] = viol.size();
        if (!o.out.empty()) write_text_file(o.out, encode_circuit(t));
        if (o.verify && !viol.empty()) code = 1;
    }
    out << j.dump(2) << "\n";
    return code;
}

int cmd_graph_info(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    int max_degree = 0;
    for (int v = 0; v < g.size(); ++v) max_degree = std::max(max_degree, g.degree(v));
    nlohmann::json j{{"kind", kind_name(g.kind())},
                     {"vertices", g.size()},
                     {"edges", g.edges().size()},
                     {"diameter", diameter(g)},
                     {"max_degree", max_degree},
                     {"nu", max_matching(g).size()}};
    if (g.size() <= 24) {
        const Rational h = vertex_expansion(g);
        j["expansion"] = std::to_string(h.num) + "/" + std::to_string(h.den);
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const auto rows = bench_sweep(o.task, o.kind, o.n_min, o.n_max, o.m_rule, o.seed);
    const std::string csv = bench_csv(rows);
    if (!o.out.empty()) {
        write_text_file(o.out, csv);
    } else {
        out << csv;
    }
    if (!rows.empty()) {
        auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                            [](const BenchRow& a, const BenchRow& b) { return a.ratio < b.ratio; });
        out << "# ratio range " << lo->ratio << " .. " << hi->ratio << " seed " << o.seed << "\n";
    }
    return 0;
}

Graph bench_graph(const std::string& kind, int total) {
    if (kind == "path") return path_graph(total);
    if (kind == "star") return star_graph(total);
    if (kind == "tree") return tree_graph(2, total);
    if (kind == "complete") return complete_graph(total);
    if (kind == "grid") {
        int b = static_cast<int>(std::sqrt(double(total)));
        while (b > 1 && total % b != 0) --b;
        return grid_graph({total / b, b});
    }
    throw InvalidParameters("unknown bench graph kind '" + kind + "'");
}

int bench_m(const std::string& rule, int n) {
    if (rule == "zero") return 0;
    if (rule == "3n") return 3 * n;
    if (rule == "sqrt") return 3 * (1 << (n / 2));
    try {
        return std::stoi(rule);
    } catch (const std::exception&) {
        throw InvalidParameters("unknown m rule '" + rule + "'");
    }
}

double headline(const std::string& task, const std::string& kind, int n, int m) {
    const double base = task == "gus" ? 4.0 : 2.0;
    const double full = std::pow(base, n), total = n + m;
    if (kind == "path" || kind == "grid") return std::pow(base, n / 2.0) + full / total;
    if (kind == "star") return full;
    return double(n) * n + full / total;
}

}  // namespace

std::vector<BenchRow> bench_sweep(const std::string& task, const std::string& graph_kind, int n_min, int n_max,
                                  const std::string& m_rule, std::uint64_t seed) {
    std::vector<BenchRow> rows(std::max(0, n_max - n_min + 1));
    std::vector<std::string> errors(rows.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        try {
            const int n = n_min + i;
            const int m = bench_m(m_rule, n);
            const Graph g = bench_graph(graph_kind, n + m);
            std::mt19937_64 rng(seed + 7919ULL * n + m);
            Circuit c;
            if (task == "diag") {
                c = synth_diag(g, random_angles(n, rng), m, DiagStrategy::Auto, false).circuit;
            } else if (task == "qsp") {
                c = qsp_synthesize(g, random_state(n, rng), m, false).circuit;
            } else if (task == "gus") {
                c = gus_synthesize(g, random_unitary(n, rng), m, false).circuit;
            } else {
                throw InvalidParameters("unknown bench task '" + task + "'");
            }
            const Metrics mt = metrics(c);
            BenchRow r{task, graph_kind, n, m, mt.depth, mt.size, mt.two_qubit, 0.0, 0.0};
            r.bound_max = depth_lower_bound(g, parse_task(task), n, m).max;
            r.ratio = mt.depth / headline(task, graph_kind, n, m);
            rows[i] = r;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw InvalidParameters("bench cell failed: " + e);
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.n, a.m) < std::tie(b.n, b.m);
    });
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream s;
    s << "task,graph_kind,n,m,depth,size,two_qubit,bound_max,ratio\n";
    s << std::setprecision(10);
    for (const auto& r : rows)
        s << r.task << ',' << r.graph_kind << ',' << r.n << ',' << r.m << ',' << r.depth << ',' << r.size << ','
          << r.two_qubit << ',' << r.bound_max << ',' << r.ratio << '\n';
    return s.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Connectivity-constrained synthesis of diagonal unitaries, states and unitaries"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* s) {
        s->add_option("--graph", o.graph, "constraint graph JSON");
        s->add_option("-m", o.m, "number of ancilla qubits");
        s->add_option("--out", o.out, "output circuit JSON");
        s->add_option("--report", o.report, "write the report here instead of stdout");
        s->add_flag("--verify", o.verify, "simulate and fail on residual or violations");
        s->add_option("--seed", o.seed, "seed for random targets");
    };

    auto* synth = app.add_subcommand("synth", "synthesize a circuit");
    synth->require_subcommand(1);
    auto* diag = synth->add_subcommand("diag", "diagonal unitary");
    common(diag);
    diag->add_option("--angles", o.angles, "angle JSON");
    diag->add_option("--strategy", o.strategy, "auto|path|grid|tree|star|expander|general|routed");
    diag->add_option("--trace", o.trace, "stage trace JSON for ancilla backends");
    auto* qsp = synth->add_subcommand("qsp", "state preparation");
    common(qsp);
    qsp->add_option("--state", o.state, "state JSON");
    qsp->add_flag("--improved", o.improved, "unary-tree hybrid on binary trees");
    auto* ucg = synth->add_subcommand("ucg", "uniformly controlled gate");
    common(ucg);
    ucg->add_option("--target", o.target, "UCG JSON");
    auto* gus = synth->add_subcommand("gus", "general unitary");
    common(gus);
    gus->add_option("--unitary", o.unitary, "unitary JSON");

    auto* verify = app.add_subcommand("verify", "check a circuit against a target");
    common(verify);
    verify->add_option("--circuit", o.circuit, "circuit JSON")->required();
    verify->add_option("--angles", o.angles, "angle JSON");
    verify->add_option("--state", o.state, "state JSON");
    verify->add_option("--unitary", o.unitary, "unitary JSON");
    verify->add_option("--target", o.target, "UCG JSON");

    auto* bound = app.add_subcommand("bound", "depth lower-bound terms");
    bound->add_option("--graph", o.graph, "constraint graph JSON")->required();
    bound->add_option("--task", o.task, "qsp|diag|gus");
    bound->add_option("-n", o.n, "number of data qubits");
    bound->add_option("-m", o.m, "number of ancilla qubits");

    auto* light = app.add_subcommand("lightcone", "reachable-set budget of a circuit");
    light->add_option("--circuit", o.circuit, "circuit JSON")->required();
    light->add_option("--task", o.task, "qsp|diag|gus");
    light->add_option("-n", o.n, "number of data qubits");
    light->add_flag("--verify", o.verify, "fail when the budget is short");

    auto* transform = app.add_subcommand("transform", "circuit transformation");
    transform->require_subcommand(1);
    auto* brick = transform->add_subcommand("brickwall", "pull a grid circuit back to a brick-wall");
    brick->add_option("--graph", o.graph, "brick-wall graph JSON")->required();
    brick->add_option("--circuit", o.circuit, "circuit on the embedded grid");
    brick->add_option("--out", o.out, "output circuit JSON");
    brick->add_flag("--verify", o.verify, "fail on connectivity violations");

    auto* bench = app.add_subcommand("bench", "counting sweep to CSV");
    bench->add_option("--task", o.task, "diag|qsp|gus");
    bench->add_option("--kind", o.kind, "path|grid|tree|star|complete");
    bench->add_option("--n-min", o.n_min, "smallest n");
    bench->add_option("--n-max", o.n_max, "largest n");
    bench->add_option("--m-rule", o.m_rule, "zero|3n|sqrt|<int>");
    bench->add_option("--seed", o.seed, "seed for random targets");
    bench->add_option("--out", o.out, "CSV path");

    auto* graph = app.add_subcommand("graph", "graph utilities");
    graph->require_subcommand(1);
    auto* info = graph->add_subcommand("info", "summary of a constraint graph");
    info->add_option("--graph", o.graph, "constraint graph JSON")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*diag) return cmd_synth_diag(o, out);
        if (*qsp) return cmd_synth_qsp(o, out);
        if (*ucg) return cmd_synth_ucg(o, out);
        if (*gus) return cmd_synth_gus(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*bound) return cmd_bound(o, out);
        if (*light) return cmd_lightcone(o, out);
        if (*brick) return cmd_transform_brickwall(o, out);
        if (*bench) return cmd_bench(o, out);
        if (*info) return cmd_graph_info(o, out);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const InvalidParameters& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 3;
    }
    err << app.help();
    return 2;
}

}  // namespace qgsynth
