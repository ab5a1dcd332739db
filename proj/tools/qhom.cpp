#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhom/applications.hpp"
#include "qhom/constants.hpp"
#include "qhom/errors.hpp"
#include "qhom/exact.hpp"
#include "qhom/graph.hpp"
#include "qhom/taylor.hpp"
#include "qhom/weights.hpp"

namespace {

using qhom::Complex;

// Flat key=value output (one line per key) or the same record as one JSON
// object with --json. Doubles print as %.17g so identical bits give
// byte-identical records.
class Record {
public:
    void add(const std::string& key, const std::string& value) { obj_[key] = value; }
    void add(const std::string& key, double value) { obj_[key] = value; }
    void add(const std::string& key, long long value) { obj_[key] = value; }
    void add(const std::string& key, int value) { obj_[key] = static_cast<long long>(value); }
    void add_complex(const std::string& prefix, Complex z) {
        add(prefix + "_re", z.real());
        add(prefix + "_im", z.imag());
    }

    void print(bool as_json) const {
        if (as_json) {
            std::cout << obj_.dump() << "\n";
            return;
        }
        for (const auto& [key, value] : obj_.items()) {
            if (value.is_number_float()) {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", value.get<double>());
                std::cout << key << '=' << buf << '\n';
            } else if (value.is_string()) {
                std::cout << key << '=' << value.get<std::string>() << '\n';
            } else {
                std::cout << key << '=' << value.dump() << '\n';
            }
        }
    }

private:
    nlohmann::ordered_json obj_;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

struct Options {
    std::string graph_path;
    std::string target_path;
    std::string weights_spec;
    int k = 0;
    double eps_rel = 0.1;
    double eps_param = 0.5;
    int w = 1;
    qhom::EvalMode mode = qhom::EvalMode::exact;
    int order_override = -1;
    double cost_ceiling = 1e9;
    unsigned threads = 1;
    double budget_bits = 40.0;
    std::optional<double> gamma_override;
    int constants_delta = 0;
    double constants_alpha = 0.0;
    bool json = false;
};

qhom::Graph load_graph(const std::string& path) {
    try {
        return qhom::parse_graph(qhom::read_text_file(path));
    } catch (const qhom::InputError& e) {
        throw qhom::InputError(path + ": " + e.what());
    }
}

qhom::ColoredGraph load_colored_graph(const std::string& path) {
    try {
        return qhom::parse_colored_graph(qhom::read_text_file(path));
    } catch (const qhom::InputError& e) {
        throw qhom::InputError(path + ": " + e.what());
    }
}

int require_k(const Options& opt, const std::string& preset) {
    if (opt.k < 1)
        throw qhom::InputError("preset '" + preset + "' needs --k");
    return opt.k;
}

int require_degree(const qhom::Graph& g, const std::string& preset) {
    int d = qhom::degrees(g).max_degree;
    if (d < 1)
        throw qhom::InputError("preset '" + preset + "' needs a graph with edges");
    return d;
}

// Resolves --weights: a builtin preset name, "maxcut:<eps>", or a JSON file.
qhom::WeightsFile resolve_weights(const Options& opt, const qhom::Graph& g) {
    const std::string& spec = opt.weights_spec;
    if (spec.empty())
        throw qhom::InputError("--weights is required");

    auto gamma_for = [&](int max_degree) {
        return opt.gamma_override ? *opt.gamma_override
                                  : qhom::gamma_table(max_degree).gamma;
    };

    qhom::WeightsFile out;
    if (spec == "ones") {
        out.k = require_k(opt, spec);
        out.matrix = qhom::SymmetricWeightMatrix(out.k);
        return out;
    }
    if (spec == "coloring-hard") {
        out.k = require_k(opt, spec);
        out.matrix = qhom::coloring_matrix_hard(out.k);
        return out;
    }
    if (spec == "coloring-soft") {
        out.k = require_k(opt, spec);
        int d = require_degree(g, spec);
        out.matrix = qhom::coloring_matrix_soft(out.k, gamma_for(d), d);
        return out;
    }
    if (spec == "indset-hard") {
        out.k = 2;
        out.matrix = qhom::independent_set_matrix_hard();
        return out;
    }
    if (spec == "indset-soft") {
        out.k = 2;
        int d = require_degree(g, spec);
        out.matrix = qhom::independent_set_matrix_soft(gamma_for(d), d);
        return out;
    }
    if (spec.rfind("maxcut:", 0) == 0) {
        out.k = 2;
        double eps = 0.0;
        try {
            eps = std::stod(spec.substr(7));
        } catch (const std::exception&) {
            throw qhom::InputError("cannot parse eps in '" + spec + "'");
        }
        out.matrix = qhom::maxcut_matrix(eps);
        return out;
    }

    out = qhom::parse_weights(qhom::read_text_file(spec));
    if (out.blocks && out.blocks->edge_count() != g.edge_count())
        throw qhom::InputError(spec + ": has " + std::to_string(out.blocks->edge_count()) +
                               " blocks but the graph has " + std::to_string(g.edge_count()) +
                               " edges");
    return out;
}

const char* mode_name(qhom::EvalMode m) {
    return m == qhom::EvalMode::exact ? "exact" : "approx";
}

const char* verdict_name(qhom::Verdict v) {
    switch (v) {
    case qhom::Verdict::far: return "far";
    case qhom::Verdict::many: return "many";
    default: return "inconclusive";
    }
}

qhom::AppOptions app_options(const Options& opt) {
    qhom::AppOptions a;
    a.budget.bits = opt.budget_bits;
    a.approx.threads = opt.threads;
    a.approx.cost_ceiling = opt.cost_ceiling;
    a.approx.order_override = opt.order_override;
    a.gamma_override = opt.gamma_override;
    return a;
}

void add_approx_fields(Record& rec, const qhom::ApproxResult& r) {
    rec.add("n", r.order);
    rec.add("beta", r.certificate.beta);
    rec.add("gamma", r.certificate.gamma);
    rec.add("delta", r.certificate.delta);
    rec.add("delta_max", r.certificate.delta_max);
    rec.add("log_bound", r.additive_log_bound);
    rec.add("rel_bound", r.relative_bound);
}

int cmd_evaluate(const Options& opt) {
    Timer timer;
    qhom::Graph g = load_graph(opt.graph_path);
    qhom::WeightsFile w = resolve_weights(opt, g);
    qhom::EnumerationBudget budget{opt.budget_bits};
    Complex value = w.matrix ? qhom::exact_p(g, *w.matrix, budget)
                             : qhom::exact_q(g, *w.blocks, budget);
    Record rec;
    rec.add_complex("value", value);
    rec.add("k", w.k);
    rec.add("vertices", g.vertex_count());
    rec.add("edges", g.edge_count());
    rec.add("time_ms", timer.elapsed_ms());
    rec.print(opt.json);
    return 0;
}

int cmd_approx(const Options& opt) {
    Timer timer;
    qhom::Graph g = load_graph(opt.graph_path);
    qhom::WeightsFile w = resolve_weights(opt, g);
    qhom::EdgeWeightTensor b = w.blocks ? *w.blocks : qhom::lift_matrix(*w.matrix, g);
    qhom::ApproxResult r = qhom::approximate_q(g, b, opt.eps_rel, app_options(opt).approx);
    Record rec;
    rec.add_complex("value", r.value_estimate);
    rec.add_complex("log", r.log_estimate);
    add_approx_fields(rec, r);
    rec.add("k", w.k);
    rec.add("time_ms", timer.elapsed_ms());
    rec.print(opt.json);
    return 0;
}

int cmd_soft_sum(const Options& opt, bool colorings) {
    Timer timer;
    qhom::Graph g = load_graph(opt.graph_path);
    qhom::AppOptions a = app_options(opt);
    qhom::SoftSumResult r =
        colorings ? qhom::soft_coloring_sum(g, require_k(opt, "colorings"), opt.eps_rel,
                                            opt.mode, a)
                  : qhom::soft_independent_set_sum(g, opt.eps_rel, opt.mode, a);
    Record rec;
    rec.add("normalized_value", r.normalized_value);
    rec.add_complex("value", r.raw.value_estimate);
    rec.add("gamma", r.gamma);
    rec.add("gamma_override", r.gamma_overridden ? 1 : 0);
    rec.add("mode", mode_name(opt.mode));
    if (opt.mode == qhom::EvalMode::approx)
        add_approx_fields(rec, r.raw);
    rec.add("time_ms", timer.elapsed_ms());
    rec.print(opt.json);
    return 0;
}

int cmd_maxcut(const Options& opt) {
    Timer timer;
    qhom::Graph g = load_graph(opt.graph_path);
    qhom::CutBounds r = qhom::maxcut_bounds(g, opt.eps_param, opt.eps_rel, opt.mode,
                                            app_options(opt));
    Record rec;
    rec.add("lower", r.lower);
    rec.add("upper", r.upper);
    rec.add("p_value", r.p_value);
    rec.add("eps_param", r.eps_param);
    rec.add("mode", mode_name(r.mode));
    rec.add("time_ms", timer.elapsed_ms());
    rec.print(opt.json);
    return 0;
}

int cmd_distinguish(const Options& opt) {
    Timer timer;
    qhom::ColoredGraph g = load_colored_graph(opt.graph_path);
    qhom::ColoredGraph h = load_colored_graph(opt.target_path);
    qhom::DistinguishVerdict r = qhom::distinguish_homomorphisms(
        g.graph, g.edge_colors, h, opt.w, opt.eps_rel, opt.mode, app_options(opt));
    Record rec;
    rec.add("verdict", verdict_name(r.verdict));
    rec.add("normalized_value", r.normalized_value);
    rec.add("far_threshold", r.far_threshold);
    rec.add("many_threshold", r.many_threshold);
    rec.add("w", r.w);
    rec.add("gamma", r.gamma);
    rec.add("mode", mode_name(opt.mode));
    rec.add("time_ms", timer.elapsed_ms());
    rec.print(opt.json);
    return 0;
}

int cmd_constants(const Options& opt) {
    Timer timer;
    if (opt.constants_delta < 1 && opt.constants_alpha <= 0.0)
        throw qhom::InputError("constants: need --delta and/or --alpha");
    Record rec;
    double alpha;
    qhom::ThetaRegime regime = qhom::ThetaRegime::asymptotic();
    if (opt.constants_delta >= 1) {
        qhom::GammaRow row = qhom::gamma_table(opt.constants_delta);
        rec.add("delta", opt.constants_delta);
        rec.add("gamma", row.gamma);
        rec.add("alpha", row.alpha);
        rec.add("beta", row.beta);
        rec.add("delta_max", row.gamma / opt.constants_delta);
        alpha = row.alpha;
        if (opt.constants_delta >= 3)
            regime = qhom::ThetaRegime::for_degree(opt.constants_delta);
    } else {
        alpha = opt.constants_alpha;
        rec.add("alpha", alpha);
    }
    if (opt.constants_alpha > 0.0)
        alpha = opt.constants_alpha;
    qhom::ConstantSolution sol = qhom::solve_theta(alpha, regime);
    rec.add("regime", sol.delta_assumption);
    rec.add("solved_alpha", sol.alpha);
    rec.add("theta", sol.theta);
    rec.add("tau", sol.tau);
    rec.add("converged", sol.converged ? 1 : 0);
    rec.add("residual", sol.residual);
    rec.add("time_ms", timer.elapsed_ms());
    rec.print(opt.json);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env = std::getenv("QHOM_COST_CEILING")) {
        try {
            opt.cost_ceiling = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "error: QHOM_COST_CEILING is not a number\n";
            return 1;
        }
    }

    CLI::App app{"Partition functions of (edge-colored) graph homomorphisms: "
                 "exact evaluation and certified Taylor approximation"};
    app.require_subcommand(1);

    std::map<std::string, qhom::EvalMode> mode_map{{"exact", qhom::EvalMode::exact},
                                                   {"approx", qhom::EvalMode::approx}};

    double gamma_flag = -1.0;
    auto add_common = [&](CLI::App* sub, bool needs_graph) {
        if (needs_graph)
            sub->add_option("--graph", opt.graph_path, "graph file")->required();
        sub->add_flag("--json", opt.json, "emit one JSON object instead of key=value lines");
        sub->add_option("--threads", opt.threads, "worker threads for derivative sums")
            ->check(CLI::Range(1u, 1024u));
        sub->add_option("--cost-ceiling", opt.cost_ceiling,
                        "cost guard ceiling in elementary products (>= 1e6)");
        sub->add_option("--budget-bits", opt.budget_bits,
                        "exact-enumeration budget: max |V| log2(k)");
    };

    auto* evaluate = app.add_subcommand("evaluate", "exact partition function by enumeration");
    add_common(evaluate, true);
    evaluate->add_option("--weights", opt.weights_spec,
                         "preset (ones, coloring-hard, coloring-soft, indset-hard, "
                         "indset-soft, maxcut:EPS) or JSON file")
        ->required();
    evaluate->add_option("--k", opt.k, "label count for presets that need it");
    evaluate->add_option("--gamma", gamma_flag, "override the table gamma for soft presets");

    auto* approx = app.add_subcommand("approx", "certified Taylor approximation of Q");
    add_common(approx, true);
    approx->add_option("--weights", opt.weights_spec, "preset or JSON file")->required();
    approx->add_option("--k", opt.k, "label count for presets that need it");
    approx->add_option("--eps", opt.eps_rel, "target relative error in (0, 1)");
    approx->add_option("--n", opt.order_override, "override the Taylor order");
    approx->add_option("--gamma", gamma_flag, "override the table gamma for soft presets");

    auto* colorings = app.add_subcommand("colorings", "soft weighted coloring sum");
    add_common(colorings, true);
    colorings->add_option("--k", opt.k, "number of colors")->required();
    colorings->add_option("--mode", opt.mode, "exact or approx")
        ->transform(CLI::CheckedTransformer(mode_map));
    colorings->add_option("--eps", opt.eps_rel, "relative error for approx mode");
    colorings->add_option("--gamma", gamma_flag, "override the table gamma (voids guarantee)");

    auto* indsets = app.add_subcommand("indsets", "soft weighted independent-set sum");
    add_common(indsets, true);
    indsets->add_option("--mode", opt.mode, "exact or approx")
        ->transform(CLI::CheckedTransformer(mode_map));
    indsets->add_option("--eps", opt.eps_rel, "relative error for approx mode");
    indsets->add_option("--gamma", gamma_flag, "override the table gamma (voids guarantee)");

    auto* maxcut = app.add_subcommand("maxcut", "sandwich bounds on the maximum cut");
    add_common(maxcut, true);
    maxcut->add_option("--eps-param", opt.eps_param, "diagonal weight eps in (0, 1)")
        ->required();
    maxcut->add_option("--mode", opt.mode, "exact or approx")
        ->transform(CLI::CheckedTransformer(mode_map));
    maxcut->add_option("--eps", opt.eps_rel, "relative error for approx mode");

    auto* distinguish =
        app.add_subcommand("distinguish", "far/many verdict for edge-colored pairs");
    add_common(distinguish, true);
    distinguish->add_option("--target", opt.target_path, "colored target graph H")->required();
    distinguish->add_option("--w", opt.w, "edge-distance parameter w >= 1")->required();
    distinguish->add_option("--mode", opt.mode, "exact or approx")
        ->transform(CLI::CheckedTransformer(mode_map));
    distinguish->add_option("--eps", opt.eps_rel, "relative error for approx mode");
    distinguish->add_option("--gamma", gamma_flag, "override the table gamma");

    auto* constants = app.add_subcommand("constants", "gamma/alpha/beta table and theta, tau");
    add_common(constants, false);
    constants->add_option("--delta", opt.constants_delta, "max degree for the table row");
    constants->add_option("--alpha", opt.constants_alpha, "solve theta for this alpha");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (gamma_flag >= 0.0)
            opt.gamma_override = gamma_flag;
        if (opt.cost_ceiling < 1e6)
            throw qhom::InputError("--cost-ceiling must be at least 1e6");
        if (!(opt.eps_rel > 0.0 && opt.eps_rel < 1.0))
            throw qhom::InputError("--eps must lie in (0, 1)");

        if (*evaluate)
            return cmd_evaluate(opt);
        if (*approx)
            return cmd_approx(opt);
        if (*colorings)
            return cmd_soft_sum(opt, true);
        if (*indsets)
            return cmd_soft_sum(opt, false);
        if (*maxcut)
            return cmd_maxcut(opt);
        if (*distinguish)
            return cmd_distinguish(opt);
        if (*constants)
            return cmd_constants(opt);
        throw qhom::InputError("no subcommand");
    } catch (const qhom::CertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qhom::CostGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qhom::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
