#include "qhom/applications.hpp"

#include <cmath>

#include "qhom/constants.hpp"
#include "qhom/errors.hpp"

namespace qhom {

namespace {

double pick_gamma(int max_degree, const AppOptions& opts) {
    if (opts.gamma_override)
        return *opts.gamma_override;
    return gamma_table(max_degree).gamma;
}

ApproxResult exact_as_result(const Graph& g, const EdgeWeightTensor& b, int max_degree,
                             const EnumerationBudget& budget) {
    ApproxResult r;
    r.value_estimate = exact_q(g, b, budget);
    r.log_estimate = std::log(r.value_estimate);
    r.certificate = polydisc_certificate(b, max_degree);
    return r;
}

ApproxResult edgeless_result(int vertex_count, int k) {
    ApproxResult r;
    double value = pow_int(static_cast<double>(k), vertex_count);
    r.value_estimate = Complex{value, 0.0};
    r.log_estimate = Complex{vertex_count * std::log(static_cast<double>(k)), 0.0};
    GammaRow row = gamma_table(1);
    r.certificate = {0.0, row.gamma, row.gamma, row.beta, true};
    return r;
}

SoftSumResult soft_sum(const Graph& g, const SymmetricWeightMatrix& a, double gamma,
                       SoftInterpretation interpretation, double eps_rel, EvalMode mode,
                       const AppOptions& opts) {
    int max_degree = degrees(g).max_degree;
    EdgeWeightTensor b = lift_matrix(a, g);

    SoftSumResult out;
    out.gamma = gamma;
    out.interpretation = interpretation;
    out.gamma_overridden = opts.gamma_override.has_value();
    if (mode == EvalMode::approx)
        out.raw = approximate_q(g, b, eps_rel, opts.approx);
    else
        out.raw = exact_as_result(g, b, max_degree, opts.budget);

    double norm = pow_int(1.0 + gamma / max_degree, g.edge_count());
    out.normalized_value = out.raw.value_estimate.real() / norm;
    return out;
}

} // namespace

SoftSumResult soft_coloring_sum(const Graph& g, int k, double eps_rel, EvalMode mode,
                                const AppOptions& opts) {
    if (k < 1)
        throw InputError("soft coloring sum needs k >= 1");
    if (g.edge_count() == 0) {
        SoftSumResult out;
        out.raw = edgeless_result(g.vertex_count(), k);
        out.gamma = 0.0;
        out.interpretation = SoftInterpretation::coloring;
        out.normalized_value = out.raw.value_estimate.real();
        return out;
    }
    int max_degree = degrees(g).max_degree;
    double gamma = pick_gamma(max_degree, opts);
    return soft_sum(g, coloring_matrix_soft(k, gamma, max_degree), gamma,
                    SoftInterpretation::coloring, eps_rel, mode, opts);
}

SoftSumResult soft_independent_set_sum(const Graph& g, double eps_rel, EvalMode mode,
                                       const AppOptions& opts) {
    if (g.edge_count() == 0) {
        SoftSumResult out;
        out.raw = edgeless_result(g.vertex_count(), 2);
        out.gamma = 0.0;
        out.interpretation = SoftInterpretation::independent_set;
        out.normalized_value = out.raw.value_estimate.real();
        return out;
    }
    int max_degree = degrees(g).max_degree;
    double gamma = pick_gamma(max_degree, opts);
    return soft_sum(g, independent_set_matrix_soft(gamma, max_degree), gamma,
                    SoftInterpretation::independent_set, eps_rel, mode, opts);
}

CutBounds maxcut_bounds(const Graph& g, double eps_param, double eps_rel, EvalMode mode,
                        const AppOptions& opts) {
    if (!(eps_param > 0.0 && eps_param < 1.0))
        throw InputError("maxcut bounds need eps in (0, 1)");
    if (1.0 - eps_param < 1e-6)
        throw InputError("maxcut bounds diverge as eps -> 1; need 1 - eps >= 1e-6");

    SymmetricWeightMatrix a = maxcut_matrix(eps_param);
    double log_inv_eps = -std::log(eps_param);

    double log_lo, log_hi, p_value;
    if (mode == EvalMode::approx) {
        if (g.edge_count() > 0) {
            int max_degree = degrees(g).max_degree;
            double gamma = pick_gamma(max_degree, opts);
            double delta_max = gamma / max_degree;
            if (1.0 - eps_param > delta_max)
                throw CertificateError(
                    "A_eps outside the zero-free polydisc: 1 - eps = " +
                        std::to_string(1.0 - eps_param) + " exceeds gamma/max_degree = " +
                        std::to_string(delta_max) + "; use exact mode",
                    1.0 - eps_param, delta_max);
        }
        ApproxResult r = approximate_q(g, lift_matrix(a, g), eps_rel, opts.approx);
        p_value = r.value_estimate.real();
        log_lo = r.log_estimate.real() - r.additive_log_bound;
        log_hi = r.log_estimate.real() + r.additive_log_bound;
    } else {
        p_value = exact_p(g, a, opts.budget).real();
        log_lo = log_hi = std::log(p_value);
    }

    CutBounds out;
    out.eps_param = eps_param;
    out.p_value = p_value;
    out.mode = mode;
    out.lower = log_lo / log_inv_eps + g.edge_count() -
                g.vertex_count() * std::log(2.0) / log_inv_eps;
    out.upper = log_hi / log_inv_eps + g.edge_count();
    return out;
}

DistinguishVerdict distinguish_homomorphisms(const Graph& g,
                                             const std::vector<std::string>& g_colors,
                                             const ColoredGraph& h, int w, double eps_rel,
                                             EvalMode mode, const AppOptions& opts) {
    if (w < 1)
        throw InputError("distinguish: w must be positive");
    if (g.edge_count() == 0)
        throw InputError("distinguish: G needs at least one edge (thresholds use gamma/Delta)");

    int max_degree = degrees(g).max_degree;
    double gamma = pick_gamma(max_degree, opts);
    EdgeWeightTensor b = colored_hom_tensor(g, g_colors, h, gamma, max_degree, /*soft=*/true);

    DistinguishVerdict out;
    out.w = w;
    out.gamma = gamma;
    if (mode == EvalMode::approx)
        out.raw = approximate_q(g, b, eps_rel, opts.approx);
    else
        out.raw = exact_as_result(g, b, max_degree, opts.budget);

    double norm = pow_int(1.0 + gamma / max_degree, g.edge_count());
    out.normalized_value = out.raw.value_estimate.real() / norm;

    int k = h.graph.vertex_count();
    out.far_threshold = pow_int(static_cast<double>(k), g.vertex_count()) *
                        std::exp(-2.0 * gamma * w / max_degree);
    out.many_threshold = 2.0 * out.far_threshold;

    double rb = mode == EvalMode::approx ? out.raw.relative_bound : 0.0;
    if (out.normalized_value * (1.0 + rb) < out.far_threshold * 1.05)
        out.verdict = Verdict::far;
    else if (out.normalized_value * (1.0 - rb) > out.many_threshold * 0.95)
        out.verdict = Verdict::many;
    else
        out.verdict = Verdict::inconclusive;
    return out;
}

} // namespace qhom
