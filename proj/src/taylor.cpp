#include "qhom/taylor.hpp"

#include <algorithm>
#include <cmath>

#include "qhom/constants.hpp"
#include "qhom/errors.hpp"

namespace qhom {

namespace {

// Fixed chunking of the subset space; boundaries never depend on the thread
// count, so the chunk-ordered merge is bit-identical for 1..N threads.
constexpr std::uint64_t kSubsetChunk = 1024;

double factorial_double(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i)
        f *= static_cast<double>(i);
    return f;
}

// Per-edge view of one subset: packed block pointer and local endpoint slots.
struct SubsetEdge {
    const Complex* block;
    int u_slot;
    int v_slot;
};

// Sum over all maps phi: S(I) -> [k] of prod_e (b_e[phi(u), phi(v)] - 1),
// times k^(|V| - |S(I)|). Vertices of S(I) ascending, odometer enumeration.
Complex subset_term(const Graph& g, const EdgeWeightTensor& b,
                    const std::vector<int>& edge_subset, std::vector<int>& vertex_buf,
                    std::vector<SubsetEdge>& edge_buf, std::vector<int>& label_buf) {
    vertex_buf.clear();
    for (int e : edge_subset) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        vertex_buf.push_back(u);
        vertex_buf.push_back(v);
    }
    std::sort(vertex_buf.begin(), vertex_buf.end());
    vertex_buf.erase(std::unique(vertex_buf.begin(), vertex_buf.end()), vertex_buf.end());

    auto slot_of = [&](int v) {
        return static_cast<int>(std::lower_bound(vertex_buf.begin(), vertex_buf.end(), v) -
                                vertex_buf.begin());
    };
    edge_buf.clear();
    for (int e : edge_subset) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        edge_buf.push_back({b.block(e), slot_of(u), slot_of(v)});
    }

    const int k = b.k();
    auto pidx = [k](int i, int j) {
        if (i > j)
            std::swap(i, j);
        return i * k - i * (i - 1) / 2 + (j - i);
    };

    int s = static_cast<int>(vertex_buf.size());
    label_buf.assign(static_cast<std::size_t>(s), 0);
    ComplexSum acc;
    for (;;) {
        Complex prod{1.0, 0.0};
        for (const auto& se : edge_buf)
            prod *= se.block[pidx(label_buf[static_cast<std::size_t>(se.u_slot)],
                                  label_buf[static_cast<std::size_t>(se.v_slot)])] -
                    Complex{1.0, 0.0};
        acc.add(prod);

        int idx = s - 1;
        for (; idx >= 0; --idx) {
            if (++label_buf[static_cast<std::size_t>(idx)] < k)
                break;
            label_buf[static_cast<std::size_t>(idx)] = 0;
        }
        if (idx < 0)
            break;
    }
    return pow_int(static_cast<double>(k), g.vertex_count() - s) * acc.value();
}

void check_cost(long long edge_count, int k, int order, double ceiling) {
    double estimate = subset_cost_estimate(edge_count, k, order);
    if (estimate > ceiling)
        throw CostGuardError("derivative order " + std::to_string(order) +
                                 " needs about " + std::to_string(estimate) +
                                 " elementary products, ceiling is " + std::to_string(ceiling),
                             order, estimate, ceiling);
}

} // namespace

Complex DerivativeTable::g_derivative(int m) const {
    return factorial_double(m) * g_coeffs[static_cast<std::size_t>(m)];
}

Complex DerivativeTable::f_derivative(int m) const {
    return factorial_double(m) * f_coeffs[static_cast<std::size_t>(m)];
}

DerivativeTable derivative_table(const Graph& g, const EdgeWeightTensor& b, int order,
                                 const ApproxOptions& opts) {
    if (order < 0)
        throw InputError("derivative order must be non-negative");
    if (b.edge_count() != g.edge_count())
        throw InputError("tensor block count does not match the graph's edge count");

    const int edge_count = g.edge_count();
    const int n_eff = std::min(order, edge_count);
    check_cost(edge_count, b.k(), n_eff, opts.cost_ceiling);

    DerivativeTable table;
    table.order = order;
    table.vertex_count = g.vertex_count();
    table.k = b.k();
    table.g_coeffs.assign(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    table.f_coeffs.assign(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    table.g_coeffs[0] = Complex{pow_int(static_cast<double>(b.k()), g.vertex_count()), 0.0};

    unsigned threads = std::max(1u, opts.threads);
    for (int m = 1; m <= n_eff; ++m) {
        std::uint64_t count = binomial(edge_count, m);
        std::uint64_t chunk_total = (count + kSubsetChunk - 1) / kSubsetChunk;
        std::vector<Complex> partial(static_cast<std::size_t>(chunk_total));
        run_chunked(count, kSubsetChunk, threads,
                    [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
                        std::vector<int> combo, vertex_buf, label_buf;
                        std::vector<SubsetEdge> edge_buf;
                        unrank_combination(begin, edge_count, m, combo);
                        ComplexSum acc;
                        for (std::uint64_t r = begin; r < end; ++r) {
                            acc.add(subset_term(g, b, combo, vertex_buf, edge_buf, label_buf));
                            if (r + 1 < end)
                                next_combination(combo, edge_count);
                        }
                        partial[ci] = acc.value();
                    });
        ComplexSum total;
        for (const Complex& p : partial)
            total.add(p);
        table.g_coeffs[static_cast<std::size_t>(m)] = total.value();
    }

    // f coefficients from m*G_m = sum_{j=0}^{m-1} (m-j) G_j F_{m-j}, solved
    // forward; this is the triangular system scaled to series coefficients.
    for (int m = 1; m <= order; ++m) {
        ComplexSum re, im;
        Complex lead = static_cast<double>(m) * table.g_coeffs[static_cast<std::size_t>(m)];
        re.add(lead.real());
        im.add(lead.imag());
        for (int j = 1; j < m; ++j) {
            Complex t = -static_cast<double>(m - j) * table.g_coeffs[static_cast<std::size_t>(j)] *
                        table.f_coeffs[static_cast<std::size_t>(m - j)];
            re.add(t.real());
            im.add(t.imag());
        }
        table.f_coeffs[static_cast<std::size_t>(m)] =
            Complex{re.value(), im.value()} / (static_cast<double>(m) * table.g_coeffs[0]);
    }
    return table;
}

std::vector<Complex> g_derivatives(const Graph& g, const EdgeWeightTensor& b, int order,
                                   const ApproxOptions& opts) {
    DerivativeTable table = derivative_table(g, b, order, opts);
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m)
        out[static_cast<std::size_t>(m)] = table.g_derivative(m);
    return out;
}

std::vector<Complex> f_derivatives(const std::vector<Complex>& g_derivs) {
    if (g_derivs.empty())
        throw InputError("f_derivatives: need at least g(0)");
    if (g_derivs[0] == Complex{0.0, 0.0})
        throw InputError("f_derivatives: g(0) must be nonzero");
    int n = static_cast<int>(g_derivs.size()) - 1;
    std::vector<Complex> f(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        Complex rhs = g_derivs[static_cast<std::size_t>(m)];
        double binom = 1.0; // C(m-1, j), advanced multiplicatively
        for (int j = 1; j < m; ++j) {
            binom *= static_cast<double>(m - j) / static_cast<double>(j);
            rhs -= binom * g_derivs[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(m - j - 1)];
        }
        f[static_cast<std::size_t>(m - 1)] = rhs / g_derivs[0];
    }
    return f;
}

Complex taylor_log_estimate(const DerivativeTable& table) {
    ComplexSum sum;
    for (int m = 1; m <= table.order; ++m)
        sum.add(table.f_coeffs[static_cast<std::size_t>(m)]);
    return static_cast<double>(table.vertex_count) * std::log(static_cast<double>(table.k)) +
           sum.value();
}

double error_bound(long long edge_count, double beta, int order) {
    if (!(beta > 1.0))
        throw InputError("error_bound: beta must exceed 1");
    if (edge_count < 0 || order < 0)
        throw InputError("error_bound: negative argument");
    return static_cast<double>(edge_count) /
           ((static_cast<double>(order) + 1.0) * std::pow(beta, order) * (beta - 1.0));
}

int select_order(long long edge_count, double beta, double eps_rel) {
    if (!(eps_rel > 0.0 && eps_rel < 1.0))
        throw InputError("select_order: eps_rel must lie in (0, 1)");
    double target = std::log1p(eps_rel);
    constexpr int kOrderCap = 1000000;
    for (int n = 0; n <= kOrderCap; ++n)
        if (error_bound(edge_count, beta, n) <= target)
            return n;
    throw InputError("select_order: order exceeds 1e6 (beta too close to 1)");
}

ApproxResult approximate_q(const Graph& g, const EdgeWeightTensor& b, double eps_rel,
                           const ApproxOptions& opts) {
    if (!(eps_rel > 0.0 && eps_rel < 1.0))
        throw InputError("approximate_q: eps_rel must lie in (0, 1)");
    if (b.edge_count() != g.edge_count())
        throw InputError("tensor block count does not match the graph's edge count");

    const int vertex_count = g.vertex_count();
    const long long edge_count = g.edge_count();
    ApproxResult result;

    if (edge_count == 0) {
        // No certificate needed: Q = k^|V| exactly.
        double value = pow_int(static_cast<double>(b.k()), vertex_count);
        result.log_estimate = Complex{vertex_count * std::log(static_cast<double>(b.k())), 0.0};
        result.value_estimate = Complex{value, 0.0};
        GammaRow row = gamma_table(1);
        result.certificate = {0.0, row.gamma, row.gamma, row.beta, true};
        return result;
    }

    int max_degree = degrees(g).max_degree;
    result.certificate = polydisc_certificate(b, max_degree);
    if (!result.certificate.passed)
        throw CertificateError("tensor outside the zero-free polydisc: delta = " +
                                   std::to_string(result.certificate.delta) +
                                   " exceeds gamma/max_degree = " +
                                   std::to_string(result.certificate.delta_max),
                               result.certificate.delta, result.certificate.delta_max);

    int order = opts.order_override >= 0
                    ? opts.order_override
                    : select_order(edge_count, result.certificate.beta, eps_rel);

    DerivativeTable table = derivative_table(g, b, order, opts);

    ComplexSum fsum;
    for (int m = 1; m <= order; ++m)
        fsum.add(table.f_coeffs[static_cast<std::size_t>(m)]);
    Complex tail = fsum.value();

    result.order = order;
    result.log_estimate =
        Complex{vertex_count * std::log(static_cast<double>(b.k())), 0.0} + tail;
    result.value_estimate =
        pow_int(static_cast<double>(b.k()), vertex_count) * std::exp(tail);
    result.additive_log_bound = error_bound(edge_count, result.certificate.beta, order);
    result.relative_bound = std::expm1(result.additive_log_bound);
    return result;
}

} // namespace qhom
