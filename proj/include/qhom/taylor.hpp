#pragma once

#include "qhom/exact.hpp"
#include "qhom/graph.hpp"
#include "qhom/numeric.hpp"
#include "qhom/weights.hpp"

namespace qhom {

struct ApproxOptions {
    unsigned threads = 1;
    double cost_ceiling = 1e9; // estimated elementary products
    int order_override = -1;   // < 0: pick the order via select_order
};

/// Taylor data of g(t) = Q(J + t(B - J)) at t = 0, stored as series
/// coefficients g^(m)(0)/m! and f^(m)(0)/m! (f = ln g). Coefficients stay
/// O(1) where raw derivatives of f grow factorially and overflow double
/// near order 170, which small eps_rel targets routinely exceed.
struct DerivativeTable {
    int order = 0;
    int vertex_count = 0;
    int k = 1;
    std::vector<Complex> g_coeffs; // m = 0..order
    std::vector<Complex> f_coeffs; // m = 0..order, [0] unused (= 0)

    /// Raw derivative m! * coeff; overflows to inf for m beyond ~170.
    Complex g_derivative(int m) const;
    Complex f_derivative(int m) const;
};

DerivativeTable derivative_table(const Graph& g, const EdgeWeightTensor& b, int order,
                                 const ApproxOptions& opts = {});

/// Raw derivatives g^(m)(0) for m = 0..order. Orders above |E| are exact
/// zeros (g is a polynomial of degree <= |E|), not an error.
std::vector<Complex> g_derivatives(const Graph& g, const EdgeWeightTensor& b, int order,
                                   const ApproxOptions& opts = {});

/// Solves the triangular system g^(m) = sum_j C(m-1, j) g^(j) f^(m-j) forward
/// for the raw derivatives f^(m)(0), m = 1..n; result[m-1] = f^(m)(0).
std::vector<Complex> f_derivatives(const std::vector<Complex>& g_derivs);

/// |V| ln k + sum_{m=1..order} f^(m)(0)/m!.
Complex taylor_log_estimate(const DerivativeTable& table);

/// Additive error of the order-n Taylor estimate under a zero-free radius
/// ratio beta: |E| / ((n+1) beta^n (beta-1)).
double error_bound(long long edge_count, double beta, int order);

/// Smallest n whose error bound is at most ln(1 + eps_rel); that additive
/// log error guarantees relative error <= eps_rel on the value.
int select_order(long long edge_count, double beta, double eps_rel);

struct ApproxResult {
    Complex log_estimate;
    Complex value_estimate;
    int order = 0;
    double additive_log_bound = 0.0;
    double relative_bound = 0.0;
    ZeroFreeCertificate certificate;
};

/// Full pipeline: certificate -> order selection -> derivatives -> triangular
/// solve -> truncated Taylor sum, with the bound fields filled in.
ApproxResult approximate_q(const Graph& g, const EdgeWeightTensor& b, double eps_rel,
                           const ApproxOptions& opts = {});

} // namespace qhom
