#include "qhom/constants.hpp"

#include <cmath>
#include <numbers>

#include "qhom/errors.hpp"

namespace qhom {

GammaRow gamma_table(int max_degree) {
    if (max_degree < 1)
        throw InputError("gamma_table: max degree must be positive");
    if (max_degree >= 30)
        return {0.54, 0.55, 55.0 / 54.0};
    if (max_degree >= 3)
        return {0.45, 0.46, 46.0 / 45.0};
    return {0.34, 0.35, 35.0 / 34.0};
}

ConstantSolution solve_theta(double alpha, ThetaRegime regime) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InputError("solve_theta: alpha must lie in (0, 1)");
    if (!regime.is_asymptotic && regime.max_degree < 1)
        throw InputError("solve_theta: explicit max degree must be positive");

    double alpha_eff = regime.is_asymptotic
                           ? alpha
                           : alpha / static_cast<double>(regime.max_degree);

    ConstantSolution sol;
    sol.alpha = alpha;
    sol.delta_assumption = regime.is_asymptotic
                               ? std::string("asymptotic")
                               : "delta=" + std::to_string(regime.max_degree);

    // h(theta) = theta*(1-alpha_eff)*cos(theta/2) - 2*alpha. h < 0 at both
    // bracket ends whenever a root exists (the equation has two roots), so
    // scan for the first sign change and bisect there for the smallest root.
    auto h = [&](double t) { return t * (1.0 - alpha_eff) * std::cos(0.5 * t) - 2.0 * alpha; };

    const double lo = 1e-9;
    const double hi = 2.0 * std::numbers::pi / 3.0 - 1e-9;
    const int grid = 8192;

    double a = lo;
    double fa = h(a);
    double b = 0.0, fb = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= grid; ++i) {
        b = lo + (hi - lo) * static_cast<double>(i) / grid;
        fb = h(b);
        if ((fa <= 0.0 && fb > 0.0) || (fa < 0.0 && fb >= 0.0) ||
            (fa >= 0.0 && fb < 0.0) || (fa > 0.0 && fb <= 0.0)) {
            bracketed = true;
            break;
        }
        a = b;
        fa = fb;
    }
    if (!bracketed)
        return sol; // no root in (0, 2*pi/3); reported, not fabricated

    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        double mid = 0.5 * (a + b);
        double fm = h(mid);
        if ((fa <= 0.0) == (fm <= 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }

    double theta = 0.5 * (a + b);
    double rhs = 2.0 * alpha / ((1.0 - alpha_eff) * std::cos(0.5 * theta));
    sol.theta = theta;
    sol.tau = std::cos(0.5 * theta);
    sol.residual = std::abs(theta - rhs);
    sol.converged = sol.residual <= kThetaResidualTol;
    return sol;
}

} // namespace qhom
