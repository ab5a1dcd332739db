#pragma once

#include <limits>
#include <string>

namespace qhom {

// Solver tolerances, fixed so golden tests are reproducible.
inline constexpr double kThetaResidualTol = 1e-9;
inline constexpr double kDerivedValueTol = 1e-12;

/// One row of the piecewise constants table: gamma admits a tensor to the
/// approximation algorithm, alpha is the zero-freeness radius constant, and
/// beta = alpha/gamma is the radius ratio entering the error bound.
struct GammaRow {
    double gamma;
    double alpha;
    double beta;
};

/// Piecewise rule: (0.34, 0.35, 35/34) for max degree < 3,
/// (0.45, 0.46, 46/45) for 3 <= max degree < 30, (0.54, 0.55, 55/54) above.
GammaRow gamma_table(int max_degree);

/// Regime of the fixed-point equation for theta: asymptotic uses
/// theta = 2a / ((1-a) cos(theta/2)), an explicit degree D uses
/// theta = 2a / ((1-a/D) cos(theta/2)).
struct ThetaRegime {
    static ThetaRegime asymptotic() { return {true, 0}; }
    static ThetaRegime for_degree(int max_degree) { return {false, max_degree}; }

    bool is_asymptotic;
    int max_degree;
};

struct ConstantSolution {
    double alpha = 0.0;
    std::string delta_assumption; // "asymptotic" or "delta=<D>"
    double theta = 0.0;           // in (0, 2*pi/3) when converged
    double tau = 0.0;             // cos(theta/2)
    bool converged = false;
    double residual = std::numeric_limits<double>::quiet_NaN();
};

/// Solves the fixed-point equation for theta in (0, 2*pi/3), returning the
/// smallest root. Reports converged=false when no root exists in the bracket.
ConstantSolution solve_theta(double alpha, ThetaRegime regime);

} // namespace qhom
