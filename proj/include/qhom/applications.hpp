#pragma once

#include <optional>

#include "qhom/exact.hpp"
#include "qhom/graph.hpp"
#include "qhom/taylor.hpp"
#include "qhom/weights.hpp"

namespace qhom {

enum class EvalMode { exact, approx };

enum class SoftInterpretation { coloring, independent_set, colored_homomorphism };

struct AppOptions {
    EnumerationBudget budget;
    ApproxOptions approx;
    /// Overrides the gamma drawn from gamma_table; voids the approx-mode
    /// guarantee (soft matrices are polydisc-valid only for table gammas).
    std::optional<double> gamma_override;
};

/// A soft weighted sum normalized by (1 + gamma/Delta)^|E|: every valid
/// combinatorial object counts 1, every violating configuration counts a
/// positive weight below 1.
struct SoftSumResult {
    double normalized_value = 0.0;
    ApproxResult raw;
    double gamma = 0.0;
    SoftInterpretation interpretation = SoftInterpretation::coloring;
    bool gamma_overridden = false;
};

SoftSumResult soft_coloring_sum(const Graph& g, int k, double eps_rel, EvalMode mode,
                                const AppOptions& opts = {});

SoftSumResult soft_independent_set_sum(const Graph& g, double eps_rel, EvalMode mode,
                                       const AppOptions& opts = {});

/// Sandwich bounds on the maximum cut derived from P(A_eps).
struct CutBounds {
    double lower = 0.0;
    double upper = 0.0;
    double eps_param = 0.0;
    double p_value = 0.0; // P(A_eps) or its approximation
    EvalMode mode = EvalMode::exact;
};

CutBounds maxcut_bounds(const Graph& g, double eps_param, double eps_rel, EvalMode mode,
                        const AppOptions& opts = {});

enum class Verdict { far, many, inconclusive };

struct DistinguishVerdict {
    double normalized_value = 0.0;
    double far_threshold = 0.0;  // k^|V| e^{-2 gamma w / Delta}
    double many_threshold = 0.0; // twice the far threshold
    Verdict verdict = Verdict::inconclusive;
    int w = 0;
    double gamma = 0.0;
    ApproxResult raw;
};

/// Tells pairs with many color-preserving homomorphisms G -> H apart from
/// pairs where every map misses at least w edges; "inconclusive" covers the
/// gap between the two certified cases (with 5% guard margins).
DistinguishVerdict distinguish_homomorphisms(const Graph& g,
                                             const std::vector<std::string>& g_colors,
                                             const ColoredGraph& h, int w, double eps_rel,
                                             EvalMode mode, const AppOptions& opts = {});

} // namespace qhom
