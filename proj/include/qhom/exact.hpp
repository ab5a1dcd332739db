#pragma once

#include "qhom/graph.hpp"
#include "qhom/numeric.hpp"
#include "qhom/weights.hpp"

namespace qhom {

/// Guard on full enumeration: refuses when (#free vertices) * log2(k)
/// exceeds `bits`. A configuration knob, not a hard limit.
struct EnumerationBudget {
    double bits = 40.0;
};

/// Pins vertex sequence W to label sequence L.
struct RestrictionSpec {
    std::vector<int> pinned_vertices;
    std::vector<int> pinned_labels;
};

/// Exact partition function of edge-colored homomorphisms: the sum over all
/// k^|V| maps of the per-edge block products, enumerated in lexicographic map
/// order with compensated accumulation, so results are bit-reproducible.
Complex exact_q(const Graph& g, const EdgeWeightTensor& b, EnumerationBudget budget = {});

/// Exact homomorphism partition function for a uniform matrix; identical
/// enumeration order as exact_q on the lifted tensor, hence bit-equal to it.
Complex exact_p(const Graph& g, const SymmetricWeightMatrix& a, EnumerationBudget budget = {});

/// Partition sum over the maps pinned by the restriction; the budget applies
/// to the free vertices only.
Complex exact_restricted_q(const Graph& g, const EdgeWeightTensor& b, const RestrictionSpec& r,
                           EnumerationBudget budget = {});

/// Maximum cut by enumeration of all 2^|V| vertex subsets.
long long exact_max_cut(const Graph& g, EnumerationBudget budget = {});

} // namespace qhom
