#include "qhom/exact.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qhom/errors.hpp"

namespace qhom {

namespace {

void check_budget(int free_vertices, int k, const EnumerationBudget& budget,
                  const char* what) {
    double bits = static_cast<double>(free_vertices) * std::log2(static_cast<double>(k));
    if (bits > budget.bits)
        throw BudgetError(std::string(what) + ": enumeration needs " +
                              std::to_string(bits) + " bits, budget is " +
                              std::to_string(budget.bits) +
                              " (use the approximation path or raise the budget)",
                          bits, budget.bits);
}

// Sums the per-edge products over all label assignments of `free_vertices`
// (ascending vertex order, last vertex fastest), other labels held fixed.
// EdgeValue: (edge index, label u, label v) -> Complex.
template <typename EdgeValue>
Complex enumerate_maps(const Graph& g, int k, std::vector<int>& labels,
                       const std::vector<int>& free_vertices, EdgeValue&& value) {
    ComplexSum total;
    const auto& edges = g.edges();
    for (;;) {
        Complex prod{1.0, 0.0};
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            auto [u, v] = edges[static_cast<std::size_t>(e)];
            prod *= value(e, labels[static_cast<std::size_t>(u)],
                          labels[static_cast<std::size_t>(v)]);
        }
        total.add(prod);

        int idx = static_cast<int>(free_vertices.size()) - 1;
        for (; idx >= 0; --idx) {
            int v = free_vertices[static_cast<std::size_t>(idx)];
            if (++labels[static_cast<std::size_t>(v)] < k)
                break;
            labels[static_cast<std::size_t>(v)] = 0;
        }
        if (idx < 0)
            break;
    }
    return total.value();
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i)
        v[static_cast<std::size_t>(i)] = i;
    return v;
}

} // namespace

Complex exact_q(const Graph& g, const EdgeWeightTensor& b, EnumerationBudget budget) {
    if (b.edge_count() != g.edge_count())
        throw InputError("tensor block count does not match the graph's edge count");
    check_budget(g.vertex_count(), b.k(), budget, "exact_q");
    std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> free = all_vertices(g);
    return enumerate_maps(g, b.k(), labels, free,
                          [&](int e, int lu, int lv) { return b.at(e, lu, lv); });
}

Complex exact_p(const Graph& g, const SymmetricWeightMatrix& a, EnumerationBudget budget) {
    check_budget(g.vertex_count(), a.k(), budget, "exact_p");
    std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> free = all_vertices(g);
    return enumerate_maps(g, a.k(), labels, free,
                          [&](int, int lu, int lv) { return a.at(lu, lv); });
}

Complex exact_restricted_q(const Graph& g, const EdgeWeightTensor& b, const RestrictionSpec& r,
                           EnumerationBudget budget) {
    if (b.edge_count() != g.edge_count())
        throw InputError("tensor block count does not match the graph's edge count");
    if (r.pinned_vertices.size() != r.pinned_labels.size())
        throw InputError("restriction: vertex and label sequences differ in length");
    std::set<int> pinned;
    for (std::size_t i = 0; i < r.pinned_vertices.size(); ++i) {
        int v = r.pinned_vertices[i];
        int l = r.pinned_labels[i];
        if (v < 0 || v >= g.vertex_count())
            throw InputError("restriction: pinned vertex out of range");
        if (l < 0 || l >= b.k())
            throw InputError("restriction: pinned label out of range");
        if (!pinned.insert(v).second)
            throw InputError("restriction: pinned vertices must be distinct");
    }

    std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < r.pinned_vertices.size(); ++i)
        labels[static_cast<std::size_t>(r.pinned_vertices[i])] = r.pinned_labels[i];
    std::vector<int> free;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!pinned.count(v))
            free.push_back(v);
    check_budget(static_cast<int>(free.size()), b.k(), budget, "exact_restricted_q");
    return enumerate_maps(g, b.k(), labels, free,
                          [&](int e, int lu, int lv) { return b.at(e, lu, lv); });
}

long long exact_max_cut(const Graph& g, EnumerationBudget budget) {
    check_budget(g.vertex_count(), 2, budget, "exact_max_cut");
    const auto& edges = g.edges();
    long long best = 0;
    std::uint64_t subsets = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        long long cut = 0;
        for (auto [u, v] : edges)
            cut += ((mask >> u) & 1u) != ((mask >> v) & 1u);
        best = std::max(best, cut);
    }
    return best;
}

} // namespace qhom
