#pragma once

// Shared helpers for the test suites: a portable deterministic RNG, small
// graph builders, random instance generators, and independent oracles
// (polynomial fitting, object counters) that never touch the code paths
// they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qhom/exact.hpp"
#include "qhom/graph.hpp"
#include "qhom/numeric.hpp"
#include "qhom/weights.hpp"

namespace testutil {

using qhom::Complex;

// splitmix64; self-contained so sequences are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); } // inclusive

private:
    std::uint64_t state_;
};

inline qhom::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return qhom::Graph(n, std::move(e));
}

inline qhom::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return qhom::Graph(n, std::move(e));
}

inline qhom::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return qhom::Graph(n, std::move(e));
}

inline qhom::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return qhom::Graph(leaves + 1, std::move(e));
}

inline qhom::Graph edgeless_graph(int n) {
    return qhom::Graph(n, {});
}

/// Random graph on `v` vertices with exactly `e` distinct edges.
inline qhom::Graph random_graph(Rng& rng, int v, int e) {
    std::set<std::pair<int, int>> chosen;
    while (static_cast<int>(chosen.size()) < e) {
        int a = rng.below(v);
        int b = rng.below(v);
        if (a == b)
            continue;
        chosen.insert(std::minmax(a, b));
    }
    return qhom::Graph(v, std::vector<std::pair<int, int>>(chosen.begin(), chosen.end()));
}

/// Entry 1 + z with z uniform in the complex disc of the given radius.
inline qhom::EdgeWeightTensor random_polydisc_tensor(Rng& rng, int k, int edges, double radius,
                                                     bool complex_entries = true) {
    qhom::EdgeWeightTensor b(k, edges);
    for (int e = 0; e < edges; ++e)
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                double r = radius * std::sqrt(rng.uniform());
                double phi = complex_entries ? rng.range(0.0, 2.0 * 3.14159265358979323846)
                                             : (rng.below(2) == 0 ? 0.0 : 3.14159265358979323846);
                b.set(e, i, j, Complex{1.0 + r * std::cos(phi), r * std::sin(phi)});
            }
    return b;
}

/// J + t (B - J), evaluated entrywise.
inline qhom::EdgeWeightTensor blend_tensor(const qhom::EdgeWeightTensor& b, double t) {
    qhom::EdgeWeightTensor out(b.k(), b.edge_count());
    for (int e = 0; e < b.edge_count(); ++e)
        for (int i = 0; i < b.k(); ++i)
            for (int j = i; j < b.k(); ++j)
                out.set(e, i, j, Complex{1.0, 0.0} + t * (b.at(e, i, j) - Complex{1.0, 0.0}));
    return out;
}

/// Monomial coefficients of the polynomial interpolating (ts[i], ys[i]),
/// via Newton divided differences. Independent of the derivative code.
inline std::vector<Complex> fit_polynomial(const std::vector<double>& ts,
                                           const std::vector<Complex>& ys) {
    std::size_t n = ts.size();
    std::vector<Complex> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - level]);
    // Horner expansion of the Newton form into monomial coefficients.
    std::vector<Complex> coeff(n, Complex{0.0, 0.0});
    coeff[0] = dd[n - 1];
    std::size_t degree = 0;
    for (std::size_t i = n - 1; i-- > 0;) {
        ++degree;
        for (std::size_t j = degree; j > 0; --j)
            coeff[j] = coeff[j - 1] - ts[i] * coeff[j];
        coeff[0] = dd[i] - ts[i] * coeff[0];
    }
    return coeff;
}

/// Brute-force proper k-coloring count.
inline long long count_proper_colorings(const qhom::Graph& g, int k) {
    std::vector<int> col(static_cast<std::size_t>(g.vertex_count()), 0);
    long long count = 0;
    for (;;) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
        count += ok;
        int idx = g.vertex_count() - 1;
        for (; idx >= 0; --idx) {
            if (++col[static_cast<std::size_t>(idx)] < k)
                break;
            col[static_cast<std::size_t>(idx)] = 0;
        }
        if (idx < 0)
            break;
    }
    return count;
}

/// Brute-force independent-set count.
inline long long count_independent_sets(const qhom::Graph& g) {
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (((mask >> u) & 1u) && ((mask >> v) & 1u)) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

struct ColorPairStats {
    long long homomorphisms = 0; // color-preserving maps
    int min_violations = 0;      // min over maps of mismatched G-edges
};

/// Enumerates all maps V(G) -> V(H) and tallies color-preserving
/// homomorphisms and the minimum number of violated edges.
inline ColorPairStats colored_pair_stats(const qhom::Graph& g,
                                         const std::vector<std::string>& g_colors,
                                         const qhom::ColoredGraph& h) {
    int k = h.graph.vertex_count();
    std::set<std::pair<std::pair<int, int>, std::string>> h_edges;
    for (int e = 0; e < h.graph.edge_count(); ++e)
        h_edges.insert({h.graph.edges()[static_cast<std::size_t>(e)],
                        h.edge_colors[static_cast<std::size_t>(e)]});

    ColorPairStats stats;
    stats.min_violations = g.edge_count() + 1;
    std::vector<int> phi(static_cast<std::size_t>(g.vertex_count()), 0);
    for (;;) {
        int violations = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
            auto pair = std::minmax(phi[static_cast<std::size_t>(u)],
                                    phi[static_cast<std::size_t>(v)]);
            if (!h_edges.count({pair, g_colors[static_cast<std::size_t>(e)]}))
                ++violations;
        }
        if (violations == 0)
            ++stats.homomorphisms;
        stats.min_violations = std::min(stats.min_violations, violations);

        int idx = g.vertex_count() - 1;
        for (; idx >= 0; --idx) {
            if (++phi[static_cast<std::size_t>(idx)] < k)
                break;
            phi[static_cast<std::size_t>(idx)] = 0;
        }
        if (idx < 0)
            break;
    }
    return stats;
}

inline bool rel_close(Complex a, Complex b, double tol) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= tol * scale;
}

inline bool rel_close(double a, double b, double tol) {
    return rel_close(Complex{a, 0.0}, Complex{b, 0.0}, tol);
}

} // namespace testutil
