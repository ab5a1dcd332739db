#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhom/graph.hpp"
#include "qhom/numeric.hpp"

namespace qhom {

/// Number of unordered label pairs, k(k+1)/2.
int pair_count(int k);

/// Canonical index of the unordered pair {i, j} in the triangular layout
/// (0,0),(0,1),...,(0,k-1),(1,1),...,(k-1,k-1). Symmetric in i and j.
int pair_index(int i, int j, int k);

/// k x k symmetric complex matrix; only the i <= j triangle is stored, so
/// symmetry holds by construction.
class SymmetricWeightMatrix {
public:
    explicit SymmetricWeightMatrix(int k, Complex fill = Complex{1.0, 0.0});

    int k() const { return k_; }
    Complex at(int i, int j) const;
    void set(int i, int j, Complex value);
    const std::vector<Complex>& packed() const { return entries_; }

private:
    int k_;
    std::vector<Complex> entries_;
};

/// One symmetric k x k block of complex weights per canonical edge index.
class EdgeWeightTensor {
public:
    EdgeWeightTensor(int k, int edge_count, Complex fill = Complex{1.0, 0.0});

    static EdgeWeightTensor all_ones(int k, int edge_count);

    int k() const { return k_; }
    int edge_count() const { return edge_count_; }
    Complex at(int edge, int i, int j) const;
    void set(int edge, int i, int j, Complex value);
    /// Packed triangular block of the given edge, length pair_count(k).
    const Complex* block(int edge) const;

private:
    int k_;
    int edge_count_;
    std::vector<Complex> data_;
};

struct ZeroFreeCertificate {
    double delta = 0.0;     // max over entries of |1 - b|
    double gamma = 0.0;     // admission constant for this max degree
    double delta_max = 0.0; // gamma / max_degree
    double beta = 1.0;      // guaranteed zero-free radius ratio on admission
    bool passed = false;
};

/// b^{uv}_{ij} = a_{ij} on every edge, so Q of the result equals P of a.
EdgeWeightTensor lift_matrix(const SymmetricWeightMatrix& a, const Graph& g);

SymmetricWeightMatrix coloring_matrix_hard(int k);
SymmetricWeightMatrix coloring_matrix_soft(int k, double gamma, int max_degree);
SymmetricWeightMatrix independent_set_matrix_hard();
SymmetricWeightMatrix independent_set_matrix_soft(double gamma, int max_degree);
SymmetricWeightMatrix maxcut_matrix(double eps);

/// Weights for edge-colored homomorphisms of g into h: an entry is "matched"
/// when the G-edge and the label pair {i, j} are same-colored edges of G and
/// H. Hard mode scores matched 1 / unmatched 0; soft mode 1 +- gamma/Delta.
EdgeWeightTensor colored_hom_tensor(const Graph& g, const std::vector<std::string>& g_colors,
                                    const ColoredGraph& h, double gamma, int max_degree,
                                    bool soft);

ZeroFreeCertificate polydisc_certificate(const EdgeWeightTensor& b, int max_degree);

/// Parsed weight file: "k" plus either a full matrix or per-edge blocks.
struct WeightsFile {
    int k = 0;
    std::optional<SymmetricWeightMatrix> matrix;
    std::optional<EdgeWeightTensor> blocks;
};

WeightsFile parse_weights(const std::string& json_text);

} // namespace qhom
