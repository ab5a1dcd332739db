#include "qhom/weights.hpp"

#include <cmath>
#include <map>

#include <json.hpp>

#include "qhom/constants.hpp"
#include "qhom/errors.hpp"

namespace qhom {

int pair_count(int k) {
    return k * (k + 1) / 2;
}

int pair_index(int i, int j, int k) {
    if (i < 0 || i >= k || j < 0 || j >= k)
        throw InputError("pair_index: label out of range [0, " + std::to_string(k) + ")");
    if (i > j)
        std::swap(i, j);
    return i * k - i * (i - 1) / 2 + (j - i);
}

SymmetricWeightMatrix::SymmetricWeightMatrix(int k, Complex fill) : k_(k) {
    if (k_ < 1)
        throw InputError("weight matrix needs k >= 1");
    entries_.assign(static_cast<std::size_t>(pair_count(k_)), fill);
}

Complex SymmetricWeightMatrix::at(int i, int j) const {
    return entries_[static_cast<std::size_t>(pair_index(i, j, k_))];
}

void SymmetricWeightMatrix::set(int i, int j, Complex value) {
    entries_[static_cast<std::size_t>(pair_index(i, j, k_))] = value;
}

EdgeWeightTensor::EdgeWeightTensor(int k, int edge_count, Complex fill)
    : k_(k), edge_count_(edge_count) {
    if (k_ < 1)
        throw InputError("weight tensor needs k >= 1");
    if (edge_count_ < 0)
        throw InputError("weight tensor needs edge_count >= 0");
    data_.assign(static_cast<std::size_t>(edge_count_) *
                     static_cast<std::size_t>(pair_count(k_)),
                 fill);
}

EdgeWeightTensor EdgeWeightTensor::all_ones(int k, int edge_count) {
    return EdgeWeightTensor(k, edge_count);
}

Complex EdgeWeightTensor::at(int edge, int i, int j) const {
    return block(edge)[pair_index(i, j, k_)];
}

void EdgeWeightTensor::set(int edge, int i, int j, Complex value) {
    if (edge < 0 || edge >= edge_count_)
        throw InputError("edge index out of range");
    data_[static_cast<std::size_t>(edge) * static_cast<std::size_t>(pair_count(k_)) +
          static_cast<std::size_t>(pair_index(i, j, k_))] = value;
}

const Complex* EdgeWeightTensor::block(int edge) const {
    if (edge < 0 || edge >= edge_count_)
        throw InputError("edge index out of range");
    return data_.data() +
           static_cast<std::size_t>(edge) * static_cast<std::size_t>(pair_count(k_));
}

EdgeWeightTensor lift_matrix(const SymmetricWeightMatrix& a, const Graph& g) {
    EdgeWeightTensor b(a.k(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        for (int i = 0; i < a.k(); ++i)
            for (int j = i; j < a.k(); ++j)
                b.set(e, i, j, a.at(i, j));
    return b;
}

SymmetricWeightMatrix coloring_matrix_hard(int k) {
    SymmetricWeightMatrix a(k, Complex{1.0, 0.0});
    for (int i = 0; i < k; ++i)
        a.set(i, i, Complex{0.0, 0.0});
    return a;
}

SymmetricWeightMatrix coloring_matrix_soft(int k, double gamma, int max_degree) {
    if (max_degree < 1)
        throw InputError("soft coloring matrix needs max degree >= 1");
    double d = gamma / max_degree;
    SymmetricWeightMatrix a(k, Complex{1.0 + d, 0.0});
    for (int i = 0; i < k; ++i)
        a.set(i, i, Complex{1.0 - d, 0.0});
    return a;
}

SymmetricWeightMatrix independent_set_matrix_hard() {
    // label 0 = "vertex in the set"
    SymmetricWeightMatrix a(2, Complex{1.0, 0.0});
    a.set(0, 0, Complex{0.0, 0.0});
    return a;
}

SymmetricWeightMatrix independent_set_matrix_soft(double gamma, int max_degree) {
    if (max_degree < 1)
        throw InputError("soft independent-set matrix needs max degree >= 1");
    double d = gamma / max_degree;
    SymmetricWeightMatrix a(2, Complex{1.0 + d, 0.0});
    a.set(0, 0, Complex{1.0 - d, 0.0});
    return a;
}

SymmetricWeightMatrix maxcut_matrix(double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw InputError("maxcut matrix needs eps in (0, 1)");
    SymmetricWeightMatrix a(2, Complex{1.0, 0.0});
    a.set(0, 0, Complex{eps, 0.0});
    a.set(1, 1, Complex{eps, 0.0});
    return a;
}

EdgeWeightTensor colored_hom_tensor(const Graph& g, const std::vector<std::string>& g_colors,
                                    const ColoredGraph& h, double gamma, int max_degree,
                                    bool soft) {
    if (static_cast<int>(g_colors.size()) != g.edge_count())
        throw InputError("edge color list does not match the graph's edge count");
    if (soft && max_degree < 1)
        throw InputError("soft colored-homomorphism tensor needs max degree >= 1");

    int k = h.graph.vertex_count();
    std::map<std::pair<int, int>, const std::string*> h_color;
    for (int e = 0; e < h.graph.edge_count(); ++e)
        h_color[h.graph.edges()[static_cast<std::size_t>(e)]] =
            &h.edge_colors[static_cast<std::size_t>(e)];

    double d = soft ? gamma / max_degree : 0.0;
    Complex matched = soft ? Complex{1.0 + d, 0.0} : Complex{1.0, 0.0};
    Complex unmatched = soft ? Complex{1.0 - d, 0.0} : Complex{0.0, 0.0};

    EdgeWeightTensor b(k, g.edge_count(), unmatched);
    for (int e = 0; e < g.edge_count(); ++e) {
        const std::string& color = g_colors[static_cast<std::size_t>(e)];
        for (const auto& [pair, h_col] : h_color)
            if (*h_col == color)
                b.set(e, pair.first, pair.second, matched);
    }
    return b;
}

ZeroFreeCertificate polydisc_certificate(const EdgeWeightTensor& b, int max_degree) {
    if (max_degree < 1)
        throw InputError("polydisc certificate needs max degree >= 1");
    double delta = 0.0;
    for (int e = 0; e < b.edge_count(); ++e) {
        const Complex* blk = b.block(e);
        for (int p = 0; p < pair_count(b.k()); ++p)
            delta = std::max(delta, std::abs(Complex{1.0, 0.0} - blk[p]));
    }
    GammaRow row = gamma_table(max_degree);
    ZeroFreeCertificate cert;
    cert.delta = delta;
    cert.gamma = row.gamma;
    cert.delta_max = row.gamma / max_degree;
    cert.beta = row.beta;
    cert.passed = delta <= cert.delta_max;
    return cert;
}

namespace {

Complex parse_complex(const nlohmann::json& v, const std::string& where) {
    if (v.is_number())
        return Complex{v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return Complex{v[0].get<double>(), v[1].get<double>()};
    throw InputError("weights: " + where + " must be a number or [re, im]");
}

} // namespace

WeightsFile parse_weights(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("weights: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("weights: top level must be an object");
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw InputError("weights: missing integer field 'k'");
    WeightsFile out;
    out.k = doc["k"].get<int>();
    if (out.k < 1)
        throw InputError("weights: k must be positive");

    bool has_matrix = doc.contains("matrix");
    bool has_blocks = doc.contains("blocks");
    if (has_matrix == has_blocks)
        throw InputError("weights: exactly one of 'matrix' or 'blocks' is required");

    if (has_matrix) {
        const auto& m = doc["matrix"];
        if (!m.is_array() || static_cast<int>(m.size()) != out.k)
            throw InputError("weights: 'matrix' must be a k x k array");
        SymmetricWeightMatrix a(out.k);
        for (int i = 0; i < out.k; ++i) {
            const auto& row = m[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != out.k)
                throw InputError("weights: 'matrix' row " + std::to_string(i) +
                                 " must have k entries");
            for (int j = 0; j < out.k; ++j) {
                Complex v = parse_complex(row[static_cast<std::size_t>(j)],
                                          "matrix[" + std::to_string(i) + "][" +
                                              std::to_string(j) + "]");
                if (j < i) {
                    if (v != a.at(i, j))
                        throw InputError("weights: matrix not symmetric at (" +
                                         std::to_string(i) + ", " + std::to_string(j) + ")");
                } else {
                    a.set(i, j, v);
                }
            }
        }
        out.matrix = std::move(a);
    } else {
        const auto& bl = doc["blocks"];
        if (!bl.is_array())
            throw InputError("weights: 'blocks' must be an array");
        int pairs = pair_count(out.k);
        EdgeWeightTensor t(out.k, static_cast<int>(bl.size()));
        for (int e = 0; e < t.edge_count(); ++e) {
            const auto& blk = bl[static_cast<std::size_t>(e)];
            if (!blk.is_array() || static_cast<int>(blk.size()) != pairs)
                throw InputError("weights: block " + std::to_string(e) + " must have k(k+1)/2 = " +
                                 std::to_string(pairs) + " entries");
            int p = 0;
            for (int i = 0; i < out.k; ++i)
                for (int j = i; j < out.k; ++j, ++p)
                    t.set(e, i, j,
                          parse_complex(blk[static_cast<std::size_t>(p)],
                                        "blocks[" + std::to_string(e) + "][" +
                                            std::to_string(p) + "]"));
        }
        out.blocks = std::move(t);
    }
    return out;
}

} // namespace qhom
