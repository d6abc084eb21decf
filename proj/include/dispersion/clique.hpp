#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dispersion/geom.hpp"
#include "dispersion/result.hpp"

namespace dispersion {

/// Dense boolean matrix, one 64-bit word per 64 columns, rows padded to whole words.
class BitMatrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        Word& w = data_[r * stride_ + c / kWordBits];
        const Word bit = Word{1} << (c % kWordBits);
        w = value ? (w | bit) : (w & ~bit);
    }

    std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }

    std::size_t count() const noexcept;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// Boolean product C[i][j] = OR_t A[i][t] AND B[t][j], by OR-ing rows of B.
/// `threads` > 1 splits output rows across OpenMP threads.
BitMatrix bool_matrix_multiply(const BitMatrix& a, const BitMatrix& b, int threads = 1);

/// Plain triple loop over single bits. Reference for bool_matrix_multiply.
BitMatrix bool_matrix_multiply_naive(const BitMatrix& a, const BitMatrix& b);

/// Symmetric positive edge weights of a complete graph on n vertices, row-major.
class WeightedCompleteGraph {
public:
    WeightedCompleteGraph() = default;
    /// Validates symmetry and strictly positive finite off-diagonal weights.
    WeightedCompleteGraph(std::size_t n, std::vector<double> weights);

    /// Squared Euclidean distances of a point set. Zero weights from duplicate
    /// points are admitted here, unlike the general constructor.
    static WeightedCompleteGraph from_points(const PointSet& points);

    std::size_t size() const noexcept { return n_; }
    double weight(std::size_t i, std::size_t j) const noexcept { return w_[i * n_ + j]; }

    /// Sorted distinct off-diagonal weights.
    std::vector<double> distinct_weights() const;

private:
    std::size_t n_ = 0;
    std::vector<double> w_;
};

/// Undirected simple graph with one adjacency bitset per vertex.
class ThresholdGraph {
public:
    ThresholdGraph() = default;
    explicit ThresholdGraph(std::size_t n) : adj_(n, n) {}

    std::size_t size() const noexcept { return adj_.rows(); }
    bool adjacent(std::size_t i, std::size_t j) const noexcept { return adj_.get(i, j); }
    void add_edge(std::size_t i, std::size_t j);
    std::span<const BitMatrix::Word> neighbours(std::size_t v) const noexcept { return adj_.row(v); }
    std::size_t edge_count() const noexcept { return adj_.count() / 2; }
    const BitMatrix& adjacency() const noexcept { return adj_; }

    /// True when every edge of this graph is also an edge of `other`.
    bool edges_subset_of(const ThresholdGraph& other) const;

private:
    BitMatrix adj_;
};

/// Edge {i, j} iff weight(i, j) >= threshold.
ThresholdGraph build_threshold_graph(const WeightedCompleteGraph& graph, double threshold);

struct CliqueOptions {
    /// Abort with ResourceError when any part of the auxiliary graph lists more cliques.
    std::size_t max_part_cliques = 2'000'000;
    int threads = 1;
};

/// Answer and, when found, a sorted witness clique.
struct CliqueSearch {
    bool found = false;
    std::vector<Index> witness;
};

/// k-clique detection by splitting k into three near-equal parts and searching
/// for a triangle in the tripartite graph of small cliques.
CliqueSearch find_k_clique(const ThresholdGraph& graph, std::size_t k, const CliqueOptions& options = {});

inline bool has_k_clique(const ThresholdGraph& graph, std::size_t k, const CliqueOptions& options = {}) {
    return find_k_clique(graph, k, options).found;
}

/// Sizes {k1, k2, k3} of the three clique families used for k.
std::array<std::size_t, 3> clique_part_sizes(std::size_t k);

/// Max-min k-dispersion on a weighted complete graph: binary search over the
/// distinct weights for the largest threshold that still admits a k-clique.
DispersionResult solve_graph_dispersion(const WeightedCompleteGraph& graph, std::size_t k,
                                        const CliqueOptions& options = {});

/// Same search on the squared-distance graph of a point set; value2 is a squared distance.
DispersionResult solve_clique(const PointSet& points, std::size_t k, const CliqueOptions& options = {});

}  // namespace dispersion
