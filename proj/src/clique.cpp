#include "dispersion/clique.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dispersion/errors.hpp"

namespace dispersion {

using Word = BitMatrix::Word;

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

std::size_t BitMatrix::count() const noexcept {
    std::size_t total = 0;
    for (Word w : data_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

namespace {

template <typename Fn>
void for_each_bit(std::span<const Word> words, Fn&& fn) {
    for (std::size_t w = 0; w < words.size(); ++w) {
        Word bits = words[w];
        while (bits) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
            fn(w * BitMatrix::kWordBits + bit);
            bits &= bits - 1;
        }
    }
}

void check_product_shape(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw UsageError("boolean product shape mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

}  // namespace

BitMatrix bool_matrix_multiply(const BitMatrix& a, const BitMatrix& b, int threads) {
    check_product_shape(a, b);
    if (threads < 1) throw UsageError("thread count must be positive");
    BitMatrix c(a.rows(), b.cols());
    const std::size_t stride = c.words_per_row();
#pragma omp parallel for num_threads(threads) schedule(dynamic, 32) if (threads > 1)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(a.rows()); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        std::span<Word> out = c.row(i);
        for_each_bit(a.row(i), [&](std::size_t t) {
            const std::span<const Word> src = b.row(t);
            for (std::size_t w = 0; w < stride; ++w) out[w] |= src[w];
        });
    }
    return c;
}

BitMatrix bool_matrix_multiply_naive(const BitMatrix& a, const BitMatrix& b) {
    check_product_shape(a, b);
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool v = false;
            for (std::size_t t = 0; t < a.cols() && !v; ++t) v = a.get(i, t) && b.get(t, j);
            c.set(i, j, v);
        }
    return c;
}

// ---------------------------------------------------------------------------

WeightedCompleteGraph::WeightedCompleteGraph(std::size_t n, std::vector<double> weights)
    : n_(n), w_(std::move(weights)) {
    if (w_.size() != n_ * n_)
        throw UsageError("weight matrix must have n*n = " + std::to_string(n_ * n_) + " entries");
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double w = weight(i, j);
            if (w != weight(j, i))
                throw UsageError("weight matrix is not symmetric at (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
            if (!(w > 0.0) || !std::isfinite(w))
                throw UsageError("edge weights must be positive and finite");
        }
}

WeightedCompleteGraph WeightedCompleteGraph::from_points(const PointSet& points) {
    WeightedCompleteGraph g;
    g.n_ = points.size();
    g.w_ = squared_distance_matrix(points);
    return g;
}

std::vector<double> WeightedCompleteGraph::distinct_weights() const {
    std::vector<double> out;
    out.reserve(n_ * (n_ - (n_ ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) out.push_back(weight(i, j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void ThresholdGraph::add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw UsageError("self-loops are not allowed");
    adj_.set(i, j);
    adj_.set(j, i);
}

bool ThresholdGraph::edges_subset_of(const ThresholdGraph& other) const {
    if (size() != other.size()) return false;
    for (std::size_t v = 0; v < size(); ++v) {
        const auto mine = neighbours(v), theirs = other.neighbours(v);
        for (std::size_t w = 0; w < mine.size(); ++w)
            if (mine[w] & ~theirs[w]) return false;
    }
    return true;
}

ThresholdGraph build_threshold_graph(const WeightedCompleteGraph& graph, double threshold) {
    if (!(threshold >= 0.0)) throw UsageError("threshold must be non-negative");
    const std::size_t n = graph.size();
    ThresholdGraph h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (graph.weight(i, j) >= threshold) h.add_edge(i, j);
    return h;
}

// ---------------------------------------------------------------------------

std::array<std::size_t, 3> clique_part_sizes(std::size_t k) {
    const std::size_t k1 = k / 3;
    const std::size_t k2 = (k + 1) / 3;
    return {k1, k2, k - k1 - k2};
}

namespace {

// All cliques of one size, with the common neighbourhood of each.
struct CliqueList {
    std::size_t clique_size = 0;
    std::size_t count = 0;
    std::vector<Index> vertices;  // flat, clique_size per entry
    BitMatrix common;             // count x n

    std::span<const Index> clique(std::size_t c) const {
        return {vertices.data() + c * clique_size, clique_size};
    }
};

class CliqueLister {
public:
    CliqueLister(const ThresholdGraph& graph, std::size_t size, std::size_t cap)
        : g_(graph), size_(size), cap_(cap), stride_(graph.adjacency().words_per_row()),
          cand_((size + 1) * stride_, 0) {}

    CliqueList run() {
        const std::size_t n = g_.size();
        for (std::size_t v = 0; v < n; ++v) cand_[v / 64] |= Word{1} << (v % 64);
        extend(0);

        CliqueList list;
        list.clique_size = size_;
        list.count = found_.size() / size_;
        list.vertices = std::move(found_);
        list.common = BitMatrix(list.count, n);
        for (std::size_t c = 0; c < list.count; ++c) {
            std::span<Word> row = list.common.row(c);
            std::fill(row.begin(), row.end(), ~Word{0});
            for (Index v : list.clique(c)) {
                const auto nb = g_.neighbours(v);
                for (std::size_t w = 0; w < stride_; ++w) row[w] &= nb[w];
            }
        }
        return list;
    }

private:
    void extend(std::size_t depth) {
        if (depth == size_) {
            if (found_.size() / size_ >= cap_)
                throw ResourceError("clique part exceeds " + std::to_string(cap_) +
                                    " cliques; use the exact solver for this instance");
            found_.insert(found_.end(), current_.begin(), current_.end());
            return;
        }
        const std::span<const Word> cand(cand_.data() + depth * stride_, stride_);
        const std::span<Word> next(cand_.data() + (depth + 1) * stride_, stride_);
        for_each_bit(cand, [&](std::size_t v) {
            // candidates for the next level: later vertices adjacent to everything chosen
            const auto nb = g_.neighbours(v);
            for (std::size_t w = 0; w < stride_; ++w) next[w] = cand[w] & nb[w];
            const std::size_t word = v / 64, bit = v % 64;
            for (std::size_t w = 0; w < word; ++w) next[w] = 0;
            next[word] &= bit == 63 ? 0 : (~Word{0} << (bit + 1));
            current_.push_back(static_cast<Index>(v));
            extend(depth + 1);
            current_.pop_back();
        });
    }

    const ThresholdGraph& g_;
    std::size_t size_, cap_, stride_;
    std::vector<Word> cand_;
    std::vector<Index> current_;
    std::vector<Index> found_;
};

// Bit (x, y) iff every vertex of clique y is adjacent to every vertex of clique x.
BitMatrix compatibility(const CliqueList& from, const CliqueList& to, int threads) {
    BitMatrix m(from.count, to.count);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 64) if (threads > 1)
    for (std::ptrdiff_t xx = 0; xx < static_cast<std::ptrdiff_t>(from.count); ++xx) {
        const auto x = static_cast<std::size_t>(xx);
        const auto common = from.common.row(x);
        for (std::size_t y = 0; y < to.count; ++y) {
            bool ok = true;
            for (Index v : to.clique(y))
                if (!((common[v / 64] >> (v % 64)) & 1u)) {
                    ok = false;
                    break;
                }
            if (ok) m.set(x, y);
        }
    }
    return m;
}

}  // namespace

CliqueSearch find_k_clique(const ThresholdGraph& graph, std::size_t k, const CliqueOptions& options) {
    if (k < 1) throw UsageError("clique size must be at least 1");
    if (options.threads < 1) throw UsageError("thread count must be positive");
    const std::size_t n = graph.size();
    CliqueSearch out;
    if (k > n) return out;
    if (k == 1) {
        out.found = true;
        out.witness = {0};
        return out;
    }
    if (k == 2) {
        for (std::size_t v = 0; v < n && !out.found; ++v)
            for_each_bit(graph.neighbours(v), [&](std::size_t u) {
                if (!out.found) {
                    out.found = true;
                    out.witness = {static_cast<Index>(v), static_cast<Index>(u)};
                }
            });
        return out;
    }

    const auto sizes = clique_part_sizes(k);
    std::array<CliqueList, 3> lists;
    lists[0] = CliqueLister(graph, sizes[0], options.max_part_cliques).run();
    for (std::size_t p = 1; p < 3; ++p)
        lists[p] = sizes[p] == sizes[p - 1] ? lists[p - 1]
                                            : CliqueLister(graph, sizes[p], options.max_part_cliques).run();
    for (const CliqueList& l : lists)
        if (l.count == 0) return out;

    const BitMatrix a12 = compatibility(lists[0], lists[1], options.threads);
    const BitMatrix a23 = compatibility(lists[1], lists[2], options.threads);
    const BitMatrix a13 = compatibility(lists[0], lists[2], options.threads);
    const BitMatrix paths = bool_matrix_multiply(a12, a23, options.threads);

    for (std::size_t x = 0; x < lists[0].count; ++x) {
        const auto p = paths.row(x), closing = a13.row(x);
        for (std::size_t w = 0; w < p.size(); ++w) {
            const Word both = p[w] & closing[w];
            if (!both) continue;
            const std::size_t z = w * 64 + static_cast<std::size_t>(std::countr_zero(both));
            std::size_t y = lists[1].count;
            for_each_bit(a12.row(x), [&](std::size_t cand) {
                if (y == lists[1].count && a23.get(cand, z)) y = cand;
            });
            if (y == lists[1].count) throw std::logic_error("triangle without a middle vertex");

            for (const auto& [list, idx] : {std::pair{&lists[0], x}, std::pair{&lists[1], y}, std::pair{&lists[2], z}})
                for (Index v : list->clique(idx)) out.witness.push_back(v);
            std::sort(out.witness.begin(), out.witness.end());
            out.found = true;
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct ThresholdSearch {
    double value = 0.0;
    std::vector<Index> witness;
};

ThresholdSearch largest_feasible_threshold(const WeightedCompleteGraph& graph, std::size_t k,
                                           const CliqueOptions& options) {
    const std::vector<double> candidates = graph.distinct_weights();
    // the smallest weight gives the complete graph, which always holds a k-clique
    std::size_t lo = 0, hi = candidates.size() - 1;
    CliqueSearch best = find_k_clique(build_threshold_graph(graph, candidates[lo]), k, options);
    if (!best.found) throw std::logic_error("complete threshold graph has no k-clique");
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        CliqueSearch probe = find_k_clique(build_threshold_graph(graph, candidates[mid]), k, options);
        if (probe.found) {
            lo = mid;
            best = std::move(probe);
        } else {
            hi = mid - 1;
        }
    }
    return {candidates[lo], std::move(best.witness)};
}

DispersionResult to_result(const WeightedCompleteGraph& graph, std::size_t k, ThresholdSearch found,
                           Metric metric) {
    DispersionResult r;
    r.k = k;
    r.indices = std::move(found.witness);
    r.value2 = found.value;
    r.algo = "clique";
    r.status = Status::exact;
    r.metric = metric;
    for (std::size_t a = 0; a < k && !r.closest_pair; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (graph.weight(r.indices[a], r.indices[b]) == found.value) {
                r.closest_pair = PairWitness{r.indices[a], r.indices[b], found.value};
                break;
            }
    if (!r.closest_pair) throw std::logic_error("witness clique does not attain the threshold");
    return r;
}

void check_graph_k(std::size_t n, std::size_t k) {
    if (k < 2 || k > n)
        throw UsageError("k must satisfy 2 <= k <= n (k = " + std::to_string(k) + ", n = " +
                         std::to_string(n) + ")");
}

}  // namespace

DispersionResult solve_graph_dispersion(const WeightedCompleteGraph& graph, std::size_t k,
                                        const CliqueOptions& options) {
    check_graph_k(graph.size(), k);
    return to_result(graph, k, largest_feasible_threshold(graph, k, options), Metric::raw_weight);
}

DispersionResult solve_clique(const PointSet& points, std::size_t k, const CliqueOptions& options) {
    check_graph_k(points.size(), k);
    const WeightedCompleteGraph graph = WeightedCompleteGraph::from_points(points);
    return to_result(graph, k, largest_feasible_threshold(graph, k, options), Metric::squared_euclidean);
}

}  // namespace dispersion
