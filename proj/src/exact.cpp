#include "dispersion/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dispersion/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dispersion {

namespace {

void check_k(const PointSet& points, std::size_t k) {
    if (k < 1 || k > points.size())
        throw UsageError("k must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                         ", n = " + std::to_string(points.size()) + ")");
}

DispersionResult single_point(std::string algo) {
    DispersionResult r;
    r.k = 1;
    r.indices = {0};
    r.value2 = kInfinity;
    r.algo = std::move(algo);
    r.status = Status::exact;
    return r;
}

// ---------------------------------------------------------------------------
// brute force

class SubsetEnumerator {
public:
    SubsetEnumerator(std::size_t n, std::size_t k, std::vector<double> dist)
        : n_(n), k_(k), dist_(std::move(dist)), rowmin_(k, std::vector<double>(n, kInfinity)),
          chosen_(k) {}

    void run() { descend(0, 0, kInfinity); }

    double best() const { return best_; }
    const std::vector<Index>& best_subset() const { return best_subset_; }

private:
    // rowmin_[t][m] = min distance from m to the first t chosen points
    void descend(std::size_t depth, std::size_t start, double prefix) {
        const std::vector<double>& rm = rowmin_[depth];
        if (depth + 1 == k_) {
            for (std::size_t m = start; m < n_; ++m) {
                const double v = std::min(prefix, rm[m]);
                if (v > best_) {
                    best_ = v;
                    best_subset_.assign(chosen_.begin(), chosen_.begin() + depth);
                    best_subset_.push_back(static_cast<Index>(m));
                }
            }
            return;
        }
        std::vector<double>& next = rowmin_[depth + 1];
        for (std::size_t e = start; e + (k_ - depth) <= n_; ++e) {
            chosen_[depth] = static_cast<Index>(e);
            const double* row = dist_.data() + e * n_;
            for (std::size_t m = e + 1; m < n_; ++m) next[m] = std::min(rm[m], row[m]);
            descend(depth + 1, e + 1, std::min(prefix, rm[e]));
        }
    }

    std::size_t n_, k_;
    std::vector<double> dist_;
    std::vector<std::vector<double>> rowmin_;
    std::vector<Index> chosen_;
    double best_ = -1.0;
    std::vector<Index> best_subset_;
};

// ---------------------------------------------------------------------------
// recursive pair guessing

struct PairEntry {
    double d2;
    Index a, b;
};

bool scan_order(const PairEntry& x, const PairEntry& y) {
    if (x.d2 != y.d2) return x.d2 > y.d2;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

struct Level {
    std::vector<PairEntry> pairs;
    std::vector<Index> survivors;
};

using Workspace = std::vector<Level>;

struct Accepted {
    double value2 = 0.0;
    PairWitness pair;
};

bool solve_subset(const PointSet& points, std::span<const Index> pool, std::size_t k, double floor,
                  Workspace& ws, std::size_t depth, std::vector<Index>& out, Accepted& acc);

void sorted_pairs(const PointSet& points, std::span<const Index> pool, double floor,
                  std::vector<PairEntry>& pairs) {
    pairs.clear();
    for (std::size_t s = 0; s < pool.size(); ++s)
        for (std::size_t t = s + 1; t < pool.size(); ++t) {
            const double d2 = dist2_unchecked(points, pool[s], pool[t]);
            if (d2 >= floor) pairs.push_back({d2, std::min(pool[s], pool[t]), std::max(pool[s], pool[t])});
        }
    std::sort(pairs.begin(), pairs.end(), scan_order);
}

// Filter around the guessed pair and recurse on the survivors with floor x^2.
bool try_pair(const PointSet& points, std::span<const Index> pool, std::size_t k, const PairEntry& pe,
              Workspace& ws, std::size_t depth, std::vector<Index>& out, Accepted& acc) {
    std::vector<Index>& survivors = ws[depth].survivors;
    survivors.clear();
    const double x2 = pe.d2;
    for (Index p : pool) {
        if (p == pe.a || p == pe.b) continue;
        if (dist2_unchecked(points, p, pe.a) < x2 || dist2_unchecked(points, p, pe.b) < x2) continue;
        survivors.push_back(p);
    }
    if (survivors.size() < k - 2) return false;

    const std::size_t mark = out.size();
    Accepted inner;
    if (!solve_subset(points, survivors, k - 2, x2, ws, depth + 1, out, inner)) {
        out.resize(mark);
        return false;
    }
    out.push_back(pe.a);
    out.push_back(pe.b);
    acc.value2 = x2;
    acc.pair = {pe.a, pe.b, x2};
    return true;
}

// Best k-subset of `pool` whose min squared distance is >= floor, if any.
bool solve_subset(const PointSet& points, std::span<const Index> pool, std::size_t k, double floor,
                  Workspace& ws, std::size_t depth, std::vector<Index>& out, Accepted& acc) {
    if (pool.size() < k) return false;
    if (k == 1) {
        out.push_back(pool[0]);
        acc.value2 = kInfinity;
        return true;
    }
    if (k == 2) {
        const PairWitness w = diameter(points, pool);
        if (w.dist2 < floor) return false;
        out.push_back(w.i);
        out.push_back(w.j);
        acc.value2 = w.dist2;
        acc.pair = w;
        return true;
    }

    std::vector<PairEntry>& pairs = ws[depth].pairs;
    sorted_pairs(points, pool, floor, pairs);
    for (const PairEntry& pe : pairs)
        if (try_pair(points, pool, k, pe, ws, depth, out, acc)) return true;
    return false;
}

bool solve_top_parallel(const PointSet& points, std::span<const Index> pool, std::size_t k, int threads,
                        std::vector<Index>& out, Accepted& acc) {
    std::vector<PairEntry> pairs;
    sorted_pairs(points, pool, 0.0, pairs);

    const std::size_t levels = k / 2 + 1;
    std::vector<Workspace> workspaces(static_cast<std::size_t>(threads), Workspace(levels));
    const std::size_t block = 64 * static_cast<std::size_t>(threads);

    std::vector<char> hit(block);
    std::vector<std::vector<Index>> members(block);
    std::vector<Accepted> accepted(block);

    for (std::size_t begin = 0; begin < pairs.size(); begin += block) {
        const std::size_t len = std::min(block, pairs.size() - begin);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
        for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(len); ++t) {
            const auto s = static_cast<std::size_t>(t);
            int tid = 0;
#ifdef _OPENMP
            tid = omp_get_thread_num();
#endif
            members[s].clear();
            hit[s] = try_pair(points, pool, k, pairs[begin + s], workspaces[static_cast<std::size_t>(tid)], 0,
                              members[s], accepted[s]);
        }
        for (std::size_t s = 0; s < len; ++s)
            if (hit[s]) {
                out = std::move(members[s]);
                acc = accepted[s];
                return true;
            }
    }
    return false;
}

}  // namespace

DispersionResult brute_force(const PointSet& points, std::size_t k) {
    check_k(points, k);
    if (k == 1) return single_point("brute");

    SubsetEnumerator search(points.size(), k, squared_distance_matrix(points));
    search.run();

    DispersionResult r;
    r.k = k;
    r.indices = search.best_subset();
    r.value2 = search.best();
    r.algo = "brute";
    r.status = Status::exact;
    // lexicographically smallest pair realizing the minimum
    for (std::size_t a = 0; a < k && !r.closest_pair; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (dist2_unchecked(points, r.indices[a], r.indices[b]) == r.value2) {
                r.closest_pair = PairWitness{r.indices[a], r.indices[b], r.value2};
                break;
            }
    return r;
}

DispersionResult solve_exact(const PointSet& points, std::size_t k, const ExactOptions& options) {
    check_k(points, k);
    if (options.threads < 1) throw UsageError("thread count must be positive");
    if (k == 1) return single_point("exact");

    std::vector<Index> pool(points.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Index>(i);

    std::vector<Index> members;
    Accepted acc;
    bool found = false;
    if (k >= 3 && options.threads > 1) {
        found = solve_top_parallel(points, pool, k, options.threads, members, acc);
    } else {
        Workspace ws(k / 2 + 1);
        found = solve_subset(points, pool, k, 0.0, ws, 0, members, acc);
    }
    // the closest pair of any optimal subset is always accepted
    if (!found) throw std::logic_error("exact solver rejected every candidate pair");

    DispersionResult r;
    r.k = k;
    r.indices = std::move(members);
    std::sort(r.indices.begin(), r.indices.end());
    r.value2 = acc.value2;
    r.closest_pair = acc.pair;
    r.algo = "exact";
    r.status = Status::exact;
    return r;
}

}  // namespace dispersion
