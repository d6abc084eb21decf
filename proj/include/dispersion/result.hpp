#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dispersion/geom.hpp"

namespace dispersion {

enum class Status { exact, approximate, failed };

std::string_view to_string(Status s) noexcept;

/// How `value2` relates to the reported objective.
enum class Metric {
    squared_euclidean,  // value2 is a squared distance; objective is sqrt(value2)
    raw_weight,         // value2 is an edge weight, used as-is
};

/// A selected k-subset and its max-min objective.
struct DispersionResult {
    std::size_t k = 0;
    std::vector<Index> indices;  // sorted, distinct
    double value2 = kInfinity;   // +inf when k <= 1
    std::optional<PairWitness> closest_pair;
    std::string algo;
    Status status = Status::failed;
    Metric metric = Metric::squared_euclidean;

    /// sqrt(value2) for squared distances, value2 itself for raw weights.
    double value() const noexcept;
};

}  // namespace dispersion
