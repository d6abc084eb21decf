#include "dispersion/result.hpp"

#include <cmath>

namespace dispersion {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::exact: return "exact";
        case Status::approximate: return "approximate";
        case Status::failed: return "failed";
    }
    return "unknown";
}

double DispersionResult::value() const noexcept {
    return metric == Metric::squared_euclidean ? std::sqrt(value2) : value2;
}

}  // namespace dispersion
