#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qd {

// Interval of definition. Endpoints may be infinite; a singular flag marks
// endpoints where boundary jets carry no information (infinite endpoints, or
// finite ones where the leading coefficient vanishes).
struct ExtendedInterval {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool lower_singular = true;
    bool upper_singular = true;

    ExtendedInterval() = default;
    ExtendedInterval(double lo, double hi) : lower(lo), upper(hi) {
        if (!(lower < upper)) throw std::invalid_argument("interval: lower must be < upper");
        lower_singular = std::isinf(lower);
        upper_singular = std::isinf(upper);
    }

    static ExtendedInterval whole_line() { return ExtendedInterval(); }
    static ExtendedInterval half_line(double lo) {
        ExtendedInterval iv;
        iv.lower = lo;
        iv.lower_singular = false;
        return iv;
    }

    bool lower_finite() const { return std::isfinite(lower); }
    bool upper_finite() const { return std::isfinite(upper); }
    bool finite() const { return lower_finite() && upper_finite(); }
    double length() const { return upper - lower; }

    std::string to_string() const;
};

}  // namespace qd
