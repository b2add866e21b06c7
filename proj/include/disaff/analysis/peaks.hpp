#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "disaff/analysis/time_series.hpp"
#include "disaff/error.hpp"

namespace disaff::analysis {

struct Peak {
    Date date;
    double value = 0.0;
    double local_mean = 0.0;
    double local_std = 0.0;
};

struct PeakOptions {
    /// Neighborhood spans window/2 points on each side of the candidate.
    std::size_t window = 10;
    double k = 2.0;
    /// Fewest neighbors needed for a decision.
    std::size_t min_neighbors = 3;
};

namespace detail {

/// Mean and sample standard deviation, computed relative to the first value
/// so that constant neighborhoods give exactly (value, 0).
inline std::pair<double, double> shifted_mean_std(const std::vector<double>& v) {
    const double pivot = v.front();
    double s = 0.0, ss = 0.0;
    for (double x : v) {
        s += x - pivot;
        ss += (x - pivot) * (x - pivot);
    }
    const double n = static_cast<double>(v.size());
    const double mean_shift = s / n;
    const double var = std::max(0.0, (ss - n * mean_shift * mean_shift) / (n - 1.0));
    return {pivot + mean_shift, std::sqrt(var)};
}

}  // namespace detail

/// A point is a peak when it exceeds mean + k * std of its neighbors (up to
/// window/2 points either side, the point itself excluded, truncated at the
/// series ends).
inline std::vector<Peak> detect_peaks(const TimeSeries& series, const PeakOptions& options = {}) {
    if (options.window < 2) throw ValidationError("peaks: window must be >= 2");
    if (!std::isfinite(options.k)) throw ValidationError("peaks: k must be finite");
    std::vector<Peak> peaks;
    const auto pts = series.points();
    const std::size_t half = options.window / 2;
    const std::size_t min_n = std::max<std::size_t>(2, options.min_neighbors);
    std::vector<double> hood;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        hood.clear();
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(pts.size() - 1, i + half);
        for (std::size_t j = lo; j <= hi; ++j) {
            if (j != i) hood.push_back(pts[j].value);
        }
        if (hood.size() < min_n) continue;
        const auto [mean, sd] = detail::shifted_mean_std(hood);
        if (pts[i].value > mean + options.k * sd) peaks.push_back({pts[i].date, pts[i].value, mean, sd});
    }
    return peaks;
}

}  // namespace disaff::analysis
