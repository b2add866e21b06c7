#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <tuple>
#include <utility>

#include <boost/math/special_functions/beta.hpp>

#include "disaff/error.hpp"

namespace disaff::analysis {

/// Two-sided 97.5% standard normal quantile.
inline constexpr double kZ975 = 1.959964;

struct CorrelationResult {
    double r = 0.0;
    std::size_t n = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double p_value = 1.0;
};

/// Sample Pearson correlation; needs n >= 3 and non-constant inputs.
inline double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ValidationError("pearson: inputs differ in length");
    const std::size_t n = x.size();
    if (n < 3) throw ValidationError("pearson: need at least 3 pairs");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw ValidationError("pearson: constant input");
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

/// Fisher-z confidence interval: tanh(atanh(r) -+ z / sqrt(n - 3)).
inline std::pair<double, double> pearson_ci(double r, std::size_t n, double z = kZ975) {
    if (n < 4) throw ValidationError("pearson_ci: need n >= 4");
    if (!(std::abs(r) < 1.0)) throw ValidationError("pearson_ci: |r| must be < 1");
    const double center = std::atanh(r);
    const double half = z / std::sqrt(static_cast<double>(n - 3));
    return {std::tanh(center - half), std::tanh(center + half)};
}

/// Two-sided p-value of the t-test for zero correlation with n - 2 degrees of
/// freedom: P(|T| >= |t|) = I_{df / (df + t^2)}(df / 2, 1 / 2).
inline double pearson_pvalue(double r, std::size_t n) {
    if (n < 4) throw ValidationError("pearson_pvalue: need n >= 4");
    if (!(std::abs(r) < 1.0)) throw ValidationError("pearson_pvalue: |r| must be < 1");
    const double df = static_cast<double>(n - 2);
    const double t2 = r * r * df / (1.0 - r * r);
    return boost::math::ibeta(df / 2.0, 0.5, df / (df + t2));
}

/// Correlation with interval and p-value; needs n >= 4. A perfect
/// correlation yields the degenerate interval [r, r] and p = 0.
inline CorrelationResult correlate(std::span<const double> x, std::span<const double> y) {
    if (x.size() < 4) throw ValidationError("correlate: need at least 4 pairs");
    CorrelationResult res;
    res.r = pearson(x, y);
    res.n = x.size();
    if (std::abs(res.r) >= 1.0) {
        res.ci_low = res.ci_high = res.r;
        res.p_value = 0.0;
        return res;
    }
    std::tie(res.ci_low, res.ci_high) = pearson_ci(res.r, res.n);
    res.p_value = pearson_pvalue(res.r, res.n);
    return res;
}

}  // namespace disaff::analysis
