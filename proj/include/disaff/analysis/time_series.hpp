#pragma once

#include <chrono>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "disaff/chain/chain.hpp"
#include "disaff/error.hpp"
#include "disaff/util/date.hpp"

namespace disaff::analysis {

using chain::DailyCounts;

enum class SeriesKind { survey_aligned, daily };

struct SeriesPoint {
    Date date;
    double value = 0.0;

    friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Dated values with strictly increasing dates and finite values.
class TimeSeries {
public:
    TimeSeries() = default;

    TimeSeries(SeriesKind kind, std::vector<SeriesPoint> points) : kind_(kind), points_(std::move(points)) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!std::isfinite(points_[i].value)) throw ValidationError("time series: non-finite value");
            if (i && !(points_[i - 1].date < points_[i].date)) {
                throw ValidationError("time series: dates not strictly increasing");
            }
        }
    }

    SeriesKind kind() const noexcept { return kind_; }
    std::span<const SeriesPoint> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const SeriesPoint& operator[](std::size_t i) const { return points_[i]; }

    std::vector<double> values() const {
        std::vector<double> v;
        v.reserve(points_.size());
        for (const auto& p : points_) v.push_back(p.value);
        return v;
    }

private:
    SeriesKind kind_ = SeriesKind::daily;
    std::vector<SeriesPoint> points_;
};

/// Aggregation window [t - b, t - a] in days before an anchor date t.
/// `half_open` excludes the far end: (t - b, t - a].
struct IntervalSpec {
    int a = 1;
    int b = 14;
    bool half_open = false;

    void validate() const {
        if (a < 1) throw ValidationError("interval: a must be >= 1");
        if (b <= a) throw ValidationError("interval: b must be > a");
    }

    Date first_day(Date anchor) const { return anchor - std::chrono::days{half_open ? b - 1 : b}; }
    Date last_day(Date anchor) const { return anchor - std::chrono::days{a}; }

    std::string label() const { return "D" + std::to_string(a) + "_" + std::to_string(b); }
};

/// Parses "a:b".
inline IntervalSpec parse_interval(std::string_view s) {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) throw ValidationError("interval must look like a:b");
    IntervalSpec spec;
    try {
        std::size_t used = 0;
        const std::string as{s.substr(0, colon)}, bs{s.substr(colon + 1)};
        spec.a = std::stoi(as, &used);
        if (used != as.size()) throw std::invalid_argument("a");
        spec.b = std::stoi(bs, &used);
        if (used != bs.size()) throw std::invalid_argument("b");
    } catch (const std::logic_error&) {
        throw ValidationError("interval must look like a:b with integer days, got '" + std::string{s} + "'");
    }
    spec.validate();
    return spec;
}

enum class DropReason { before_corpus, no_political };

inline std::string_view to_string(DropReason r) {
    return r == DropReason::before_corpus ? "window starts before the corpus" : "no political tweets in window";
}

struct DroppedAnchor {
    Date date;
    DropReason reason;
};

struct RatioSeries {
    TimeSeries series;
    std::vector<DroppedAnchor> dropped;
};

/// Relevant / political over the interval window of each anchor.
inline RatioSeries build_ratio_series(const DailyCounts& counts, std::span<const Date> anchors,
                                      const IntervalSpec& interval) {
    interval.validate();
    for (std::size_t i = 1; i < anchors.size(); ++i) {
        if (!(anchors[i - 1] < anchors[i])) throw ValidationError("anchor dates must be strictly increasing");
    }
    RatioSeries out;
    std::vector<SeriesPoint> points;
    const std::optional<Date> corpus_start =
        counts.empty() ? std::nullopt : std::optional<Date>{counts.begin()->first};
    for (const auto t : anchors) {
        const Date first = interval.first_day(t);
        const Date last = interval.last_day(t);
        if (!corpus_start || first < *corpus_start) {
            out.dropped.push_back({t, DropReason::before_corpus});
            continue;
        }
        std::size_t rel = 0, pol = 0;
        for (auto it = counts.lower_bound(first); it != counts.end() && it->first <= last; ++it) {
            rel += it->second.relevant;
            pol += it->second.political;
        }
        if (pol == 0) {
            out.dropped.push_back({t, DropReason::no_political});
            continue;
        }
        points.push_back({t, static_cast<double>(rel) / static_cast<double>(pol)});
    }
    if (points.empty()) throw ValidationError("ratio series: every anchor was dropped");
    out.series = TimeSeries(SeriesKind::survey_aligned, std::move(points));
    return out;
}

/// One point per date with political_count > 0.
inline TimeSeries build_daily_series(const DailyCounts& counts) {
    std::vector<SeriesPoint> points;
    for (const auto& [d, c] : counts) {
        if (c.political > 0) points.push_back({d, static_cast<double>(c.relevant) / static_cast<double>(c.political)});
    }
    return TimeSeries(SeriesKind::daily, std::move(points));
}

}  // namespace disaff::analysis
