#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "outagekit/dependence.hpp"
#include "outagekit/events.hpp"

namespace outagekit {

struct BaselinePoint {
  std::size_t k = 0;  // restoration index, 1..n, fastest first
  double actual = 0.0;    // fraction of large failures among the k fastest
  double baseline = 0.0;  // min(k, n_large) / n_large
};

struct BaselineCurve {
  std::vector<BaselinePoint> points;
  std::size_t n_large = 0;
};

// Compares the actual restoration order against the everything-large-first
// baseline. Throws NoLargeFailures when the event has none.
BaselineCurve baseline_curve(const std::vector<RankedSample>& samples,
                             std::int64_t large_threshold = 100);

struct TippingPoint {
  double value = 1.0;  // fraction of large failures restored at first deviation
  std::optional<std::size_t> deviation_index;  // k*, absent if no deviation
};

// First k where baseline - actual exceeds epsilon; value is actual(k*).
TippingPoint tipping_point(const BaselineCurve& curve, double epsilon = 0.05);

struct TippingStats {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t n_events = 0;
};

std::map<SeverityClass, TippingStats> aggregate_tipping(
    const std::vector<std::pair<SeverityClass, double>>& values);

}  // namespace outagekit
