#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "outagekit/dependence.hpp"
#include "outagekit/events.hpp"

namespace outagekit {

struct ScalingPoint {
  double d = 0.0;    // fraction of failures restored, fastest first
  double p_c = 0.0;  // cumulative fraction of affected customers
  double p_r = 0.0;  // cumulative fraction of total interruption duration
  CategoryLabel category = CategoryLabel::RemainingSmall;
};

struct ScalingCurve {
  std::vector<ScalingPoint> points;  // sorted by d ascending, ends at (1,1,1)
};

// Cumulative customer share vs. duration share as restorations accumulate
// fastest-first. Throws DegenerateDurations when total duration is zero.
ScalingCurve recovery_scaling(const std::vector<RankedSample>& samples,
                              const std::map<std::string, CategoryLabel>& labels);

struct FailureScalingCurve {
  std::vector<std::int64_t> x;      // size thresholds, 0 then powers of two
  std::vector<double> p_exceed;     // P(size > x), averaged over events
  std::vector<double> p_c;          // customer share from failures of size > x
  std::vector<double> p_exceed_std;
  std::vector<double> p_c_std;
};

// Exceedance curves per event on a common power-of-two size grid, averaged
// pointwise with per-point std-dev bands. Uses each event's Stage-1 records.
FailureScalingCurve failure_scaling(const std::vector<FailureEvent>& events);

struct RuleSummary {
  // Indexed by static_cast<int>(CategoryLabel); each column sums to 1.
  std::array<double, kCategoryCount> customer_share{};
  std::array<double, kCategoryCount> downtime_share{};
  std::array<double, kCategoryCount> failure_share{};
};

RuleSummary rule_summary(const std::vector<RankedSample>& samples,
                         const std::map<std::string, CategoryLabel>& labels);

}  // namespace outagekit
