#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "outagekit/events.hpp"
#include "outagekit/records.hpp"

namespace outagekit {

// Customer minutes of interruption: sum of customers * duration.
std::int64_t customer_minutes(const std::vector<FailureRecord>& records);

struct CategoryImpact {
  std::int64_t cmi = 0;                 // customer-minutes
  double mean_cmi_per_failure = 0.0;
  std::int64_t affected_customers = 0;
  std::size_t n_failures = 0;
  // Least-squares slope of cumulative customer downtime, in
  // customer-minutes per hour of event time. Absent with < 2 records.
  std::optional<double> growth_rate;
  std::array<double, kDeviceTypeCount> device_mix{};
};

struct ImpactReport {
  std::map<CategoryLabel, CategoryImpact> categories;
  std::int64_t total_cmi = 0;
};

// Cumulative customer downtime for one category, sampled on the event grid:
// D(t) = sum over category records of customers * overlap([occ,rest], [t0,t]).
struct DowntimeCurve {
  std::int64_t t0 = 0;
  std::int64_t step = 10;
  std::vector<double> customer_minutes;  // non-decreasing
};

std::map<CategoryLabel, DowntimeCurve> cumulative_downtime_curves(
    const std::vector<FailureRecord>& records,
    const std::map<std::string, CategoryLabel>& labels,
    std::int64_t step_minutes = 10);

ImpactReport impact_report(const std::vector<FailureRecord>& records,
                           const std::map<std::string, CategoryLabel>& labels,
                           std::int64_t step_minutes = 10);

}  // namespace outagekit
