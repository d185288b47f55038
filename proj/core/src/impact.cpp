#include "outagekit/impact.hpp"

#include <algorithm>
#include <limits>

#include "outagekit/error.hpp"

namespace outagekit {

std::int64_t customer_minutes(const std::vector<FailureRecord>& records) {
  std::int64_t total = 0;
  for (const auto& r : records) total += r.customers * r.duration();
  return total;
}

namespace {

CategoryLabel label_of(const std::map<std::string, CategoryLabel>& labels,
                       const std::string& id) {
  auto it = labels.find(id);
  if (it == labels.end()) {
    throw AnalysisError(ErrorCode::MissingLabel,
                        "record '" + id + "' has no category label");
  }
  return it->second;
}

// Least-squares slope of y over uniformly spaced x.
double ols_slope(const std::vector<double>& y, double dx) {
  const std::size_t n = y.size();
  const double x_mean = dx * (n - 1) / 2.0;
  double y_mean = 0.0;
  for (double v : y) y_mean += v;
  y_mean /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xc = i * dx - x_mean;
    num += xc * (y[i] - y_mean);
    den += xc * xc;
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace

std::map<CategoryLabel, DowntimeCurve> cumulative_downtime_curves(
    const std::vector<FailureRecord>& records,
    const std::map<std::string, CategoryLabel>& labels,
    std::int64_t step_minutes) {
  if (records.empty()) {
    throw AnalysisError(ErrorCode::EmptyEvent, "no records for downtime curves");
  }
  std::int64_t t0 = std::numeric_limits<std::int64_t>::max();
  std::int64_t t_end = std::numeric_limits<std::int64_t>::min();
  for (const auto& r : records) {
    t0 = std::min(t0, r.occurred_at);
    t_end = std::max(t_end, r.restored_at);
  }
  const std::size_t n_points =
      static_cast<std::size_t>((t_end - t0 + step_minutes - 1) / step_minutes) + 1;

  std::map<CategoryLabel, DowntimeCurve> curves;
  for (int c = 0; c < kCategoryCount; ++c) {
    DowntimeCurve curve;
    curve.t0 = t0;
    curve.step = step_minutes;
    curve.customer_minutes.assign(n_points, 0.0);
    curves.emplace(static_cast<CategoryLabel>(c), std::move(curve));
  }
  for (const auto& r : records) {
    auto& curve = curves.at(label_of(labels, r.record_id));
    for (std::size_t i = 0; i < n_points; ++i) {
      const std::int64_t t = t0 + static_cast<std::int64_t>(i) * step_minutes;
      const std::int64_t overlap =
          std::max<std::int64_t>(0, std::min(t, r.restored_at) - r.occurred_at);
      curve.customer_minutes[i] += static_cast<double>(r.customers * overlap);
    }
  }
  return curves;
}

ImpactReport impact_report(const std::vector<FailureRecord>& records,
                           const std::map<std::string, CategoryLabel>& labels,
                           std::int64_t step_minutes) {
  if (records.empty()) {
    throw AnalysisError(ErrorCode::EmptyEvent, "no records for impact report");
  }
  std::array<std::vector<FailureRecord>, kCategoryCount> by_category;
  for (const auto& r : records) {
    by_category[static_cast<int>(label_of(labels, r.record_id))].push_back(r);
  }
  const auto curves = cumulative_downtime_curves(records, labels, step_minutes);

  ImpactReport report;
  report.total_cmi = customer_minutes(records);
  for (int c = 0; c < kCategoryCount; ++c) {
    const auto label = static_cast<CategoryLabel>(c);
    const auto& recs = by_category[c];
    CategoryImpact impact;
    impact.n_failures = recs.size();
    impact.cmi = customer_minutes(recs);
    impact.mean_cmi_per_failure =
        recs.empty() ? 0.0 : static_cast<double>(impact.cmi) / recs.size();
    std::array<std::size_t, kDeviceTypeCount> device_counts{};
    for (const auto& r : recs) {
      impact.affected_customers += r.customers;
      ++device_counts[static_cast<int>(r.device)];
    }
    if (!recs.empty()) {
      for (int d = 0; d < kDeviceTypeCount; ++d) {
        impact.device_mix[d] =
            static_cast<double>(device_counts[d]) / recs.size();
      }
    }
    if (recs.size() >= 2) {
      const auto& curve = curves.at(label);
      // Slope in customer-minutes per minute, reported per hour.
      impact.growth_rate =
          ols_slope(curve.customer_minutes, static_cast<double>(curve.step)) *
          60.0;
    }
    report.categories.emplace(label, impact);
  }
  return report;
}

}  // namespace outagekit
