#include "outagekit/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "outagekit/dependence.hpp"
#include "outagekit/error.hpp"

namespace outagekit {

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

}  // namespace

ScalingCurve recovery_scaling(
    const std::vector<RankedSample>& samples,
    const std::map<std::string, CategoryLabel>& labels) {
  if (samples.empty()) {
    throw AnalysisError(ErrorCode::EmptyEvent, "no samples for scaling curve");
  }
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (samples[a].duration != samples[b].duration)
      return samples[a].duration < samples[b].duration;
    return samples[a].record_id < samples[b].record_id;
  });

  std::int64_t total_customers = 0;
  std::int64_t total_duration = 0;
  for (const auto& s : samples) {
    total_customers += s.size_x;
    total_duration += s.duration;
  }
  if (total_duration == 0) {
    throw AnalysisError(ErrorCode::DegenerateDurations,
                        "total interruption duration is zero");
  }

  ScalingCurve curve;
  curve.points.reserve(samples.size());
  std::int64_t cum_customers = 0;
  std::int64_t cum_duration = 0;
  const double n = static_cast<double>(samples.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& s = samples[order[k]];
    cum_customers += s.size_x;
    cum_duration += s.duration;
    ScalingPoint p;
    p.d = static_cast<double>(k + 1) / n;
    p.p_c = static_cast<double>(cum_customers) / total_customers;
    p.p_r = static_cast<double>(cum_duration) / total_duration;
    p.category = label_of(labels, s.record_id);
    curve.points.push_back(p);
  }
  return curve;
}

FailureScalingCurve failure_scaling(const std::vector<FailureEvent>& events) {
  if (events.empty()) {
    throw AnalysisError(ErrorCode::EmptyEvent, "no events for failure scaling");
  }
  // Common size grid: 0 then powers of two up to the global maximum.
  std::int64_t max_size = 1;
  for (const auto& e : events) {
    for (const auto& r : e.records) max_size = std::max(max_size, r.customers);
  }
  FailureScalingCurve curve;
  curve.x.push_back(0);
  for (std::int64_t x = 1; x / 2 < max_size; x *= 2) curve.x.push_back(x);

  const std::size_t nx = curve.x.size();
  std::vector<std::vector<double>> exceed(events.size());
  std::vector<std::vector<double>> share(events.size());
  for (std::size_t e = 0; e < events.size(); ++e) {
    // Stage-1 records only.
    const auto& event = events[e];
    std::vector<std::int64_t> sizes;
    std::int64_t total_customers = 0;
    for (const auto& r : event.records) {
      if (r.occurred_at <= event.partition.split_time) {
        sizes.push_back(r.customers);
        total_customers += r.customers;
      }
    }
    exceed[e].assign(nx, 0.0);
    share[e].assign(nx, 0.0);
    if (sizes.empty()) continue;
    for (std::size_t i = 0; i < nx; ++i) {
      std::int64_t n_over = 0;
      std::int64_t customers_over = 0;
      for (auto s : sizes) {
        if (s > curve.x[i]) {
          ++n_over;
          customers_over += s;
        }
      }
      exceed[e][i] = static_cast<double>(n_over) / sizes.size();
      share[e][i] = total_customers > 0
                        ? static_cast<double>(customers_over) / total_customers
                        : 0.0;
    }
  }

  curve.p_exceed.assign(nx, 0.0);
  curve.p_c.assign(nx, 0.0);
  curve.p_exceed_std.assign(nx, 0.0);
  curve.p_c_std.assign(nx, 0.0);
  const double ne = static_cast<double>(events.size());
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t e = 0; e < events.size(); ++e) {
      curve.p_exceed[i] += exceed[e][i];
      curve.p_c[i] += share[e][i];
    }
    curve.p_exceed[i] /= ne;
    curve.p_c[i] /= ne;
    double ss_e = 0.0, ss_c = 0.0;
    for (std::size_t e = 0; e < events.size(); ++e) {
      ss_e += (exceed[e][i] - curve.p_exceed[i]) * (exceed[e][i] - curve.p_exceed[i]);
      ss_c += (share[e][i] - curve.p_c[i]) * (share[e][i] - curve.p_c[i]);
    }
    if (events.size() > 1) {
      curve.p_exceed_std[i] = std::sqrt(ss_e / (ne - 1));
      curve.p_c_std[i] = std::sqrt(ss_c / (ne - 1));
    }
  }
  return curve;
}

RuleSummary rule_summary(const std::vector<RankedSample>& samples,
                         const std::map<std::string, CategoryLabel>& labels) {
  if (samples.empty()) {
    throw AnalysisError(ErrorCode::EmptyEvent, "no samples for rule summary");
  }
  std::array<std::int64_t, kCategoryCount> customers{};
  std::array<std::int64_t, kCategoryCount> downtime{};
  std::array<std::int64_t, kCategoryCount> failures{};
  std::int64_t total_customers = 0, total_downtime = 0;
  for (const auto& s : samples) {
    const int c = static_cast<int>(label_of(labels, s.record_id));
    customers[c] += s.size_x;
    downtime[c] += s.duration;
    failures[c] += 1;
    total_customers += s.size_x;
    total_downtime += s.duration;
  }
  RuleSummary summary;
  for (int c = 0; c < kCategoryCount; ++c) {
    summary.customer_share[c] =
        total_customers > 0 ? static_cast<double>(customers[c]) / total_customers
                            : 0.0;
    summary.downtime_share[c] =
        total_downtime > 0 ? static_cast<double>(downtime[c]) / total_downtime
                           : 0.0;
    summary.failure_share[c] =
        static_cast<double>(failures[c]) / static_cast<double>(samples.size());
  }
  return summary;
}

}  // namespace outagekit
