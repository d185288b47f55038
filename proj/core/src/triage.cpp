#include "outagekit/triage.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "outagekit/error.hpp"

namespace outagekit {

BaselineCurve baseline_curve(const std::vector<RankedSample>& samples,
                             std::int64_t large_threshold) {
  std::size_t n_large = 0;
  for (const auto& s : samples) {
    if (s.size_x > large_threshold) ++n_large;
  }
  if (n_large == 0) {
    throw AnalysisError(ErrorCode::NoLargeFailures,
                        "baseline needs at least one large failure");
  }

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (samples[a].duration != samples[b].duration)
      return samples[a].duration < samples[b].duration;
    return samples[a].record_id < samples[b].record_id;
  });

  BaselineCurve curve;
  curve.n_large = n_large;
  curve.points.reserve(samples.size());
  std::size_t large_so_far = 0;
  for (std::size_t k = 1; k <= order.size(); ++k) {
    if (samples[order[k - 1]].size_x > large_threshold) ++large_so_far;
    BaselinePoint p;
    p.k = k;
    p.actual = static_cast<double>(large_so_far) / n_large;
    p.baseline = static_cast<double>(std::min(k, n_large)) / n_large;
    curve.points.push_back(p);
  }
  return curve;
}

TippingPoint tipping_point(const BaselineCurve& curve, double epsilon) {
  for (const auto& p : curve.points) {
    if (p.baseline - p.actual > epsilon) {
      return {p.actual, p.k};
    }
  }
  return {1.0, std::nullopt};
}

std::map<SeverityClass, TippingStats> aggregate_tipping(
    const std::vector<std::pair<SeverityClass, double>>& values) {
  std::map<SeverityClass, std::vector<double>> grouped;
  for (const auto& [severity, value] : values) grouped[severity].push_back(value);

  std::map<SeverityClass, TippingStats> out;
  for (const auto& [severity, vals] : grouped) {
    TippingStats stats;
    stats.n_events = vals.size();
    stats.mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
    double ss = 0.0;
    for (double v : vals) ss += (v - stats.mean) * (v - stats.mean);
    stats.stddev = vals.size() > 1 ? std::sqrt(ss / (vals.size() - 1)) : 0.0;
    out.emplace(severity, stats);
  }
  return out;
}

}  // namespace outagekit
