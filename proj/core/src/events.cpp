#include "outagekit/events.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "outagekit/error.hpp"

namespace outagekit {

const char* severity_name(SeverityClass s) {
  switch (s) {
    case SeverityClass::Moderate: return "Moderate";
    case SeverityClass::Severe: return "Severe";
    case SeverityClass::Extreme: return "Extreme";
    case SeverityClass::Sporadic: return "Sporadic";
  }
  return "Sporadic";
}

const char* category_name(CategoryLabel c) {
  switch (c) {
    case CategoryLabel::PrioritizedLarge: return "PrioritizedLarge";
    case CategoryLabel::NonPrioritizedLarge: return "NonPrioritizedLarge";
    case CategoryLabel::ProlongedSmall: return "ProlongedSmall";
    case CategoryLabel::RemainingSmall: return "RemainingSmall";
  }
  return "RemainingSmall";
}

namespace {

struct GridSpan {
  std::int64_t t0;
  std::int64_t t_end;
  std::size_t n_points;
};

GridSpan grid_span(const std::vector<FailureRecord>& records,
                   std::int64_t step) {
  std::int64_t t0 = std::numeric_limits<std::int64_t>::max();
  std::int64_t t_end = std::numeric_limits<std::int64_t>::min();
  for (const auto& r : records) {
    t0 = std::min(t0, r.occurred_at);
    t_end = std::max(t_end, r.restored_at);
  }
  // One point past the last restoration so the series closes at zero.
  const auto span = t_end - t0;
  const std::size_t n = static_cast<std::size_t>((span + step - 1) / step) + 1;
  return {t0, t_end, n};
}

// Exact peak over all t: the count only increases at occurrence instants,
// so sweeping sorted endpoints (restorations first at equal times, since
// counts use occurred <= t < restored) finds the true maximum.
void exact_peak(const std::vector<FailureRecord>& records,
                std::int64_t& peak_time, std::int64_t& peak_value) {
  // (time, +1 for occurrence / -1 for restoration)
  std::vector<std::pair<std::int64_t, int>> endpoints;
  endpoints.reserve(records.size() * 2);
  for (const auto& r : records) {
    endpoints.emplace_back(r.occurred_at, +1);
    endpoints.emplace_back(r.restored_at, -1);
  }
  std::sort(endpoints.begin(), endpoints.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;  // -1 before +1 at equal times
            });
  std::int64_t count = 0;
  peak_value = -1;
  peak_time = 0;
  for (const auto& [t, delta] : endpoints) {
    count += delta;
    if (delta > 0 && count > peak_value) {
      peak_value = count;
      peak_time = t;
    }
  }
}

}  // namespace

PendingSeries pending_series(const std::vector<FailureRecord>& records,
                             std::int64_t step_minutes) {
  if (records.empty()) {
    throw AnalysisError(ErrorCode::EmptyEvent, "pending series of empty event");
  }
  const auto span = grid_span(records, step_minutes);
  PendingSeries series;
  series.t0 = span.t0;
  series.step = step_minutes;
  series.counts.assign(span.n_points, 0);
  for (const auto& r : records) {
    // Grid indices with occurred_at <= t < restored_at.
    const std::int64_t first =
        (r.occurred_at - span.t0 + step_minutes - 1) / step_minutes;
    for (std::int64_t i = first; i < static_cast<std::int64_t>(span.n_points);
         ++i) {
      const std::int64_t t = span.t0 + i * step_minutes;
      if (t >= r.restored_at) break;
      ++series.counts[static_cast<std::size_t>(i)];
    }
  }
  exact_peak(records, series.peak_time, series.peak_value);
  return series;
}

StagePartition split_stages(const std::vector<FailureRecord>& records,
                            const PendingSeries& pending) {
  StagePartition partition;
  partition.split_time = pending.peak_time;
  for (const auto& r : records) {
    if (r.occurred_at <= pending.peak_time) {
      partition.stage1_ids.push_back(r.record_id);
    } else {
      partition.stage2_ids.push_back(r.record_id);
    }
  }
  return partition;
}

SeverityClass classify_severity(const std::vector<FailureRecord>& records,
                                const SeverityThresholds& thresholds) {
  const auto n = static_cast<std::int64_t>(records.size());
  const bool storm = !records.empty() && records.front().major_storm_flag;
  if (storm) {
    return n >= thresholds.extreme_floor ? SeverityClass::Extreme
                                         : SeverityClass::Severe;
  }
  return n >= thresholds.moderate_floor ? SeverityClass::Moderate
                                        : SeverityClass::Sporadic;
}

FailureEvent make_event(std::string event_id,
                        std::vector<FailureRecord> records,
                        std::int64_t step_minutes,
                        const SeverityThresholds& thresholds) {
  FailureEvent event;
  event.event_id = std::move(event_id);
  event.records = std::move(records);
  event.severity = classify_severity(event.records, thresholds);
  event.pending = pending_series(event.records, step_minutes);
  event.partition = split_stages(event.records, event.pending);
  return event;
}

std::map<CategoryLabel, PendingSeries> category_pending_series(
    const FailureEvent& event,
    const std::map<std::string, CategoryLabel>& labels) {
  std::array<std::vector<FailureRecord>, kCategoryCount> by_category;
  for (const auto& r : event.records) {
    auto it = labels.find(r.record_id);
    if (it == labels.end()) {
      throw AnalysisError(ErrorCode::MissingLabel,
                          "record '" + r.record_id + "' has no category label");
    }
    by_category[static_cast<int>(it->second)].push_back(r);
  }

  std::map<CategoryLabel, PendingSeries> out;
  for (int c = 0; c < kCategoryCount; ++c) {
    const auto label = static_cast<CategoryLabel>(c);
    PendingSeries series;
    series.t0 = event.pending.t0;
    series.step = event.pending.step;
    series.counts.assign(event.pending.counts.size(), 0);
    series.peak_time = event.pending.t0;
    series.peak_value = 0;
    if (!by_category[c].empty()) {
      // Recount on the event grid so the categories sum to the total.
      for (const auto& r : by_category[c]) {
        for (std::size_t i = 0; i < series.counts.size(); ++i) {
          const std::int64_t t = series.grid_time(i);
          if (t >= r.occurred_at && t < r.restored_at) ++series.counts[i];
        }
      }
      exact_peak(by_category[c], series.peak_time, series.peak_value);
    }
    out.emplace(label, std::move(series));
  }
  return out;
}

}  // namespace outagekit
