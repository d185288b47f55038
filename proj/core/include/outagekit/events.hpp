#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "outagekit/records.hpp"

namespace outagekit {

enum class SeverityClass { Moderate, Severe, Extreme, Sporadic };

const char* severity_name(SeverityClass s);

enum class CategoryLabel {
  PrioritizedLarge,
  NonPrioritizedLarge,
  ProlongedSmall,
  RemainingSmall,
};

inline constexpr int kCategoryCount = 4;

const char* category_name(CategoryLabel c);

// Number of failures waiting to recover, R(t), sampled on a uniform grid.
// The peak is computed with exact interval arithmetic over occurrence and
// restoration endpoints, so the grid step never affects it.
struct PendingSeries {
  std::int64_t t0 = 0;      // first grid point, minutes
  std::int64_t step = 10;   // grid spacing, minutes
  std::vector<std::int64_t> counts;
  std::int64_t peak_time = 0;   // earliest argmax, exact
  std::int64_t peak_value = 0;

  std::int64_t grid_time(std::size_t i) const {
    return t0 + step * static_cast<std::int64_t>(i);
  }
};

struct StagePartition {
  std::vector<std::string> stage1_ids;
  std::vector<std::string> stage2_ids;
  std::int64_t split_time = 0;
};

struct SeverityThresholds {
  std::int64_t moderate_floor = 100;   // min failures for a moderate event
  std::int64_t extreme_floor = 1373;   // min failures for an extreme event
};

struct FailureEvent {
  std::string event_id;
  std::vector<FailureRecord> records;
  SeverityClass severity = SeverityClass::Sporadic;
  StagePartition partition;
  PendingSeries pending;
};

// Exact pending-repairs count: counts[i] = #{r : occurred_at <= t < restored_at}
// at t = t0 + i*step. Throws EmptyEvent on an empty record list.
PendingSeries pending_series(const std::vector<FailureRecord>& records,
                             std::int64_t step_minutes = 10);

// Stage 1 holds every record occurring at or before the pending peak;
// Stage 2 holds the rest. split_time equals the peak time.
StagePartition split_stages(const std::vector<FailureRecord>& records,
                            const PendingSeries& pending);

SeverityClass classify_severity(const std::vector<FailureRecord>& records,
                                const SeverityThresholds& thresholds = {});

// Builds a FailureEvent with severity, pending series, and stage partition.
FailureEvent make_event(std::string event_id,
                        std::vector<FailureRecord> records,
                        std::int64_t step_minutes = 10,
                        const SeverityThresholds& thresholds = {});

// Per-category pending series R(t|c) on the same grid as the event total.
// The four series sum pointwise to the total, exactly. Throws MissingLabel
// if any record id has no label.
std::map<CategoryLabel, PendingSeries> category_pending_series(
    const FailureEvent& event,
    const std::map<std::string, CategoryLabel>& labels);

}  // namespace outagekit
