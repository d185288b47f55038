#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "outagekit/records.hpp"

namespace outagekit {

// Per-row rejection reasons emitted by the CSV parser.
enum class RejectReason {
  BadFieldCount,
  BadNumber,
  NegativeDuration,
  NonPositiveCustomers,
  BadCoordinate,
  BadStormFlag,
};

const char* reject_reason_name(RejectReason r);

struct ValidationReport {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  // (1-based data line number excluding the header, reason)
  std::vector<std::pair<std::size_t, RejectReason>> rejections;
};

inline constexpr const char* kCsvHeader =
    "record_id,occurred_at,restored_at,customers,device,lat,lon,major_storm";

// Parses the canonical outage CSV. The header line is mandatory; a missing
// or wrong header throws AnalysisError(MissingHeader). Malformed rows are
// recorded in the report, never silently dropped. Row order is preserved.
std::pair<std::vector<FailureRecord>, ValidationReport> parse_outage_csv(
    std::istream& in);

// Writes records back out in the same schema, header included.
void write_outage_csv(std::ostream& out,
                      const std::vector<FailureRecord>& records);

// Groups records into failure events. Records are sorted by occurrence
// internally; a new event starts when the occurrence gap to the previous
// record exceeds quiet_gap minutes and no earlier failure is still pending.
// Every record lands in exactly one group.
std::vector<std::vector<FailureRecord>> group_into_events(
    std::vector<FailureRecord> records, std::int64_t quiet_gap_minutes = 720);

}  // namespace outagekit
