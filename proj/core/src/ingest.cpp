#include "outagekit/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "outagekit/error.hpp"

namespace outagekit {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_int(const std::string& s, std::int64_t& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc{} && ptr == t.data() + t.size();
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  try {
    std::size_t pos = 0;
    out = std::stod(t, &pos);
    return pos == t.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::BadFieldCount: return "BAD_FIELD_COUNT";
    case RejectReason::BadNumber: return "BAD_NUMBER";
    case RejectReason::NegativeDuration: return "NEGATIVE_DURATION";
    case RejectReason::NonPositiveCustomers: return "NON_POSITIVE_CUSTOMERS";
    case RejectReason::BadCoordinate: return "BAD_COORDINATE";
    case RejectReason::BadStormFlag: return "BAD_STORM_FLAG";
  }
  return "UNKNOWN";
}

std::pair<std::vector<FailureRecord>, ValidationReport> parse_outage_csv(
    std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw AnalysisError(ErrorCode::MissingHeader, "input is empty, header required");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (trim(line) != kCsvHeader) {
    throw AnalysisError(ErrorCode::MissingHeader,
                        "expected header '" + std::string(kCsvHeader) + "'");
  }

  std::vector<FailureRecord> records;
  ValidationReport report;
  std::size_t line_no = 0;

  auto reject = [&](RejectReason reason) {
    ++report.rejected;
    report.rejections.emplace_back(line_no, reason);
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    if (trim(line).empty()) continue;  // blank lines are not data rows
    const auto fields = split_fields(line);
    if (fields.size() != 8) {
      reject(RejectReason::BadFieldCount);
      continue;
    }
    FailureRecord rec;
    rec.record_id = trim(fields[0]);
    if (!parse_int(fields[1], rec.occurred_at) ||
        !parse_int(fields[2], rec.restored_at) ||
        !parse_int(fields[3], rec.customers)) {
      reject(RejectReason::BadNumber);
      continue;
    }
    if (rec.restored_at < rec.occurred_at) {
      reject(RejectReason::NegativeDuration);
      continue;
    }
    if (rec.customers < 1) {
      reject(RejectReason::NonPositiveCustomers);
      continue;
    }
    rec.device = parse_device_type(trim(fields[4]));
    bool coord_ok = true;
    if (!trim(fields[5]).empty()) {
      double lat = 0;
      coord_ok = parse_double(fields[5], lat) && lat >= -90.0 && lat <= 90.0;
      if (coord_ok) rec.latitude = lat;
    }
    if (coord_ok && !trim(fields[6]).empty()) {
      double lon = 0;
      coord_ok = parse_double(fields[6], lon) && lon >= -180.0 && lon <= 180.0;
      if (coord_ok) rec.longitude = lon;
    }
    if (!coord_ok) {
      reject(RejectReason::BadCoordinate);
      continue;
    }
    const std::string storm = trim(fields[7]);
    if (storm == "true") {
      rec.major_storm_flag = true;
    } else if (storm == "false") {
      rec.major_storm_flag = false;
    } else {
      reject(RejectReason::BadStormFlag);
      continue;
    }
    ++report.accepted;
    records.push_back(std::move(rec));
  }
  return {std::move(records), std::move(report)};
}

void write_outage_csv(std::ostream& out,
                      const std::vector<FailureRecord>& records) {
  out << kCsvHeader << "\n";
  for (const auto& r : records) {
    out << r.record_id << ',' << r.occurred_at << ',' << r.restored_at << ','
        << r.customers << ',' << device_type_name(r.device) << ',';
    if (r.latitude) out << *r.latitude;
    out << ',';
    if (r.longitude) out << *r.longitude;
    out << ',' << (r.major_storm_flag ? "true" : "false") << "\n";
  }
}

std::vector<std::vector<FailureRecord>> group_into_events(
    std::vector<FailureRecord> records, std::int64_t quiet_gap_minutes) {
  std::vector<std::vector<FailureRecord>> events;
  if (records.empty()) return events;

  std::stable_sort(records.begin(), records.end(),
                   [](const FailureRecord& a, const FailureRecord& b) {
                     if (a.occurred_at != b.occurred_at)
                       return a.occurred_at < b.occurred_at;
                     return a.record_id < b.record_id;
                   });

  std::vector<FailureRecord> current;
  std::int64_t latest_restoration = 0;
  for (auto& rec : records) {
    if (!current.empty()) {
      const std::int64_t gap = rec.occurred_at - current.back().occurred_at;
      const bool pending = latest_restoration > rec.occurred_at;
      if (gap > quiet_gap_minutes && !pending) {
        events.push_back(std::move(current));
        current.clear();
      }
    }
    latest_restoration = current.empty()
                             ? rec.restored_at
                             : std::max(latest_restoration, rec.restored_at);
    current.push_back(std::move(rec));
  }
  events.push_back(std::move(current));
  return events;
}

}  // namespace outagekit
