#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace outagekit {

// Device that failed, as reported by the operator. Unknown labels map to
// Other and are never rejected.
enum class DeviceType {
  SubstationBreaker,
  Recloser,
  FusedDisc,
  Transformer,
  FusedCutout,
  Other,
};

inline constexpr int kDeviceTypeCount = 6;

const char* device_type_name(DeviceType d);

// Case-insensitive; anything unrecognized becomes DeviceType::Other.
DeviceType parse_device_type(const std::string& label);

// One outage record. Timestamps are integer minutes since an arbitrary
// epoch; duration() is restored_at - occurred_at and is never negative for
// a validated record.
struct FailureRecord {
  std::string record_id;
  std::int64_t occurred_at = 0;
  std::int64_t restored_at = 0;
  std::int64_t customers = 1;
  DeviceType device = DeviceType::Other;
  std::optional<double> latitude;
  std::optional<double> longitude;
  bool major_storm_flag = false;

  std::int64_t duration() const { return restored_at - occurred_at; }
};

}  // namespace outagekit
