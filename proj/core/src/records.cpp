#include "outagekit/records.hpp"

#include <algorithm>
#include <cctype>

namespace outagekit {

const char* device_type_name(DeviceType d) {
  switch (d) {
    case DeviceType::SubstationBreaker: return "SubstationBreaker";
    case DeviceType::Recloser: return "Recloser";
    case DeviceType::FusedDisc: return "FusedDisc";
    case DeviceType::Transformer: return "Transformer";
    case DeviceType::FusedCutout: return "FusedCutout";
    case DeviceType::Other: return "Other";
  }
  return "Other";
}

DeviceType parse_device_type(const std::string& label) {
  std::string s;
  s.reserve(label.size());
  for (char c : label) {
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "substationbreaker") return DeviceType::SubstationBreaker;
  if (s == "recloser") return DeviceType::Recloser;
  if (s == "fuseddisc") return DeviceType::FusedDisc;
  if (s == "transformer") return DeviceType::Transformer;
  if (s == "fusedcutout") return DeviceType::FusedCutout;
  return DeviceType::Other;
}

}  // namespace outagekit
