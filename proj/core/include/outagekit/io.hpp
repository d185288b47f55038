#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "outagekit/dependence.hpp"
#include "outagekit/events.hpp"
#include "outagekit/impact.hpp"
#include "outagekit/ingest.hpp"
#include "outagekit/scaling.hpp"
#include "outagekit/triage.hpp"

namespace outagekit {

// Ordered JSON keeps key order stable so output bundles are byte-identical
// across runs.
using Json = nlohmann::ordered_json;

Json to_json(const FailureRecord& r);
FailureRecord record_from_json(const Json& j);

Json to_json(const FailureEvent& e);
FailureEvent event_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const JointGrid& grid);
JointGrid grid_from_json(const Json& j);
Json to_json(const std::vector<ClusterRegion>& regions);
Json to_json(const TippingPoint& tp);
Json to_json(const ImpactReport& report);

// Canonical events file: {"events": [...]}.
void write_events_file(const std::filesystem::path& path,
                       const std::vector<FailureEvent>& events);
std::vector<FailureEvent> read_events_file(const std::filesystem::path& path);

void write_labels_csv(const std::filesystem::path& path,
                      const std::map<std::string, CategoryLabel>& labels);
std::map<std::string, CategoryLabel> read_labels_csv(
    const std::filesystem::path& path);

void write_pending_csv(std::ostream& out, const PendingSeries& series);
void write_heatmap_csv(std::ostream& out, const JointGrid& grid);
void write_recovery_scaling_csv(std::ostream& out, const ScalingCurve& curve);
void write_failure_scaling_csv(std::ostream& out,
                               const FailureScalingCurve& curve);
void write_baseline_csv(std::ostream& out, const BaselineCurve& curve);
void write_downtime_csv(std::ostream& out,
                        const std::map<CategoryLabel, DowntimeCurve>& curves);

void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace outagekit
