#include "outagekit/io.hpp"

#include <fstream>
#include <sstream>

#include "outagekit/error.hpp"

namespace outagekit {

Json to_json(const FailureRecord& r) {
  Json j;
  j["record_id"] = r.record_id;
  j["occurred_at"] = r.occurred_at;
  j["restored_at"] = r.restored_at;
  j["customers"] = r.customers;
  j["device"] = device_type_name(r.device);
  if (r.latitude) j["lat"] = *r.latitude;
  if (r.longitude) j["lon"] = *r.longitude;
  j["major_storm"] = r.major_storm_flag;
  return j;
}

FailureRecord record_from_json(const Json& j) {
  FailureRecord r;
  r.record_id = j.at("record_id").get<std::string>();
  r.occurred_at = j.at("occurred_at").get<std::int64_t>();
  r.restored_at = j.at("restored_at").get<std::int64_t>();
  r.customers = j.at("customers").get<std::int64_t>();
  r.device = parse_device_type(j.at("device").get<std::string>());
  if (j.contains("lat")) r.latitude = j.at("lat").get<double>();
  if (j.contains("lon")) r.longitude = j.at("lon").get<double>();
  r.major_storm_flag = j.at("major_storm").get<bool>();
  return r;
}

Json to_json(const FailureEvent& e) {
  Json j;
  j["event_id"] = e.event_id;
  j["severity"] = severity_name(e.severity);
  j["split_time"] = e.partition.split_time;
  j["stage1_ids"] = e.partition.stage1_ids;
  j["stage2_ids"] = e.partition.stage2_ids;
  j["peak_time"] = e.pending.peak_time;
  j["peak_value"] = e.pending.peak_value;
  Json records = Json::array();
  for (const auto& r : e.records) records.push_back(to_json(r));
  j["records"] = std::move(records);
  return j;
}

FailureEvent event_from_json(const Json& j) {
  std::vector<FailureRecord> records;
  for (const auto& rj : j.at("records")) records.push_back(record_from_json(rj));
  return make_event(j.at("event_id").get<std::string>(), std::move(records));
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["accepted"] = report.accepted;
  j["rejected"] = report.rejected;
  Json reasons = Json::array();
  for (const auto& [line, reason] : report.rejections) {
    Json r;
    r["line"] = line;
    r["reason"] = reject_reason_name(reason);
    reasons.push_back(std::move(r));
  }
  j["rejection_reasons"] = std::move(reasons);
  return j;
}

Json to_json(const JointGrid& grid) {
  Json j;
  j["x_lower_edges"] = grid.x_lower_edges;
  j["y_edges"] = grid.y_edges;
  j["joint"] = grid.joint;
  j["x_marginal"] = grid.x_marginal;
  j["y_marginal"] = grid.y_marginal;
  j["f_values"] = grid.f_values;
  j["err"] = grid.err;
  return j;
}

JointGrid grid_from_json(const Json& j) {
  JointGrid g;
  g.x_lower_edges = j.at("x_lower_edges").get<std::vector<std::int64_t>>();
  g.y_edges = j.at("y_edges").get<std::vector<double>>();
  g.joint = j.at("joint").get<std::vector<double>>();
  g.x_marginal = j.at("x_marginal").get<std::vector<double>>();
  g.y_marginal = j.at("y_marginal").get<std::vector<double>>();
  g.f_values = j.at("f_values").get<std::vector<double>>();
  g.err = j.at("err").get<std::vector<double>>();
  return g;
}

Json to_json(const std::vector<ClusterRegion>& regions) {
  Json arr = Json::array();
  for (const auto& r : regions) {
    Json j;
    j["x0"] = r.rect.x0;
    j["x1"] = r.rect.x1;
    j["y0"] = r.rect.y0;
    j["y1"] = r.rect.y1;
    j["mean_f"] = r.mean_f;
    j["mean_err"] = r.mean_err;
    j["hint"] = region_hint_name(r.hint);
    arr.push_back(std::move(j));
  }
  return arr;
}

Json to_json(const TippingPoint& tp) {
  Json j;
  j["value"] = tp.value;
  if (tp.deviation_index) {
    j["deviation_index"] = *tp.deviation_index;
  } else {
    j["deviation_index"] = nullptr;
  }
  return j;
}

Json to_json(const ImpactReport& report) {
  Json j;
  j["total_cmi"] = report.total_cmi;
  j["total_cmi_hours"] = static_cast<double>(report.total_cmi) / 60.0;
  Json cats;
  for (const auto& [label, impact] : report.categories) {
    Json c;
    c["n_failures"] = impact.n_failures;
    c["cmi"] = impact.cmi;
    c["cmi_hours"] = static_cast<double>(impact.cmi) / 60.0;
    c["mean_cmi_per_failure"] = impact.mean_cmi_per_failure;
    c["affected_customers"] = impact.affected_customers;
    if (impact.growth_rate) {
      c["growth_rate_cmi_per_hour"] = *impact.growth_rate;
    } else {
      c["growth_rate_cmi_per_hour"] = nullptr;
    }
    Json mix;
    for (int d = 0; d < kDeviceTypeCount; ++d) {
      mix[device_type_name(static_cast<DeviceType>(d))] = impact.device_mix[d];
    }
    c["device_mix"] = std::move(mix);
    cats[category_name(label)] = std::move(c);
  }
  j["categories"] = std::move(cats);
  return j;
}

void write_events_file(const std::filesystem::path& path,
                       const std::vector<FailureEvent>& events) {
  Json j;
  Json arr = Json::array();
  for (const auto& e : events) arr.push_back(to_json(e));
  j["events"] = std::move(arr);
  write_json_file(path, j);
}

std::vector<FailureEvent> read_events_file(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  std::vector<FailureEvent> events;
  for (const auto& ej : j.at("events")) events.push_back(event_from_json(ej));
  return events;
}

void write_labels_csv(const std::filesystem::path& path,
                      const std::map<std::string, CategoryLabel>& labels) {
  std::ofstream out(path);
  if (!out) {
    throw AnalysisError(ErrorCode::IoError, "cannot write " + path.string());
  }
  out << "record_id,category\n";
  for (const auto& [id, label] : labels) {
    out << id << ',' << category_name(label) << "\n";
  }
}

std::map<std::string, CategoryLabel> read_labels_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw AnalysisError(ErrorCode::IoError, "cannot read " + path.string());
  }
  std::string line;
  std::getline(in, line);
  std::map<std::string, CategoryLabel> labels;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) continue;
    const std::string id = line.substr(0, comma);
    const std::string name = line.substr(comma + 1);
    for (int c = 0; c < kCategoryCount; ++c) {
      if (name == category_name(static_cast<CategoryLabel>(c))) {
        labels.emplace(id, static_cast<CategoryLabel>(c));
        break;
      }
    }
  }
  return labels;
}

void write_pending_csv(std::ostream& out, const PendingSeries& series) {
  out << "t_minutes,count\n";
  for (std::size_t i = 0; i < series.counts.size(); ++i) {
    out << series.grid_time(i) << ',' << series.counts[i] << "\n";
  }
}

void write_heatmap_csv(std::ostream& out, const JointGrid& grid) {
  out << "x_bin,y_bin,f,err\n";
  for (int ix = 0; ix < grid.x_bins(); ++ix) {
    for (int iy = 0; iy < grid.y_bins(); ++iy) {
      out << ix << ',' << iy << ',' << grid.f_values[grid.cell(ix, iy)] << ','
          << grid.err[grid.cell(ix, iy)] << "\n";
    }
  }
}

void write_recovery_scaling_csv(std::ostream& out, const ScalingCurve& curve) {
  out << "d,p_c,p_r,category\n";
  for (const auto& p : curve.points) {
    out << p.d << ',' << p.p_c << ',' << p.p_r << ','
        << category_name(p.category) << "\n";
  }
}

void write_failure_scaling_csv(std::ostream& out,
                               const FailureScalingCurve& curve) {
  out << "x,p_exceed,p_c,p_exceed_std,p_c_std\n";
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    out << curve.x[i] << ',' << curve.p_exceed[i] << ',' << curve.p_c[i] << ','
        << curve.p_exceed_std[i] << ',' << curve.p_c_std[i] << "\n";
  }
}

void write_baseline_csv(std::ostream& out, const BaselineCurve& curve) {
  out << "k,a,b\n";
  for (const auto& p : curve.points) {
    out << p.k << ',' << p.actual << ',' << p.baseline << "\n";
  }
}

void write_downtime_csv(std::ostream& out,
                        const std::map<CategoryLabel, DowntimeCurve>& curves) {
  out << "t,category,customer_minutes\n";
  for (const auto& [label, curve] : curves) {
    for (std::size_t i = 0; i < curve.customer_minutes.size(); ++i) {
      out << (curve.t0 + static_cast<std::int64_t>(i) * curve.step) << ','
          << category_name(label) << ',' << curve.customer_minutes[i] << "\n";
    }
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw AnalysisError(ErrorCode::IoError, "cannot write " + path.string());
  }
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw AnalysisError(ErrorCode::IoError, "cannot read " + path.string());
  }
  return Json::parse(in);
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw AnalysisError(ErrorCode::IoError, "cannot write " + path.string());
  }
  out << text;
}

}  // namespace outagekit
