// Command-line front end for the outage restoration analytics pipeline.
//
// Subcommands: ingest, synth, analyze, scaling, tipping, evolve, impact,
// report. All outputs are UTF-8 CSV/JSON; identical inputs and flags yield
// byte-identical output bundles.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "outagekit/dependence.hpp"
#include "outagekit/error.hpp"
#include "outagekit/events.hpp"
#include "outagekit/impact.hpp"
#include "outagekit/ingest.hpp"
#include "outagekit/io.hpp"
#include "outagekit/scaling.hpp"
#include "outagekit/synth.hpp"
#include "outagekit/triage.hpp"

namespace fs = std::filesystem;
using namespace outagekit;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct IngestArgs {
  std::string input;
  std::string outdir = ".";
  std::int64_t quiet_gap = 720;
  std::int64_t step = 10;
  std::int64_t moderate_floor = 100;
  std::int64_t extreme_floor = 1373;
};

struct SynthArgs {
  std::string outdir = ".";
  std::uint64_t seed = 1;
  std::size_t n = 100;
  double rate = 60.0;
  double alpha = 1.1;
  double x_min = 1.0;
  double repair_mu = 3.4;
  double repair_sigma = 0.5;
  int crews = 1;
  std::string policy = "size_priority";
  bool storm = false;
};

struct AnalyzeArgs {
  std::string events_path;
  std::string outdir = ".";
  int x_bins = 0;  // 0 = derive from data
  int y_bins = 20;
  double threshold_frac = 0.05;
  int folds = 5;
  std::uint64_t cv_seed = 0;
  std::int64_t large_threshold = 100;
  double fast_quantile = 0.15;
  double prolonged_quantile = 0.50;
};

struct CurveArgs {
  std::string events_path;
  std::string labels_path;
  std::string outdir = ".";
  std::int64_t step = 10;
  std::int64_t large_threshold = 100;
  double epsilon = 0.05;
};

struct ReportArgs {
  std::string indir;
  std::string outdir = ".";
};

std::vector<FailureEvent> load_events(const std::string& path) {
  if (!fs::exists(path)) {
    throw AnalysisError(ErrorCode::IoError, "no such file: " + path);
  }
  return read_events_file(path);
}

std::map<std::string, CategoryLabel> load_labels(const std::string& path) {
  if (!fs::exists(path)) {
    throw AnalysisError(ErrorCode::IoError, "no such file: " + path);
  }
  return read_labels_csv(path);
}

void ensure_outdir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw AnalysisError(ErrorCode::IoError, "cannot create " + dir);
  }
}

std::vector<RankedSample> stage1_samples(const FailureEvent& event) {
  std::vector<FailureRecord> stage1;
  for (const auto& r : event.records) {
    if (r.occurred_at <= event.partition.split_time) stage1.push_back(r);
  }
  return rank_recovery_speed(stage1);
}

int run_ingest(const IngestArgs& args) {
  if (!fs::exists(args.input)) {
    throw AnalysisError(ErrorCode::IoError, "no such file: " + args.input);
  }
  std::ifstream in(args.input);
  auto [records, report] = parse_outage_csv(in);
  const auto groups = group_into_events(std::move(records), args.quiet_gap);
  SeverityThresholds thresholds{args.moderate_floor, args.extreme_floor};
  std::vector<FailureEvent> events;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::ostringstream id;
    id << "e" << std::setw(4) << std::setfill('0') << i;
    events.push_back(make_event(id.str(), groups[i], args.step, thresholds));
  }
  ensure_outdir(args.outdir);
  const fs::path out(args.outdir);
  write_events_file(out / "events.json", events);
  write_json_file(out / "validation_report.json", to_json(report));
  std::cerr << "ingest: " << report.accepted << " accepted, " << report.rejected
            << " rejected, " << events.size() << " events\n";
  return 0;
}

int run_synth(const SynthArgs& args) {
  SynthConfig config;
  config.seed = args.seed;
  config.n_failures = args.n;
  config.arrival_rate_per_hour = args.rate;
  config.pareto_alpha = args.alpha;
  config.pareto_x_min = args.x_min;
  config.repair_mu = args.repair_mu;
  config.repair_sigma = args.repair_sigma;
  config.crews = args.crews;
  config.policy = parse_dispatch_policy(args.policy);
  config.storm_flag = args.storm;

  const SimTrace trace = generate_event(config);
  ensure_outdir(args.outdir);
  const fs::path out(args.outdir);
  {
    std::ofstream csv(out / "synthetic.csv");
    write_outage_csv(csv, trace.records);
  }
  Json truth;
  truth["config"]["seed"] = config.seed;
  truth["config"]["n_failures"] = config.n_failures;
  truth["config"]["arrival_rate_per_hour"] = config.arrival_rate_per_hour;
  truth["config"]["pareto_alpha"] = config.pareto_alpha;
  truth["config"]["pareto_x_min"] = config.pareto_x_min;
  truth["config"]["repair_mu"] = config.repair_mu;
  truth["config"]["repair_sigma"] = config.repair_sigma;
  truth["config"]["crews"] = config.crews;
  truth["config"]["policy"] = dispatch_policy_name(config.policy);
  truth["config"]["storm"] = config.storm_flag;
  Json dispatch = Json::array();
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    Json d;
    d["record_id"] = trace.records[i].record_id;
    d["arrival_order"] = i;
    d["dispatch_order"] = trace.dispatch[i].dispatch_order;
    d["crew_id"] = trace.dispatch[i].crew_id;
    dispatch.push_back(std::move(d));
  }
  truth["dispatch"] = std::move(dispatch);
  Json categories;
  for (const auto& [id, label] : trace.true_categories) {
    categories[id] = category_name(label);
  }
  truth["categories"] = std::move(categories);
  write_json_file(out / "ground_truth.json", truth);
  std::cerr << "synth: wrote " << trace.records.size() << " records\n";
  return 0;
}

int run_analyze(const AnalyzeArgs& args) {
  const auto events = load_events(args.events_path);
  ensure_outdir(args.outdir);
  const fs::path out(args.outdir);

  CategoryBoundaries bounds{args.large_threshold, args.fast_quantile,
                            args.prolonged_quantile};
  std::int64_t max_size = 1;
  for (const auto& e : events) {
    for (const auto& r : e.records) max_size = std::max(max_size, r.customers);
  }
  const int xb = args.x_bins > 0 ? args.x_bins : auto_x_bins(max_size);

  std::map<std::string, CategoryLabel> labels;
  std::map<SeverityClass, std::vector<JointGrid>> grids_by_severity;
  std::map<SeverityClass, std::vector<std::vector<RankedSample>>> samples_by_severity;
  for (const auto& event : events) {
    if (event.severity == SeverityClass::Sporadic) continue;
    const auto ranked = rank_recovery_speed(event.records);
    for (const auto& [id, label] : assign_categories(ranked, bounds)) {
      labels.emplace(id, label);
    }
    if (ranked.size() < static_cast<std::size_t>(args.folds)) {
      std::cerr << "analyze: event " << event.event_id
                << " skipped (TOO_FEW_SAMPLES: " << ranked.size() << " < "
                << args.folds << " folds)\n";
      continue;
    }
    grids_by_severity[event.severity].push_back(
        estimate_joint(ranked, xb, args.y_bins));
    samples_by_severity[event.severity].push_back(ranked);
  }

  write_labels_csv(out / "labels.csv", labels);
  Json clusters;
  for (const auto& [severity, grids] : grids_by_severity) {
    const JointGrid avg = average_dependence(grids);
    std::vector<ClusterRegion> regions;
    if (grids.size() >= 2) {
      regions = extract_cluster_regions(avg, grids, args.threshold_frac);
    } else {
      ClusterOptions opts;
      opts.threshold_frac = args.threshold_frac;
      opts.folds = args.folds;
      opts.x_bins = xb;
      opts.y_bins = args.y_bins;
      opts.cv_seed = args.cv_seed;
      regions = extract_clusters(samples_by_severity.at(severity).front(), opts);
    }
    const std::string name = severity_name(severity);
    write_json_file(out / ("grid_" + name + ".json"), to_json(avg));
    std::ofstream heat(out / ("heatmap_" + name + ".csv"));
    write_heatmap_csv(heat, avg);
    clusters[name] = to_json(regions);
  }
  if (clusters.is_null()) {
    clusters = Json::object();
    std::cerr << "analyze: warning: no analyzable events\n";
  }
  write_json_file(out / "clusters.json", clusters);
  return 0;
}

int run_scaling(const CurveArgs& args) {
  const auto events = load_events(args.events_path);
  const auto labels = load_labels(args.labels_path);
  ensure_outdir(args.outdir);
  const fs::path out(args.outdir);

  std::vector<FailureEvent> analyzed;
  for (const auto& e : events) {
    if (e.severity != SeverityClass::Sporadic) analyzed.push_back(e);
  }

  Json summaries;
  std::array<std::int64_t, kCategoryCount> customers{}, downtime{}, failures{};
  std::int64_t total_customers = 0, total_downtime = 0, total_failures = 0;
  for (const auto& event : analyzed) {
    const auto samples = stage1_samples(event);
    if (samples.empty()) continue;
    try {
      const auto curve = recovery_scaling(samples, labels);
      std::ofstream csv(out / ("recovery_scaling_" + event.event_id + ".csv"));
      write_recovery_scaling_csv(csv, curve);
    } catch (const AnalysisError& e) {
      std::cerr << "scaling: event " << event.event_id << " skipped ("
                << error_code_name(e.code()) << ")\n";
      continue;
    }
    const RuleSummary rs = rule_summary(samples, labels);
    Json s;
    for (int c = 0; c < kCategoryCount; ++c) {
      const char* name = category_name(static_cast<CategoryLabel>(c));
      s[name]["customer_share"] = rs.customer_share[c];
      s[name]["downtime_share"] = rs.downtime_share[c];
      s[name]["failure_share"] = rs.failure_share[c];
    }
    summaries[event.event_id] = std::move(s);
    for (const auto& sample : samples) {
      const auto it = labels.find(sample.record_id);
      if (it == labels.end()) continue;
      const int c = static_cast<int>(it->second);
      customers[c] += sample.size_x;
      downtime[c] += sample.duration;
      failures[c] += 1;
      total_customers += sample.size_x;
      total_downtime += sample.duration;
      ++total_failures;
    }
  }
  if (total_failures > 0) {
    Json s;
    for (int c = 0; c < kCategoryCount; ++c) {
      const char* name = category_name(static_cast<CategoryLabel>(c));
      s[name]["customer_share"] =
          static_cast<double>(customers[c]) / total_customers;
      s[name]["downtime_share"] =
          total_downtime > 0 ? static_cast<double>(downtime[c]) / total_downtime
                             : 0.0;
      s[name]["failure_share"] =
          static_cast<double>(failures[c]) / total_failures;
    }
    summaries["overall"] = std::move(s);
  }
  if (summaries.is_null()) summaries = Json::object();
  write_json_file(out / "rule_summary.json", summaries);

  if (!analyzed.empty()) {
    const auto curve = failure_scaling(analyzed);
    std::ofstream csv(out / "failure_scaling.csv");
    write_failure_scaling_csv(csv, curve);
  }
  return 0;
}

int run_tipping(const CurveArgs& args) {
  const auto events = load_events(args.events_path);
  ensure_outdir(args.outdir);
  const fs::path out(args.outdir);

  Json per_event;
  std::vector<std::pair<SeverityClass, double>> values;
  for (const auto& event : events) {
    if (event.severity == SeverityClass::Sporadic) continue;
    const auto samples = stage1_samples(event);
    try {
      const auto curve = baseline_curve(samples, args.large_threshold);
      const auto tp = tipping_point(curve, args.epsilon);
      std::ofstream csv(out / ("baseline_" + event.event_id + ".csv"));
      write_baseline_csv(csv, curve);
      Json j = to_json(tp);
      j["severity"] = severity_name(event.severity);
      per_event[event.event_id] = std::move(j);
      values.emplace_back(event.severity, tp.value);
    } catch (const AnalysisError& e) {
      std::cerr << "tipping: event " << event.event_id << " skipped ("
                << error_code_name(e.code()) << ")\n";
    }
  }
  Json summary;
  summary["per_event"] = per_event.is_null() ? Json::object() : per_event;
  Json aggregate;
  for (const auto& [severity, stats] : aggregate_tipping(values)) {
    Json a;
    a["mean"] = stats.mean;
    a["stddev"] = stats.stddev;
    a["n_events"] = stats.n_events;
    aggregate[severity_name(severity)] = std::move(a);
  }
  summary["by_severity"] = aggregate.is_null() ? Json::object() : aggregate;
  write_json_file(out / "tipping.json", summary);
  return 0;
}

int run_evolve(const CurveArgs& args) {
  const auto events = load_events(args.events_path);
  const auto labels = load_labels(args.labels_path);
  ensure_outdir(args.outdir);
  const fs::path out(args.outdir);

  for (const auto& event : events) {
    if (event.severity == SeverityClass::Sporadic) continue;
    const auto pending = pending_series(event.records, args.step);
    {
      std::ofstream csv(out / ("pending_" + event.event_id + ".csv"));
      write_pending_csv(csv, pending);
    }
    FailureEvent resampled = event;
    resampled.pending = pending;
    try {
      const auto by_category = category_pending_series(resampled, labels);
      std::ofstream csv(out /
                        ("pending_" + event.event_id + "_by_category.csv"));
      csv << "t_minutes,category,count\n";
      for (const auto& [label, series] : by_category) {
        for (std::size_t i = 0; i < series.counts.size(); ++i) {
          csv << series.grid_time(i) << ',' << category_name(label) << ','
              << series.counts[i] << "\n";
        }
      }
    } catch (const AnalysisError& e) {
      std::cerr << "evolve: event " << event.event_id << " skipped ("
                << error_code_name(e.code()) << ")\n";
    }
  }
  return 0;
}

int run_impact(const CurveArgs& args) {
  const auto events = load_events(args.events_path);
  const auto labels = load_labels(args.labels_path);
  ensure_outdir(args.outdir);
  const fs::path out(args.outdir);

  Json all;
  for (const auto& event : events) {
    if (event.severity == SeverityClass::Sporadic) continue;
    try {
      const auto report = impact_report(event.records, labels, args.step);
      all[event.event_id] = to_json(report);
      const auto curves =
          cumulative_downtime_curves(event.records, labels, args.step);
      std::ofstream csv(out / ("downtime_" + event.event_id + ".csv"));
      write_downtime_csv(csv, curves);
    } catch (const AnalysisError& e) {
      std::cerr << "impact: event " << event.event_id << " skipped ("
                << error_code_name(e.code()) << ")\n";
    }
  }
  if (all.is_null()) all = Json::object();
  write_json_file(out / "impact.json", all);
  return 0;
}

int run_report(const ReportArgs& args) {
  if (!fs::exists(args.indir)) {
    throw AnalysisError(ErrorCode::IoError, "no such directory: " + args.indir);
  }
  ensure_outdir(args.outdir);
  const fs::path in(args.indir);
  const fs::path out(args.outdir);

  // Collect recognized artifacts, sorted for a deterministic bundle.
  std::vector<std::string> copied;
  for (const auto& entry : fs::directory_iterator(in)) {
    const std::string name = entry.path().filename().string();
    const bool known =
        name == "failure_scaling.csv" || name == "tipping.json" ||
        name == "impact.json" || name == "rule_summary.json" ||
        name == "clusters.json" || name == "validation_report.json" ||
        name.starts_with("recovery_scaling_") || name.starts_with("baseline_") ||
        name.starts_with("pending_") || name.starts_with("downtime_") ||
        name.starts_with("grid_") || name.starts_with("heatmap_");
    if (known) copied.push_back(name);
  }
  std::sort(copied.begin(), copied.end());
  if (copied.empty()) {
    throw AnalysisError(ErrorCode::IoError,
                        "no analysis artifacts found in " + args.indir);
  }
  for (const auto& name : copied) {
    fs::copy_file(in / name, out / name, fs::copy_options::overwrite_existing);
  }

  std::ostringstream text;
  text << "Outage restoration analysis summary\n";
  text << "===================================\n\n";

  text << "Category shares (overall)\n";
  if (fs::exists(in / "rule_summary.json")) {
    const Json rs = read_json_file(in / "rule_summary.json");
    if (rs.contains("overall")) {
      for (const auto& [name, shares] : rs.at("overall").items()) {
        text << "  " << name << ": customers "
             << shares.at("customer_share").get<double>() << ", downtime "
             << shares.at("downtime_share").get<double>() << ", failures "
             << shares.at("failure_share").get<double>() << "\n";
      }
    } else {
      text << "  (no events summarized)\n";
    }
  } else {
    text << "  absent\n";
  }

  text << "\nTipping points\n";
  if (fs::exists(in / "tipping.json")) {
    const Json tp = read_json_file(in / "tipping.json");
    for (const auto& [severity, stats] : tp.at("by_severity").items()) {
      text << "  " << severity << ": mean " << stats.at("mean").get<double>()
           << " over " << stats.at("n_events").get<std::size_t>()
           << " event(s)\n";
    }
    if (tp.at("by_severity").empty()) text << "  (no events)\n";
  } else {
    text << "  absent\n";
  }

  text << "\nCustomer impact\n";
  if (fs::exists(in / "impact.json")) {
    const Json imp = read_json_file(in / "impact.json");
    for (const auto& [event_id, report] : imp.items()) {
      text << "  " << event_id << ": total CMI "
           << report.at("total_cmi").get<std::int64_t>() << " customer-min\n";
    }
    if (imp.empty()) text << "  (no events)\n";
  } else {
    text << "  absent\n";
  }

  text << "\nClusters\n";
  if (fs::exists(in / "clusters.json")) {
    const Json cl = read_json_file(in / "clusters.json");
    for (const auto& [severity, regions] : cl.items()) {
      text << "  " << severity << ": " << regions.size() << " region(s)";
      for (const auto& r : regions) {
        text << " [" << r.at("hint").get<std::string>() << "]";
      }
      text << "\n";
    }
    if (cl.empty()) text << "  (none)\n";
  } else {
    text << "  absent\n";
  }

  write_text_file(out / "summary.txt", text.str());

  Json manifest;
  manifest["tool_version"] = kToolVersion;
  manifest["input_dir"] = args.indir;
  manifest["output_dir"] = args.outdir;
  std::vector<std::string> outputs = copied;
  outputs.push_back("summary.txt");
  std::sort(outputs.begin(), outputs.end());
  manifest["outputs"] = outputs;
  write_json_file(out / "manifest.json", manifest);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-outage failure/recovery analytics toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest", "Parse outage CSV into events");
  ingest->add_option("input", ingest_args.input, "outage CSV file")->required();
  ingest->add_option("-o,--outdir", ingest_args.outdir, "output directory");
  ingest->add_option("--quiet-gap", ingest_args.quiet_gap,
                     "minutes of quiet (no pending repairs) that closes an event");
  ingest->add_option("--step", ingest_args.step, "pending-series grid step, minutes");
  ingest->add_option("--moderate-floor", ingest_args.moderate_floor,
                     "min failures for a moderate event");
  ingest->add_option("--extreme-floor", ingest_args.extreme_floor,
                     "min failures for an extreme event");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic failure event");
  synth->add_option("-o,--outdir", synth_args.outdir, "output directory");
  synth->add_option("--seed", synth_args.seed, "generator seed");
  synth->add_option("-n,--n-failures", synth_args.n, "number of failures");
  synth->add_option("--rate", synth_args.rate, "arrival rate, failures/hour");
  synth->add_option("--alpha", synth_args.alpha, "size tail index");
  synth->add_option("--x-min", synth_args.x_min, "size distribution minimum");
  synth->add_option("--repair-mu", synth_args.repair_mu, "repair lognormal mu");
  synth->add_option("--repair-sigma", synth_args.repair_sigma,
                    "repair lognormal sigma");
  synth->add_option("--crews", synth_args.crews, "number of crews");
  synth->add_option("--policy", synth_args.policy,
                    "dispatch policy: size_priority, fifo, random");
  synth->add_flag("--storm", synth_args.storm, "set the major-storm flag");

  AnalyzeArgs analyze_args;
  auto* analyze =
      app.add_subcommand("analyze", "Dependence grids, clusters, categories");
  analyze->add_option("events", analyze_args.events_path, "events.json")->required();
  analyze->add_option("-o,--outdir", analyze_args.outdir, "output directory");
  analyze->add_option("--x-bins", analyze_args.x_bins, "size bins (0 = auto)");
  analyze->add_option("--y-bins", analyze_args.y_bins, "speed bins");
  analyze->add_option("--threshold-frac", analyze_args.threshold_frac,
                      "cluster threshold as a fraction of max f");
  analyze->add_option("--folds", analyze_args.folds, "cross-validation folds");
  analyze->add_option("--cv-seed", analyze_args.cv_seed, "fold shuffle seed");
  analyze->add_option("--large-threshold", analyze_args.large_threshold,
                      "customers above which a failure is large");
  analyze->add_option("--fast-quantile", analyze_args.fast_quantile,
                      "top speed share for prioritized-large");
  analyze->add_option("--prolonged-quantile", analyze_args.prolonged_quantile,
                      "bottom speed share for prolonged-small");

  CurveArgs scaling_args;
  auto* scaling = app.add_subcommand("scaling", "Recovery and failure scaling laws");
  scaling->add_option("events", scaling_args.events_path, "events.json")->required();
  scaling->add_option("labels", scaling_args.labels_path, "labels.csv")->required();
  scaling->add_option("-o,--outdir", scaling_args.outdir, "output directory");

  CurveArgs tipping_args;
  auto* tipping = app.add_subcommand("tipping", "Prioritization baseline and tipping points");
  tipping->add_option("events", tipping_args.events_path, "events.json")->required();
  tipping->add_option("-o,--outdir", tipping_args.outdir, "output directory");
  tipping->add_option("--epsilon", tipping_args.epsilon, "deviation threshold");
  tipping->add_option("--large-threshold", tipping_args.large_threshold,
                      "customers above which a failure is large");

  CurveArgs evolve_args;
  auto* evolve = app.add_subcommand("evolve", "Pending-repairs evolution per category");
  evolve->add_option("events", evolve_args.events_path, "events.json")->required();
  evolve->add_option("labels", evolve_args.labels_path, "labels.csv")->required();
  evolve->add_option("-o,--outdir", evolve_args.outdir, "output directory");
  evolve->add_option("--step", evolve_args.step, "grid step, minutes");

  CurveArgs impact_args;
  auto* impact = app.add_subcommand("impact", "Customer-impact metrics");
  impact->add_option("events", impact_args.events_path, "events.json")->required();
  impact->add_option("labels", impact_args.labels_path, "labels.csv")->required();
  impact->add_option("-o,--outdir", impact_args.outdir, "output directory");
  impact->add_option("--step", impact_args.step, "grid step, minutes");

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Bundle artifacts into a report");
  report->add_option("-i,--indir", report_args.indir, "directory with analysis outputs")
      ->required();
  report->add_option("-o,--outdir", report_args.outdir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ingest->parsed()) return run_ingest(ingest_args);
    if (synth->parsed()) return run_synth(synth_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
    if (scaling->parsed()) return run_scaling(scaling_args);
    if (tipping->parsed()) return run_tipping(tipping_args);
    if (evolve->parsed()) return run_evolve(evolve_args);
    if (impact->parsed()) return run_impact(impact_args);
    if (report->parsed()) return run_report(report_args);
  } catch (const AnalysisError& e) {
    std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what()
              << "\n";
    return (e.code() == ErrorCode::IoError || e.code() == ErrorCode::MissingHeader)
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
