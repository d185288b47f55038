#include "outagekit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <queue>
#include <sstream>

#include "outagekit/error.hpp"

namespace outagekit {

const char* dispatch_policy_name(DispatchPolicy p) {
  switch (p) {
    case DispatchPolicy::SizePriority: return "size_priority";
    case DispatchPolicy::Fifo: return "fifo";
    case DispatchPolicy::Random: return "random";
  }
  return "fifo";
}

DispatchPolicy parse_dispatch_policy(const std::string& label) {
  if (label == "size_priority") return DispatchPolicy::SizePriority;
  if (label == "fifo") return DispatchPolicy::Fifo;
  if (label == "random") return DispatchPolicy::Random;
  throw AnalysisError(ErrorCode::IoError, "unknown policy '" + label + "'");
}

double SeededRng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::exponential(double rate) {
  // Avoid log(0); uniform01 is in [0,1).
  return -std::log1p(-uniform01()) / rate;
}

double SeededRng::pareto(double alpha, double x_min) {
  return x_min * std::pow(1.0 - uniform01(), -1.0 / alpha);
}

double SeededRng::normal() {
  // Box-Muller with cached spare, spelled out for cross-platform streams.
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.14159265358979323846 * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double SeededRng::lognormal(double mu, double sigma) {
  return std::exp(mu + sigma * normal());
}

std::array<std::array<double, kDeviceTypeCount>, kCategoryCount>
SynthConfig::default_device_priors() {
  // Rows indexed by CategoryLabel, columns by DeviceType:
  // {SubstationBreaker, Recloser, FusedDisc, Transformer, FusedCutout, Other}
  return {{
      {0.90, 0.05, 0.03, 0.01, 0.01, 0.00},  // PrioritizedLarge
      {0.10, 0.50, 0.35, 0.02, 0.02, 0.01},  // NonPrioritizedLarge
      {0.00, 0.02, 0.03, 0.55, 0.38, 0.02},  // ProlongedSmall
      {0.02, 0.08, 0.10, 0.40, 0.35, 0.05},  // RemainingSmall
  }};
}

std::vector<DispatchOutcome> simulate_restoration(
    const std::vector<SimJob>& jobs, int crews, DispatchPolicy policy,
    SeededRng* rng) {
  std::vector<DispatchOutcome> outcomes(jobs.size());
  if (jobs.empty()) return outcomes;

  std::vector<std::size_t> by_arrival(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) by_arrival[i] = i;
  std::stable_sort(by_arrival.begin(), by_arrival.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (jobs[a].arrival != jobs[b].arrival)
                       return jobs[a].arrival < jobs[b].arrival;
                     return jobs[a].id < jobs[b].id;
                   });

  // Crew free times; the earliest-free crew takes the next job.
  using CrewEntry = std::pair<double, int>;  // (free_at, crew_id)
  std::priority_queue<CrewEntry, std::vector<CrewEntry>, std::greater<>> free_at;
  for (int c = 0; c < crews; ++c) free_at.emplace(0.0, c);

  std::vector<std::size_t> queued;  // job indices waiting for a crew
  std::size_t next_arrival = 0;
  std::size_t dispatch_order = 0;

  auto pick = [&]() {
    std::size_t best_pos = 0;
    if (policy == DispatchPolicy::Random && rng != nullptr) {
      best_pos = static_cast<std::size_t>(rng->next_u64() % queued.size());
    } else {
      for (std::size_t p = 1; p < queued.size(); ++p) {
        const auto& a = jobs[queued[p]];
        const auto& b = jobs[queued[best_pos]];
        bool better = false;
        if (policy == DispatchPolicy::SizePriority && a.size != b.size) {
          better = a.size > b.size;
        } else if (a.arrival != b.arrival) {
          better = a.arrival < b.arrival;
        } else {
          better = a.id < b.id;
        }
        if (better) best_pos = p;
      }
    }
    const std::size_t job = queued[best_pos];
    queued.erase(queued.begin() + best_pos);
    return job;
  };

  std::size_t served = 0;
  while (served < jobs.size()) {
    auto [crew_time, crew_id] = free_at.top();
    free_at.pop();
    // Admit every arrival up to the crew's free instant; an idle crew jumps
    // forward to the next arrival.
    while (next_arrival < by_arrival.size() &&
           jobs[by_arrival[next_arrival]].arrival <= crew_time) {
      queued.push_back(by_arrival[next_arrival++]);
    }
    if (queued.empty()) {
      crew_time = jobs[by_arrival[next_arrival]].arrival;
      while (next_arrival < by_arrival.size() &&
             jobs[by_arrival[next_arrival]].arrival <= crew_time) {
        queued.push_back(by_arrival[next_arrival++]);
      }
    }
    const std::size_t job = pick();
    DispatchOutcome& out = outcomes[job];
    out.start = std::max(crew_time, jobs[job].arrival);
    out.completion = out.start + jobs[job].work;
    out.crew_id = crew_id;
    out.dispatch_order = dispatch_order++;
    free_at.emplace(out.completion, crew_id);
    ++served;
  }
  return outcomes;
}

SimTrace generate_event(const SynthConfig& config) {
  if (config.n_failures == 0) {
    throw AnalysisError(ErrorCode::EmptyConfig, "n_failures must be positive");
  }
  SeededRng rng(config.seed);
  SimTrace trace;
  trace.config = config;

  std::vector<SimJob> jobs(config.n_failures);
  double t = 0.0;
  const double rate_per_minute = config.arrival_rate_per_hour / 60.0;
  for (std::size_t i = 0; i < config.n_failures; ++i) {
    t += rng.exponential(rate_per_minute);
    std::ostringstream id;
    id << "f" << std::setw(6) << std::setfill('0') << i;
    jobs[i].id = id.str();
    jobs[i].arrival = t;
    jobs[i].size = static_cast<std::int64_t>(
        std::ceil(rng.pareto(config.pareto_alpha, config.pareto_x_min)));
    jobs[i].work = rng.lognormal(config.repair_mu, config.repair_sigma);
  }

  trace.dispatch = simulate_restoration(jobs, config.crews, config.policy, &rng);

  trace.records.resize(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    FailureRecord& rec = trace.records[i];
    rec.record_id = jobs[i].id;
    rec.occurred_at = static_cast<std::int64_t>(std::llround(jobs[i].arrival));
    rec.restored_at = static_cast<std::int64_t>(
        std::llround(trace.dispatch[i].completion));
    if (rec.restored_at < rec.occurred_at) rec.restored_at = rec.occurred_at;
    rec.customers = jobs[i].size;
    rec.major_storm_flag = config.storm_flag;
  }

  // Devices follow per-category priors; the category comes from the same
  // ranking the analysis applies, so recovered mixes match the priors.
  const auto ranked = rank_recovery_speed(trace.records);
  trace.true_categories = assign_categories(ranked);
  for (auto& rec : trace.records) {
    const int c = static_cast<int>(trace.true_categories.at(rec.record_id));
    const auto& prior = config.device_priors[c];
    double total = 0.0;
    for (double w : prior) total += w;
    double u = rng.uniform01() * total;
    int chosen = kDeviceTypeCount - 1;
    for (int d = 0; d < kDeviceTypeCount; ++d) {
      if (u < prior[d]) {
        chosen = d;
        break;
      }
      u -= prior[d];
    }
    rec.device = static_cast<DeviceType>(chosen);
  }
  return trace;
}

}  // namespace outagekit
