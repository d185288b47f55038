#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "outagekit/dependence.hpp"
#include "outagekit/events.hpp"
#include "outagekit/records.hpp"

namespace outagekit {

enum class DispatchPolicy { SizePriority, Fifo, Random };

const char* dispatch_policy_name(DispatchPolicy p);
DispatchPolicy parse_dispatch_policy(const std::string& label);

// Deterministic generator stream. All transforms are written out explicitly
// so a given seed produces the same draws on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  double uniform01();                         // in [0, 1)
  double exponential(double rate);
  double pareto(double alpha, double x_min);  // heavy tail, x >= x_min
  double lognormal(double mu, double sigma);  // exp(N(mu, sigma^2))
  std::uint64_t next_u64() { return engine_(); }

 private:
  double normal();
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t n_failures = 100;
  double arrival_rate_per_hour = 60.0;  // exponential inter-arrival times
  double pareto_alpha = 1.1;            // size tail index
  double pareto_x_min = 1.0;            // sizes discretized by ceiling
  double repair_mu = 3.4;               // lognormal log-mean, minutes of work
  double repair_sigma = 0.5;
  int crews = 1;
  DispatchPolicy policy = DispatchPolicy::SizePriority;
  bool storm_flag = false;
  // Device sampling weights per recovery category, row-normalized on use.
  std::array<std::array<double, kDeviceTypeCount>, kCategoryCount>
      device_priors = default_device_priors();

  static std::array<std::array<double, kDeviceTypeCount>, kCategoryCount>
  default_device_priors();
};

struct SimJob {
  std::string id;
  double arrival = 0.0;   // minutes
  std::int64_t size = 1;  // customers
  double work = 0.0;      // crew minutes required
};

struct DispatchOutcome {
  double start = 0.0;
  double completion = 0.0;
  int crew_id = 0;
  std::size_t dispatch_order = 0;  // 0-based order of service start
};

// Event-driven crew dispatch without preemption. Whenever a crew frees up,
// the next job is chosen among the queued arrivals by policy; ties go to
// the earlier arrival, then the smaller id. Outcomes align with `jobs`.
std::vector<DispatchOutcome> simulate_restoration(
    const std::vector<SimJob>& jobs, int crews, DispatchPolicy policy,
    SeededRng* rng = nullptr);

struct SimTrace {
  std::vector<FailureRecord> records;       // in arrival order
  std::vector<DispatchOutcome> dispatch;    // aligned with records
  std::map<std::string, CategoryLabel> true_categories;
  SynthConfig config;
};

// Pure function of the config: arrivals, sizes, and repair work are sampled
// from one seeded stream, the queue is serviced per policy, and devices are
// drawn from the per-category priors. Throws EmptyConfig when n_failures=0.
SimTrace generate_event(const SynthConfig& config);

}  // namespace outagekit
