#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "outagekit/error.hpp"
#include "outagekit/ingest.hpp"
#include "outagekit/synth.hpp"
#include "outagekit/triage.hpp"

using namespace outagekit;

namespace {

SimJob job(std::string id, double arrival, std::int64_t size, double work) {
  return SimJob{std::move(id), arrival, size, work};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

TEST_CASE("single crew fifo serves in id order at equal arrival") {
  const std::vector<SimJob> jobs{job("a", 0, 1, 10), job("b", 0, 1, 5)};
  const auto outcomes = simulate_restoration(jobs, 1, DispatchPolicy::Fifo);
  CHECK(outcomes[0].completion == doctest::Approx(10.0));
  CHECK(outcomes[1].completion == doctest::Approx(15.0));
}

TEST_CASE("size priority serves the big job first") {
  const std::vector<SimJob> jobs{job("a", 0, 1, 10), job("b", 0, 100, 5)};
  const auto outcomes =
      simulate_restoration(jobs, 1, DispatchPolicy::SizePriority);
  CHECK(outcomes[1].dispatch_order == 0);
  CHECK(outcomes[1].completion == doctest::Approx(5.0));
  CHECK(outcomes[0].completion == doctest::Approx(15.0));
}

TEST_CASE("two crews, four staggered jobs, hand-traced schedule") {
  // crew0 takes a at t=0 (done 8), crew1 takes b at t=1 (done 5);
  // crew1 takes c at t=5 (done 11), crew0 takes d at t=8 (done 10).
  const std::vector<SimJob> jobs{job("a", 0, 1, 8), job("b", 1, 1, 4),
                                 job("c", 2, 1, 6), job("d", 3, 1, 2)};
  const auto outcomes = simulate_restoration(jobs, 2, DispatchPolicy::Fifo);
  CHECK(outcomes[0].completion == doctest::Approx(8.0));
  CHECK(outcomes[1].completion == doctest::Approx(5.0));
  CHECK(outcomes[2].completion == doctest::Approx(11.0));
  CHECK(outcomes[3].completion == doctest::Approx(10.0));
}

TEST_CASE("all arrivals queued before service: priority order is by size") {
  std::vector<SimJob> jobs;
  for (int i = 0; i < 3; ++i) {
    jobs.push_back(job("j" + std::to_string(i), 0.0, 10 + i, 5.0));
  }
  const auto outcomes =
      simulate_restoration(jobs, 1, DispatchPolicy::SizePriority);
  CHECK(outcomes[2].dispatch_order == 0);
  CHECK(outcomes[1].dispatch_order == 1);
  CHECK(outcomes[0].dispatch_order == 2);
}

TEST_CASE("fifo dispatch order equals arrival order") {
  SynthConfig config;
  config.seed = 21;
  config.n_failures = 50;
  config.policy = DispatchPolicy::Fifo;
  config.crews = 2;
  const auto trace = generate_event(config);
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    if (!first) CHECK(trace.dispatch[i].dispatch_order > prev);
    prev = trace.dispatch[i].dispatch_order;
    first = false;
  }
}

TEST_CASE("work conservation: busy crew time equals sampled work") {
  const std::vector<SimJob> jobs{job("a", 0, 1, 8), job("b", 1, 9, 4),
                                 job("c", 2, 3, 6), job("d", 30, 2, 2)};
  for (auto policy : {DispatchPolicy::Fifo, DispatchPolicy::SizePriority}) {
    const auto outcomes = simulate_restoration(jobs, 2, policy);
    double busy = 0.0, work = 0.0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      busy += outcomes[i].completion - outcomes[i].start;
      work += jobs[i].work;
    }
    CHECK(busy == doctest::Approx(work));
  }
}

TEST_CASE("no crew serves two failures at once") {
  SynthConfig config;
  config.seed = 5;
  config.n_failures = 200;
  config.crews = 3;
  const auto trace = generate_event(config);
  std::map<int, std::vector<std::pair<double, double>>> by_crew;
  for (const auto& d : trace.dispatch) {
    by_crew[d.crew_id].emplace_back(d.start, d.completion);
  }
  for (auto& [crew, spans] : by_crew) {
    std::sort(spans.begin(), spans.end());
    for (std::size_t i = 1; i < spans.size(); ++i) {
      CHECK(spans[i].first >= spans[i - 1].second - 1e-9);
    }
  }
}

TEST_CASE("a trace is a pure function of its config") {
  SynthConfig config;
  config.seed = 99;
  config.n_failures = 100;
  config.policy = DispatchPolicy::Random;
  const auto a = generate_event(config);
  const auto b = generate_event(config);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].occurred_at == b.records[i].occurred_at);
    CHECK(a.records[i].restored_at == b.records[i].restored_at);
    CHECK(a.records[i].customers == b.records[i].customers);
    CHECK(a.records[i].device == b.records[i].device);
  }
}

TEST_CASE("golden trace hash for seed 42") {
  SynthConfig config;
  config.seed = 42;
  config.n_failures = 100;
  const auto trace = generate_event(config);
  std::ostringstream csv;
  write_outage_csv(csv, trace.records);
  // Frozen at first build; any change here is a reproducibility break.
  CHECK(fnv1a(csv.str()) == 0xad09d47e858e5236ull);
}

TEST_CASE("empty config is an error") {
  SynthConfig config;
  config.n_failures = 0;
  CHECK_THROWS_AS(generate_event(config), AnalysisError);
}

TEST_CASE("burst arrivals with one priority crew restore large first exactly") {
  // All arrivals land before the first completion, so completion order is
  // descending size and the tipping value is exactly 1.
  SynthConfig config;
  config.seed = 7;
  config.n_failures = 300;
  config.arrival_rate_per_hour = 36000.0;  // ~0.5 minute burst
  config.pareto_alpha = 0.6;
  config.crews = 1;
  config.policy = DispatchPolicy::SizePriority;
  config.repair_mu = 3.4;  // ~30 min typical repair
  const auto trace = generate_event(config);
  const auto ranked = rank_recovery_speed(trace.records);
  bool has_large = false;
  for (const auto& s : ranked) has_large |= s.size_x > 100;
  REQUIRE(has_large);
  const auto curve = baseline_curve(ranked);
  const auto tp = tipping_point(curve);
  CHECK(tp.value == 1.0);
}
