#include <doctest.h>

#include <algorithm>
#include <random>

#include "outagekit/error.hpp"
#include "outagekit/events.hpp"

using namespace outagekit;

namespace {

FailureRecord rec(std::string id, std::int64_t occ, std::int64_t rest,
                  std::int64_t customers = 1, bool storm = false) {
  FailureRecord r;
  r.record_id = std::move(id);
  r.occurred_at = occ;
  r.restored_at = rest;
  r.customers = customers;
  r.major_storm_flag = storm;
  return r;
}

// Counts intervals containing t directly.
std::int64_t stab_count(const std::vector<FailureRecord>& rs, std::int64_t t) {
  std::int64_t c = 0;
  for (const auto& r : rs) {
    if (r.occurred_at <= t && t < r.restored_at) ++c;
  }
  return c;
}

std::vector<FailureRecord> random_event(std::mt19937_64& rng, int n) {
  std::vector<FailureRecord> rs;
  for (int i = 0; i < n; ++i) {
    const auto occ = static_cast<std::int64_t>(rng() % 1000);
    rs.push_back(rec("r" + std::to_string(i), occ,
                     occ + 1 + static_cast<std::int64_t>(rng() % 800)));
  }
  return rs;
}

}  // namespace

TEST_CASE("single failure gives a unit step") {
  const std::vector<FailureRecord> rs{rec("a", 0, 100)};
  const auto series = pending_series(rs, 10);
  CHECK(series.peak_value == 1);
  CHECK(series.peak_time == 0);
  for (std::size_t i = 0; i < series.counts.size(); ++i) {
    const auto t = series.grid_time(i);
    CHECK(series.counts[i] == (t < 100 ? 1 : 0));
  }
}

TEST_CASE("two overlapping failures peak at the overlap") {
  const std::vector<FailureRecord> rs{rec("a", 0, 100), rec("b", 50, 150)};
  const auto series = pending_series(rs, 10);
  CHECK(series.peak_value == 2);
  CHECK(series.peak_time == 50);
}

TEST_CASE("pending counts match brute-force interval stabbing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rs = random_event(rng, 5);
    const auto series = pending_series(rs, 10);
    for (std::size_t i = 0; i < series.counts.size(); ++i) {
      CHECK(series.counts[i] == stab_count(rs, series.grid_time(i)));
    }
    CHECK(series.counts.back() == 0);
  }
}

TEST_CASE("pending series throws on empty event") {
  CHECK_THROWS_AS(pending_series({}, 10), AnalysisError);
}

TEST_CASE("pending series is translation invariant") {
  std::mt19937_64 rng(3);
  auto rs = random_event(rng, 8);
  const auto base = pending_series(rs, 10);
  for (auto& r : rs) {
    r.occurred_at += 12345;
    r.restored_at += 12345;
  }
  const auto shifted = pending_series(rs, 10);
  CHECK(shifted.peak_value == base.peak_value);
  CHECK(shifted.peak_time == base.peak_time + 12345);
  CHECK(shifted.counts == base.counts);
}

TEST_CASE("stage split is inclusive at the peak") {
  // Peak of 2 is reached at t=50 and again at t=60; the earlier time wins,
  // and the record occurring exactly at the peak stays in stage 1.
  const std::vector<FailureRecord> rs{rec("a", 0, 55), rec("b", 50, 80),
                                      rec("c", 60, 90)};
  const auto series = pending_series(rs, 10);
  REQUIRE(series.peak_time == 50);
  REQUIRE(series.peak_value == 2);
  const auto partition = split_stages(rs, series);
  CHECK(partition.stage1_ids == std::vector<std::string>{"a", "b"});
  CHECK(partition.stage2_ids == std::vector<std::string>{"c"});
  CHECK(partition.split_time == 50);
}

TEST_CASE("single-failure event has empty stage 2") {
  const std::vector<FailureRecord> rs{rec("a", 10, 200)};
  const auto partition = split_stages(rs, pending_series(rs, 10));
  CHECK(partition.stage1_ids.size() == 1);
  CHECK(partition.stage2_ids.empty());
}

TEST_CASE("stage split matches a brute-force peak scan") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rs = random_event(rng, 12);
    const auto series = pending_series(rs, 7);

    // Oracle: scan every occurrence endpoint for the earliest max count.
    std::int64_t best_t = 0, best_c = -1;
    std::vector<std::int64_t> times;
    for (const auto& r : rs) times.push_back(r.occurred_at);
    std::sort(times.begin(), times.end());
    for (auto t : times) {
      const auto c = stab_count(rs, t);
      if (c > best_c) {
        best_c = c;
        best_t = t;
      }
    }
    CHECK(series.peak_value == best_c);
    CHECK(series.peak_time == best_t);

    const auto partition = split_stages(rs, series);
    CHECK(partition.stage1_ids.size() + partition.stage2_ids.size() ==
          rs.size());
    for (const auto& r : rs) {
      const bool in1 = r.occurred_at <= best_t;
      const auto& expected = in1 ? partition.stage1_ids : partition.stage2_ids;
      CHECK(std::find(expected.begin(), expected.end(), r.record_id) !=
            expected.end());
    }
  }
}

TEST_CASE("severity classes follow the storm flag and failure count") {
  auto make = [](int n, bool storm) {
    std::vector<FailureRecord> rs;
    for (int i = 0; i < n; ++i) {
      rs.push_back(rec("r" + std::to_string(i), 0, 10, 1, storm));
    }
    return rs;
  };
  CHECK(classify_severity(make(3315, true)) == SeverityClass::Extreme);
  CHECK(classify_severity(make(1373, true)) == SeverityClass::Extreme);
  CHECK(classify_severity(make(1372, true)) == SeverityClass::Severe);
  CHECK(classify_severity(make(106, true)) == SeverityClass::Severe);
  CHECK(classify_severity(make(101, false)) == SeverityClass::Moderate);
  CHECK(classify_severity(make(100, false)) == SeverityClass::Moderate);
  CHECK(classify_severity(make(40, false)) == SeverityClass::Sporadic);
}

TEST_CASE("per-category series sum to the total at every grid point") {
  std::mt19937_64 rng(29);
  const auto rs = random_event(rng, 30);
  auto event = make_event("e0", rs, 10);
  std::map<std::string, CategoryLabel> labels;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    labels[rs[i].record_id] = static_cast<CategoryLabel>(i % kCategoryCount);
  }
  const auto per_category = category_pending_series(event, labels);
  REQUIRE(per_category.size() == kCategoryCount);
  for (std::size_t i = 0; i < event.pending.counts.size(); ++i) {
    std::int64_t sum = 0;
    for (const auto& [label, series] : per_category) sum += series.counts[i];
    CHECK(sum == event.pending.counts[i]);
  }
}

TEST_CASE("a single-category event reproduces the total series") {
  const std::vector<FailureRecord> rs{rec("a", 0, 100), rec("b", 30, 120)};
  auto event = make_event("e0", rs, 10);
  std::map<std::string, CategoryLabel> labels{
      {"a", CategoryLabel::ProlongedSmall}, {"b", CategoryLabel::ProlongedSmall}};
  const auto per_category = category_pending_series(event, labels);
  CHECK(per_category.at(CategoryLabel::ProlongedSmall).counts ==
        event.pending.counts);
  for (auto c : per_category.at(CategoryLabel::PrioritizedLarge).counts) {
    CHECK(c == 0);
  }
}

TEST_CASE("unlabeled record raises MISSING_LABEL") {
  const std::vector<FailureRecord> rs{rec("a", 0, 100), rec("b", 30, 120)};
  auto event = make_event("e0", rs, 10);
  std::map<std::string, CategoryLabel> labels{{"a", CategoryLabel::RemainingSmall}};
  CHECK_THROWS_AS(category_pending_series(event, labels), AnalysisError);
}
