#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "outagekit/dependence.hpp"
#include "outagekit/error.hpp"

using namespace outagekit;

namespace {

FailureRecord rec(std::string id, std::int64_t duration,
                  std::int64_t customers = 1) {
  FailureRecord r;
  r.record_id = std::move(id);
  r.occurred_at = 0;
  r.restored_at = duration;
  r.customers = customers;
  return r;
}

RankedSample sample(std::string id, std::int64_t size, double speed,
                    std::int64_t duration = 0) {
  RankedSample s;
  s.record_id = std::move(id);
  s.size_x = size;
  s.speed_y = speed;
  s.duration = duration;
  return s;
}

// Brute-force f over the raw sample list: P(A and B) - P(A)P(B), with A the
// size range of the rect's bins and B the speed range.
double oracle_region_f(const std::vector<RankedSample>& samples,
                       const JointGrid& grid, const BinRect& rect) {
  const std::int64_t x_lo = grid.x_lower_edges[rect.x0];
  const bool x_open = rect.x1 == grid.x_bins() - 1;
  const std::int64_t x_hi = x_open ? 0 : grid.x_lower_edges[rect.x1 + 1];
  const double y_lo = grid.y_edges[rect.y0];
  const double y_hi = grid.y_edges[rect.y1 + 1];
  const int last_y = grid.y_bins();

  std::size_t in_a = 0, in_b = 0, in_ab = 0;
  for (const auto& s : samples) {
    const bool a = s.size_x >= x_lo && (x_open || s.size_x < x_hi);
    // The last speed bin is closed at 1.
    const bool b = s.speed_y >= y_lo &&
                   (rect.y1 == last_y - 1 ? s.speed_y <= 1.0 : s.speed_y < y_hi);
    in_a += a;
    in_b += b;
    in_ab += a && b;
  }
  const double n = static_cast<double>(samples.size());
  return in_ab / n - (in_a / n) * (in_b / n);
}

}  // namespace

TEST_CASE("speed ranks follow the midrank formula") {
  const std::vector<FailureRecord> rs{rec("a", 10), rec("b", 20), rec("c", 30)};
  const auto ranked = rank_recovery_speed(rs);
  CHECK(ranked[0].speed_y == doctest::Approx(1.0 - 0.5 / 3));   // 0.8333
  CHECK(ranked[1].speed_y == doctest::Approx(1.0 - 1.5 / 3));   // 0.5
  CHECK(ranked[2].speed_y == doctest::Approx(1.0 - 2.5 / 3));   // 0.1667
}

TEST_CASE("all-equal durations collapse to speed 0.5") {
  const std::vector<FailureRecord> rs{rec("a", 7), rec("b", 7), rec("c", 7),
                                      rec("d", 7)};
  for (const auto& s : rank_recovery_speed(rs)) {
    CHECK(s.speed_y == doctest::Approx(0.5));
  }
}

TEST_CASE("tie blocks get the average rank") {
  const std::vector<FailureRecord> rs{rec("a", 5), rec("b", 5), rec("c", 9)};
  const auto ranked = rank_recovery_speed(rs);
  CHECK(ranked[0].speed_y == doctest::Approx(1.0 - 1.0 / 3));  // rank 1.5
  CHECK(ranked[1].speed_y == doctest::Approx(1.0 - 1.0 / 3));
  CHECK(ranked[2].speed_y == doctest::Approx(1.0 - 2.5 / 3));  // rank 3
}

TEST_CASE("degenerate one-cell distribution has f = 0") {
  std::vector<RankedSample> samples;
  for (int i = 0; i < 4; ++i) {
    samples.push_back(sample("s" + std::to_string(i), 3, 0.42));
  }
  const auto grid = estimate_joint(samples, 3, 4);
  for (double f : grid.f_values) CHECK(f == doctest::Approx(0.0).epsilon(1e-12));
  double total = 0.0;
  for (double p : grid.joint) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("product distribution over a 2x2 grid is independent") {
  std::vector<RankedSample> samples;
  int k = 0;
  for (std::int64_t size : {1, 2}) {
    for (double speed : {0.25, 0.75}) {
      samples.push_back(sample("s" + std::to_string(k++), size, speed));
    }
  }
  const auto grid = estimate_joint(samples, 2, 2);
  for (double f : grid.f_values) CHECK(std::abs(f) < 1e-9);
}

TEST_CASE("hand-placed samples match brute-force per-cell f") {
  const std::vector<RankedSample> samples{
      sample("a", 1, 0.1), sample("b", 1, 0.2), sample("c", 1, 0.8),
      sample("d", 2, 0.9), sample("e", 2, 0.7), sample("f", 2, 0.3)};
  const auto grid = estimate_joint(samples, 2, 2);
  for (int ix = 0; ix < 2; ++ix) {
    for (int iy = 0; iy < 2; ++iy) {
      const BinRect cell{ix, ix, iy, iy};
      CHECK(grid.f_values[grid.cell(ix, iy)] ==
            doctest::Approx(oracle_region_f(samples, grid, cell)).epsilon(1e-12));
    }
  }
}

TEST_CASE("region metric: full grid and single cells") {
  std::mt19937_64 rng(5);
  std::vector<RankedSample> samples;
  for (int i = 0; i < 40; ++i) {
    samples.push_back(sample("s" + std::to_string(i),
                             1 + static_cast<std::int64_t>(rng() % 200),
                             (rng() % 1000) / 1000.0));
  }
  const auto grid = estimate_joint(samples, 5, 4);
  const BinRect full{0, grid.x_bins() - 1, 0, grid.y_bins() - 1};
  CHECK(std::abs(dependence_region_metric(grid, full)) < 1e-12);
  // Full row/column spans are marginally trivial regions.
  CHECK(std::abs(dependence_region_metric(grid, {0, grid.x_bins() - 1, 1, 2})) <
        1e-12);
  CHECK(std::abs(dependence_region_metric(grid, {2, 3, 0, grid.y_bins() - 1})) <
        1e-12);
  for (int ix = 0; ix < grid.x_bins(); ++ix) {
    for (int iy = 0; iy < grid.y_bins(); ++iy) {
      CHECK(dependence_region_metric(grid, {ix, ix, iy, iy}) ==
            doctest::Approx(grid.f_values[grid.cell(ix, iy)]).epsilon(1e-12));
    }
  }
}

TEST_CASE("region metric matches oracle on arbitrary rectangles") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RankedSample> samples;
    const int n = 5 + static_cast<int>(rng() % 15);
    for (int i = 0; i < n; ++i) {
      samples.push_back(sample("s" + std::to_string(i),
                               1 + static_cast<std::int64_t>(rng() % 64),
                               ((rng() % 1000) + 0.5) / 1001.0));
    }
    const auto grid = estimate_joint(samples, 4, 5);
    for (int x0 = 0; x0 < grid.x_bins(); ++x0) {
      for (int x1 = x0; x1 < grid.x_bins(); ++x1) {
        for (int y0 = 0; y0 < grid.y_bins(); ++y0) {
          for (int y1 = y0; y1 < grid.y_bins(); ++y1) {
            const BinRect r{x0, x1, y0, y1};
            const double f = dependence_region_metric(grid, r);
            CHECK(f == doctest::Approx(oracle_region_f(samples, grid, r))
                           .epsilon(1e-12));
            CHECK(std::abs(f) <= 0.25 + 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("out-of-grid region is rejected") {
  const auto grid = estimate_joint({sample("a", 1, 0.5)}, 2, 2);
  CHECK_THROWS_AS(dependence_region_metric(grid, {0, 2, 0, 1}), AnalysisError);
  CHECK_THROWS_AS(dependence_region_metric(grid, {1, 0, 0, 1}), AnalysisError);
}

TEST_CASE("size-priority ordering yields large-fast and small-slow clusters") {
  // Larger size implies strictly faster recovery.
  std::vector<FailureRecord> rs;
  for (int i = 0; i < 200; ++i) {
    const std::int64_t size = 1 + 4 * i;  // up to 797
    rs.push_back(rec("r" + std::to_string(i), 2000 - 10 * i, size));
  }
  const auto samples = rank_recovery_speed(rs);
  const auto regions = extract_clusters(samples);
  REQUIRE(!regions.empty());
  bool has_large_fast = false, has_small_slow = false;
  for (const auto& r : regions) {
    if (r.hint == RegionHint::LargeFast) has_large_fast = true;
    if (r.hint == RegionHint::SmallSlow) has_small_slow = true;
  }
  CHECK(has_large_fast);
  CHECK(has_small_slow);
}

TEST_CASE("independent samples yield no clusters in most seeds") {
  int with_clusters = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed * 977 + 13);
    std::vector<FailureRecord> rs;
    for (int i = 0; i < 1000; ++i) {
      rs.push_back(rec("r" + std::to_string(i),
                       static_cast<std::int64_t>(rng() % 100000),
                       1 + static_cast<std::int64_t>(rng() % 500)));
    }
    if (!extract_clusters(rank_recovery_speed(rs)).empty()) ++with_clusters;
  }
  CHECK(with_clusters <= 1);
}

TEST_CASE("too few samples for the folds") {
  const std::vector<RankedSample> samples{sample("a", 1, 0.2),
                                          sample("b", 2, 0.5),
                                          sample("c", 3, 0.9)};
  CHECK_THROWS_AS(extract_clusters(samples), AnalysisError);
}

TEST_CASE("category boundaries") {
  const std::vector<RankedSample> samples{
      sample("a", 1500, 0.95), sample("b", 50, 0.10), sample("c", 101, 0.50),
      sample("d", 100, 0.70), sample("e", 101, 0.86)};
  const auto labels = assign_categories(samples);
  CHECK(labels.at("a") == CategoryLabel::PrioritizedLarge);
  CHECK(labels.at("b") == CategoryLabel::ProlongedSmall);
  CHECK(labels.at("c") == CategoryLabel::NonPrioritizedLarge);
  CHECK(labels.at("d") == CategoryLabel::RemainingSmall);  // 100 is not large
  CHECK(labels.at("e") == CategoryLabel::PrioritizedLarge);
}

TEST_CASE("categories partition every sample set") {
  std::mt19937_64 rng(23);
  std::vector<RankedSample> samples;
  for (int i = 0; i < 500; ++i) {
    samples.push_back(sample("s" + std::to_string(i),
                             1 + static_cast<std::int64_t>(rng() % 3000),
                             ((rng() % 1000) + 0.5) / 1001.0));
  }
  const auto labels = assign_categories(samples);
  CHECK(labels.size() == samples.size());
  for (const auto& s : samples) CHECK(labels.count(s.record_id) == 1);
}

TEST_CASE("rank invariance under strictly increasing duration transforms") {
  std::mt19937_64 rng(31);
  std::vector<FailureRecord> rs;
  for (int i = 0; i < 120; ++i) {
    rs.push_back(rec("r" + std::to_string(i),
                     static_cast<std::int64_t>(rng() % 5000),
                     1 + static_cast<std::int64_t>(rng() % 800)));
  }
  const auto base = rank_recovery_speed(rs);
  auto transformed = rs;
  for (auto& r : transformed) {
    const auto d = r.duration();
    r.restored_at = r.occurred_at + d * d * d + 7;
  }
  const auto after = rank_recovery_speed(transformed);
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(after[i].speed_y == base[i].speed_y);  // bit-identical
  }
  const auto g1 = estimate_joint(base, 10, 20);
  const auto g2 = estimate_joint(after, 10, 20);
  CHECK(g1.joint == g2.joint);
  CHECK(g1.f_values == g2.f_values);
  CHECK(assign_categories(base) == assign_categories(after));
}

TEST_CASE("averaging grids: identity, symmetry, and bin mismatch") {
  std::mt19937_64 rng(41);
  std::vector<RankedSample> samples;
  for (int i = 0; i < 50; ++i) {
    samples.push_back(sample("s" + std::to_string(i),
                             1 + static_cast<std::int64_t>(rng() % 100),
                             ((rng() % 1000) + 0.5) / 1001.0));
  }
  const auto g = estimate_joint(samples, 4, 5);
  const auto avg1 = average_dependence({g});
  CHECK(avg1.f_values == g.f_values);

  auto neg = g;
  for (auto& f : neg.f_values) f = -f;
  const auto avg2 = average_dependence({g, neg});
  for (double f : avg2.f_values) CHECK(f == doctest::Approx(0.0).epsilon(1e-12));

  const auto other = estimate_joint(samples, 5, 5);
  CHECK_THROWS_AS(average_dependence({g, other}), AnalysisError);
}

TEST_CASE("three-grid average equals the hand-computed mean per cell") {
  std::mt19937_64 rng(43);
  std::vector<JointGrid> grids;
  for (int e = 0; e < 3; ++e) {
    std::vector<RankedSample> samples;
    for (int i = 0; i < 30; ++i) {
      samples.push_back(sample("s" + std::to_string(i),
                               1 + static_cast<std::int64_t>(rng() % 60),
                               ((rng() % 1000) + 0.5) / 1001.0));
    }
    grids.push_back(estimate_joint(samples, 6, 4));
  }
  const auto avg = average_dependence(grids);
  for (std::size_t c = 0; c < avg.f_values.size(); ++c) {
    const double mean =
        (grids[0].f_values[c] + grids[1].f_values[c] + grids[2].f_values[c]) / 3;
    CHECK(avg.f_values[c] == doctest::Approx(mean).epsilon(1e-12));
  }
}
