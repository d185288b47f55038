#include "outagekit/dependence.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>

#include "outagekit/error.hpp"

namespace outagekit {

const char* region_hint_name(RegionHint h) {
  switch (h) {
    case RegionHint::LargeFast: return "large_fast";
    case RegionHint::SmallSlow: return "small_slow";
    case RegionHint::Other: return "other";
  }
  return "other";
}

bool JointGrid::same_edges(const JointGrid& o) const {
  return x_lower_edges == o.x_lower_edges && y_edges == o.y_edges;
}

std::vector<RankedSample> rank_recovery_speed(
    const std::vector<FailureRecord>& records) {
  const std::size_t n = records.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return records[a].duration() < records[b].duration();
                   });

  std::vector<RankedSample> samples(n);
  // Average-rank ties: every member of a block of equal durations gets the
  // mean of the block's 1-based rank range.
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && records[order[j + 1]].duration() ==
                            records[order[i]].duration()) {
      ++j;
    }
    const double avg_rank = (static_cast<double>(i + 1) + j + 1) / 2.0;
    for (std::size_t k = i; k <= j; ++k) {
      const auto& rec = records[order[k]];
      auto& s = samples[order[k]];
      s.record_id = rec.record_id;
      s.size_x = rec.customers;
      s.duration = rec.duration();
      s.device = rec.device;
      s.speed_y = 1.0 - (avg_rank - 0.5) / static_cast<double>(n);
    }
    i = j + 1;
  }
  return samples;
}

int auto_x_bins(std::int64_t max_size) {
  const auto width = std::bit_width(static_cast<std::uint64_t>(
      std::max<std::int64_t>(max_size, 1)));
  return std::max(2, static_cast<int>(width));
}

namespace {

int x_bin_of(std::int64_t size, int x_bins) {
  const int b = static_cast<int>(std::bit_width(
                    static_cast<std::uint64_t>(std::max<std::int64_t>(size, 1)))) -
                1;
  return std::min(b, x_bins - 1);
}

int y_bin_of(double y, int y_bins) {
  const int b = static_cast<int>(y * y_bins);
  return std::clamp(b, 0, y_bins - 1);
}

void check_f_bound(double f) {
  // p - q*r with p <= min(q, r) and p >= q + r - 1 is bounded by 1/4.
  assert(std::abs(f) <= 0.25 + 1e-12);
  (void)f;
}

double region_mean_f(const JointGrid& grid, const BinRect& rect) {
  double sum = 0.0;
  for (int ix = rect.x0; ix <= rect.x1; ++ix) {
    for (int iy = rect.y0; iy <= rect.y1; ++iy) {
      sum += grid.f_values[grid.cell(ix, iy)];
    }
  }
  return sum / rect.cell_count();
}

}  // namespace

JointGrid estimate_joint(const std::vector<RankedSample>& samples, int x_bins,
                         int y_bins) {
  if (samples.empty()) {
    throw AnalysisError(ErrorCode::EmptyEvent, "cannot bin an empty sample set");
  }
  JointGrid grid;
  grid.x_lower_edges.resize(x_bins);
  for (int j = 0; j < x_bins; ++j) {
    grid.x_lower_edges[j] = std::int64_t{1} << j;
  }
  grid.y_edges.resize(y_bins + 1);
  for (int j = 0; j <= y_bins; ++j) {
    grid.y_edges[j] = static_cast<double>(j) / y_bins;
  }
  grid.joint.assign(static_cast<std::size_t>(x_bins) * y_bins, 0.0);
  const double w = 1.0 / static_cast<double>(samples.size());
  for (const auto& s : samples) {
    grid.joint[grid.cell(x_bin_of(s.size_x, x_bins), y_bin_of(s.speed_y, y_bins))] +=
        w;
  }
  grid.x_marginal.assign(x_bins, 0.0);
  grid.y_marginal.assign(y_bins, 0.0);
  for (int ix = 0; ix < x_bins; ++ix) {
    for (int iy = 0; iy < y_bins; ++iy) {
      const double p = grid.joint[grid.cell(ix, iy)];
      grid.x_marginal[ix] += p;
      grid.y_marginal[iy] += p;
    }
  }
  grid.f_values.assign(grid.joint.size(), 0.0);
  for (int ix = 0; ix < x_bins; ++ix) {
    for (int iy = 0; iy < y_bins; ++iy) {
      const double f = grid.joint[grid.cell(ix, iy)] -
                       grid.x_marginal[ix] * grid.y_marginal[iy];
      check_f_bound(f);
      grid.f_values[grid.cell(ix, iy)] = f;
    }
  }
  grid.err.assign(grid.joint.size(), 0.0);
  return grid;
}

double dependence_region_metric(const JointGrid& grid, const BinRect& rect) {
  if (rect.x0 > rect.x1 || rect.y0 > rect.y1 || rect.x0 < 0 || rect.y0 < 0 ||
      rect.x1 >= grid.x_bins() || rect.y1 >= grid.y_bins()) {
    throw AnalysisError(ErrorCode::NonRectangular,
                        "region is not a rectangle of grid bins");
  }
  double joint = 0.0;
  for (int ix = rect.x0; ix <= rect.x1; ++ix) {
    for (int iy = rect.y0; iy <= rect.y1; ++iy) {
      joint += grid.joint[grid.cell(ix, iy)];
    }
  }
  double px = 0.0;
  for (int ix = rect.x0; ix <= rect.x1; ++ix) px += grid.x_marginal[ix];
  double py = 0.0;
  for (int iy = rect.y0; iy <= rect.y1; ++iy) py += grid.y_marginal[iy];
  const double f = joint - px * py;
  check_f_bound(f);
  return f;
}

namespace {

RegionHint classify_hint(const JointGrid& grid, const BinRect& rect) {
  const double y_mid =
      (grid.y_edges[rect.y0] + grid.y_edges[rect.y1 + 1]) / 2.0;
  const double x_mid_bin = (rect.x0 + rect.x1) / 2.0;
  const bool large = x_mid_bin >= (grid.x_bins() - 1) / 2.0;
  if (large && y_mid > 0.5) return RegionHint::LargeFast;
  if (!large && y_mid <= 0.5) return RegionHint::SmallSlow;
  return RegionHint::Other;
}

double region_err(const BinRect& rect, const std::vector<JointGrid>& replicates) {
  if (replicates.size() < 2) return 0.0;
  std::vector<double> values;
  values.reserve(replicates.size());
  for (const auto& g : replicates) values.push_back(region_mean_f(g, rect));
  const double mean =
      std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double stddev = std::sqrt(ss / (values.size() - 1));
  return stddev / std::sqrt(static_cast<double>(values.size()));
}

}  // namespace

std::vector<ClusterRegion> extract_cluster_regions(
    const JointGrid& mean_grid, const std::vector<JointGrid>& replicates,
    double threshold_frac) {
  for (const auto& g : replicates) {
    if (!g.same_edges(mean_grid)) {
      throw AnalysisError(ErrorCode::BinMismatch,
                          "replicate grid edges differ from the mean grid");
    }
  }
  const int xb = mean_grid.x_bins();
  const int yb = mean_grid.y_bins();
  const double f_max =
      *std::max_element(mean_grid.f_values.begin(), mean_grid.f_values.end());
  if (f_max <= 0.0) return {};
  const double tau = threshold_frac * f_max;

  // Seeds above threshold, strongest first; ties by (x, y) index.
  struct Seed {
    double f;
    int ix, iy;
  };
  std::vector<Seed> seeds;
  for (int ix = 0; ix < xb; ++ix) {
    for (int iy = 0; iy < yb; ++iy) {
      const double f = mean_grid.f_values[mean_grid.cell(ix, iy)];
      if (f > tau) seeds.push_back({f, ix, iy});
    }
  }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    if (a.f != b.f) return a.f > b.f;
    if (a.ix != b.ix) return a.ix < b.ix;
    return a.iy < b.iy;
  });

  std::vector<bool> covered(mean_grid.joint.size(), false);
  std::vector<ClusterRegion> grown;
  for (const auto& seed : seeds) {
    if (covered[mean_grid.cell(seed.ix, seed.iy)]) continue;
    BinRect rect{seed.ix, seed.ix, seed.iy, seed.iy};
    // Greedy expansion, one row or column at a time, largest area gain
    // first; candidate order (left, down, right, up) breaks ties toward
    // lower indices.
    for (;;) {
      BinRect best{};
      int best_gain = 0;
      const BinRect candidates[4] = {
          {rect.x0 - 1, rect.x1, rect.y0, rect.y1},
          {rect.x0, rect.x1, rect.y0 - 1, rect.y1},
          {rect.x0, rect.x1 + 1, rect.y0, rect.y1},
          {rect.x0, rect.x1, rect.y0, rect.y1 + 1},
      };
      for (const auto& cand : candidates) {
        if (cand.x0 < 0 || cand.y0 < 0 || cand.x1 >= xb || cand.y1 >= yb)
          continue;
        if (region_mean_f(mean_grid, cand) <= tau) continue;
        const int gain = cand.cell_count() - rect.cell_count();
        if (gain > best_gain) {
          best_gain = gain;
          best = cand;
        }
      }
      if (best_gain == 0) break;
      rect = best;
    }
    for (int ix = rect.x0; ix <= rect.x1; ++ix) {
      for (int iy = rect.y0; iy <= rect.y1; ++iy) {
        covered[mean_grid.cell(ix, iy)] = true;
      }
    }
    ClusterRegion region;
    region.rect = rect;
    region.mean_f = region_mean_f(mean_grid, rect);
    region.mean_err = region_err(rect, replicates);
    grown.push_back(region);
  }

  // Error-bar gate: a region must clear its own uncertainty.
  std::vector<ClusterRegion> accepted;
  for (const auto& r : grown) {
    if (r.mean_f > r.mean_err) accepted.push_back(r);
  }

  // Merge overlapping rectangles into their bounding box while the merged
  // mean stays above threshold.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t a = 0; a < accepted.size() && !merged; ++a) {
      for (std::size_t b = a + 1; b < accepted.size() && !merged; ++b) {
        if (!accepted[a].rect.overlaps(accepted[b].rect)) continue;
        BinRect box{std::min(accepted[a].rect.x0, accepted[b].rect.x0),
                    std::max(accepted[a].rect.x1, accepted[b].rect.x1),
                    std::min(accepted[a].rect.y0, accepted[b].rect.y0),
                    std::max(accepted[a].rect.y1, accepted[b].rect.y1)};
        if (region_mean_f(mean_grid, box) > tau) {
          ClusterRegion region;
          region.rect = box;
          region.mean_f = region_mean_f(mean_grid, box);
          region.mean_err = region_err(box, replicates);
          accepted.erase(accepted.begin() + b);
          accepted[a] = region;
          merged = true;
        }
      }
    }
  }

  for (auto& r : accepted) r.hint = classify_hint(mean_grid, r.rect);
  std::sort(accepted.begin(), accepted.end(),
            [](const ClusterRegion& a, const ClusterRegion& b) {
              return a.mean_f > b.mean_f;
            });
  return accepted;
}

std::vector<ClusterRegion> extract_clusters(
    const std::vector<RankedSample>& samples, const ClusterOptions& opts) {
  if (samples.size() < static_cast<std::size_t>(opts.folds)) {
    throw AnalysisError(ErrorCode::TooFewSamples,
                        "need at least as many samples as folds");
  }
  std::int64_t max_size = 1;
  for (const auto& s : samples) max_size = std::max(max_size, s.size_x);
  const int xb = opts.x_bins > 0 ? opts.x_bins : auto_x_bins(max_size);

  JointGrid full = estimate_joint(samples, xb, opts.y_bins);

  // Permutation gate. The cell threshold is relative to the max cell f, so
  // on independent data it chases pure sampling noise; reshuffling speed
  // against size draws the null distribution of that max directly.
  if (opts.permutations > 0) {
    const double observed_max =
        *std::max_element(full.f_values.begin(), full.f_values.end());
    if (observed_max <= 0.0) return {};
    const std::size_t n = samples.size();
    std::vector<int> xb_of(n), yb_of(n);
    for (std::size_t i = 0; i < n; ++i) {
      xb_of[i] = x_bin_of(samples[i].size_x, xb);
      yb_of[i] = y_bin_of(samples[i].speed_y, opts.y_bins);
    }
    std::vector<double> x_marg(xb, 0.0), y_marg(opts.y_bins, 0.0);
    const double w = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      x_marg[xb_of[i]] += w;
      y_marg[yb_of[i]] += w;
    }
    std::mt19937_64 perm_rng(opts.cv_seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<double> joint(full.joint.size());
    int at_least = 0;
    for (int b = 0; b < opts.permutations; ++b) {
      for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(yb_of[i], yb_of[perm_rng() % (i + 1)]);
      }
      std::fill(joint.begin(), joint.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        joint[static_cast<std::size_t>(xb_of[i]) * opts.y_bins + yb_of[i]] += w;
      }
      double perm_max = 0.0;
      for (int ix = 0; ix < xb; ++ix) {
        for (int iy = 0; iy < opts.y_bins; ++iy) {
          perm_max = std::max(
              perm_max, joint[static_cast<std::size_t>(ix) * opts.y_bins + iy] -
                            x_marg[ix] * y_marg[iy]);
        }
      }
      if (perm_max >= observed_max) ++at_least;
    }
    const double p_value =
        static_cast<double>(at_least + 1) / (opts.permutations + 1);
    if (p_value > opts.significance) return {};
  }

  // Deterministic fold assignment; each replicate re-estimates the grid on
  // the other folds' samples.
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(opts.cv_seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::swap(order[i], order[rng() % (i + 1)]);
  }
  std::vector<JointGrid> fold_grids;
  fold_grids.reserve(opts.folds);
  for (int fold = 0; fold < opts.folds; ++fold) {
    std::vector<RankedSample> train;
    train.reserve(samples.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      if (static_cast<int>(pos % opts.folds) != fold) {
        train.push_back(samples[order[pos]]);
      }
    }
    fold_grids.push_back(estimate_joint(train, xb, opts.y_bins));
  }

  // Per-cell CV std error, reported alongside the full-grid estimate.
  for (std::size_t c = 0; c < full.f_values.size(); ++c) {
    double mean = 0.0;
    for (const auto& g : fold_grids) mean += g.f_values[c];
    mean /= fold_grids.size();
    double ss = 0.0;
    for (const auto& g : fold_grids) {
      ss += (g.f_values[c] - mean) * (g.f_values[c] - mean);
    }
    full.err[c] = fold_grids.size() > 1
                      ? std::sqrt(ss / (fold_grids.size() - 1)) /
                            std::sqrt(static_cast<double>(fold_grids.size()))
                      : 0.0;
  }

  return extract_cluster_regions(full, fold_grids, opts.threshold_frac);
}

std::map<std::string, CategoryLabel> assign_categories(
    const std::vector<RankedSample>& samples, const CategoryBoundaries& bounds) {
  std::map<std::string, CategoryLabel> labels;
  for (const auto& s : samples) {
    CategoryLabel label;
    if (s.size_x > bounds.large_threshold) {
      label = s.speed_y >= 1.0 - bounds.fast_quantile
                  ? CategoryLabel::PrioritizedLarge
                  : CategoryLabel::NonPrioritizedLarge;
    } else {
      label = s.speed_y <= bounds.prolonged_quantile
                  ? CategoryLabel::ProlongedSmall
                  : CategoryLabel::RemainingSmall;
    }
    labels.emplace(s.record_id, label);
  }
  return labels;
}

JointGrid average_dependence(const std::vector<JointGrid>& grids) {
  if (grids.empty()) {
    throw AnalysisError(ErrorCode::EmptyEvent, "no grids to average");
  }
  JointGrid mean = grids.front();
  for (const auto& g : grids) {
    if (!g.same_edges(mean)) {
      throw AnalysisError(ErrorCode::BinMismatch,
                          "grids have mismatched bin edges");
    }
  }
  const double n = static_cast<double>(grids.size());
  for (std::size_t c = 0; c < mean.joint.size(); ++c) {
    double j = 0.0, f = 0.0;
    for (const auto& g : grids) {
      j += g.joint[c];
      f += g.f_values[c];
    }
    mean.joint[c] = j / n;
    mean.f_values[c] = f / n;
    double ss = 0.0;
    for (const auto& g : grids) {
      ss += (g.f_values[c] - mean.f_values[c]) * (g.f_values[c] - mean.f_values[c]);
    }
    mean.err[c] = grids.size() > 1 ? std::sqrt(ss / (n - 1)) / std::sqrt(n) : 0.0;
  }
  for (int ix = 0; ix < mean.x_bins(); ++ix) {
    double m = 0.0;
    for (const auto& g : grids) m += g.x_marginal[ix];
    mean.x_marginal[ix] = m / n;
  }
  for (int iy = 0; iy < mean.y_bins(); ++iy) {
    double m = 0.0;
    for (const auto& g : grids) m += g.y_marginal[iy];
    mean.y_marginal[iy] = m / n;
  }
  return mean;
}

}  // namespace outagekit
