#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "outagekit/events.hpp"
#include "outagekit/records.hpp"

namespace outagekit {

// One failure with its recovery-speed rank inside a ranking population.
// speed_y is 1 for the fastest recovery and approaches 0 for the slowest;
// midrank normalization keeps it strictly inside (0,1).
struct RankedSample {
  std::string record_id;
  std::int64_t size_x = 1;      // customers affected
  double speed_y = 0.0;         // 1 - (rank - 0.5)/n, ties get average rank
  std::int64_t duration = 0;    // minutes
  DeviceType device = DeviceType::Other;
};

// Axis-aligned rectangle of bin indices, inclusive on both ends.
struct BinRect {
  int x0 = 0, x1 = 0;
  int y0 = 0, y1 = 0;

  bool contains(int ix, int iy) const {
    return ix >= x0 && ix <= x1 && iy >= y0 && iy <= y1;
  }
  bool overlaps(const BinRect& o) const {
    return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
  }
  int cell_count() const { return (x1 - x0 + 1) * (y1 - y0 + 1); }
};

// Binned empirical joint distribution of (failure size, recovery speed).
// Size bins are powers of two, [2^j, 2^(j+1)), with the last bin open-ended;
// speed bins are uniform on [0,1]. f per cell is the joint mass minus the
// product of the marginals.
struct JointGrid {
  std::vector<std::int64_t> x_lower_edges;  // {1, 2, 4, ...}; last bin open
  std::vector<double> y_edges;              // y_bins + 1 uniform edges
  std::vector<double> joint;       // row-major, ix * y_bins + iy, sums to 1
  std::vector<double> x_marginal;
  std::vector<double> y_marginal;
  std::vector<double> f_values;    // per-cell f
  std::vector<double> err;         // per-cell std error (CV or cross-event)

  int x_bins() const { return static_cast<int>(x_lower_edges.size()); }
  int y_bins() const { return static_cast<int>(y_edges.size()) - 1; }
  std::size_t cell(int ix, int iy) const {
    return static_cast<std::size_t>(ix) * y_bins() + iy;
  }
  bool same_edges(const JointGrid& o) const;
};

enum class RegionHint { LargeFast, SmallSlow, Other };

const char* region_hint_name(RegionHint h);

struct ClusterRegion {
  BinRect rect;
  double mean_f = 0.0;    // mean of per-cell f inside the rectangle
  double mean_err = 0.0;  // std error of mean_f across replicates
  RegionHint hint = RegionHint::Other;
};

struct ClusterOptions {
  double threshold_frac = 0.05;  // threshold = frac * max cell f
  int folds = 5;
  int x_bins = 0;                // 0 = derive from max size
  int y_bins = 20;
  std::uint64_t cv_seed = 0;     // fold shuffle seed
  // Permutation gate: the observed max cell f must beat `permutations`
  // reshuffles of speed against size at level `significance`, otherwise the
  // whole grid is treated as noise. 0 permutations disables the gate.
  int permutations = 500;
  double significance = 0.01;
};

// Ranks downtime durations ascending within one population (one event
// stage). Ties receive the average rank of their block.
std::vector<RankedSample> rank_recovery_speed(
    const std::vector<FailureRecord>& records);

// Smallest power-of-two bin count whose open-ended last bin still starts at
// or below max_size; at least 2 bins.
int auto_x_bins(std::int64_t max_size);

JointGrid estimate_joint(const std::vector<RankedSample>& samples, int x_bins,
                         int y_bins);

// f over a rectangular bin region: joint mass minus marginal product.
// Throws NonRectangular when the rect is out of grid bounds.
double dependence_region_metric(const JointGrid& grid, const BinRect& rect);

// Grows maximal rectangles above the f threshold on mean_grid, estimates
// each region's error as the std error of its mean f across replicate
// grids, and keeps regions whose mean f exceeds both the threshold and the
// error. Overlapping survivors merge when the merged mean stays above the
// threshold. Replicates must share mean_grid's edges.
std::vector<ClusterRegion> extract_cluster_regions(
    const JointGrid& mean_grid, const std::vector<JointGrid>& replicates,
    double threshold_frac = 0.05);

// Full per-event pipeline: estimate the grid, 5-fold re-estimates for error
// bars, then region growth. Throws TooFewSamples when n < folds.
std::vector<ClusterRegion> extract_clusters(
    const std::vector<RankedSample>& samples, const ClusterOptions& opts = {});

struct CategoryBoundaries {
  std::int64_t large_threshold = 100;  // customers; "large" means strictly more
  double fast_quantile = 0.15;         // top share of speed ranks
  double prolonged_quantile = 0.50;    // bottom share of speed ranks
};

std::map<std::string, CategoryLabel> assign_categories(
    const std::vector<RankedSample>& samples,
    const CategoryBoundaries& bounds = {});

// Cell-wise mean of per-event f grids; err is the std error across events.
// Throws BinMismatch unless all grids share edges.
JointGrid average_dependence(const std::vector<JointGrid>& grids);

}  // namespace outagekit
