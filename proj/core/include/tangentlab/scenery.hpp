#ifndef TANGENTLAB_SCENERY_HPP
#define TANGENTLAB_SCENERY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tangentlab/measure.hpp"
#include "tangentlab/setmetric.hpp"
#include "tangentlab/views.hpp"

namespace tangentlab {

/// t_k = t0 * rho^k for k < count.
struct ScaleLadder {
    double t0 = 0.1;
    double rho = 0.2;
    int count = 6;

    std::vector<double> scales() const;
};

struct ZoomParams {
    ScaleLadder ladder;
    int K = 3;
    int grid = 512;
    int depth_cap = kDefaultDepthCap;
};

struct ZoomRow {
    int k = 0;
    double t = 0.0;
    int depth_n = 0;
    bool separation_bound_holds = false;
    double eps = 0.0;
    bool is_pattern = false;
    double pattern_area = 0.0;
    double area_bound = 1.0;
    bool area_bound_defined = false;
    /// Largest normalized height among the members of P^K.
    double max_rect_height = 0.0;
    /// product_deviation of the rasterized fine view.
    double product_deviation = 0.0;
    /// Raster Hausdorff distance between the fine view and P^K.
    double view_distance = 0.0;
    bool clipped = false;
};

struct ZoomReport {
    Word prefix;
    std::vector<ZoomRow> rows;

    /// Index of the first row flagged as a pattern, or rows.size().
    std::size_t first_pattern() const;
};

ZoomReport zoom_sequence(const SelfAffineSystem& sys, const Word& x_prefix, const ZoomParams& params);

std::string zoom_csv_header();
std::string zoom_csv_rows(const ZoomReport& report, std::size_t sample);

/// Rasterized fine views at one point along a scale list.
struct Gallery {
    int grid = 0;
    std::vector<double> scales;
    std::vector<GridSet> views;
};

Gallery gallery_collect(const SelfAffineSystem& sys, const Word& x_prefix, const std::vector<double>& scales, int grid,
                        int depth_cap = kDefaultDepthCap);

struct GalleryDistance {
    double one_sided = 0.0;
    double symmetric = 0.0;
};

GalleryDistance gallery_distance(const Gallery& g1, const Gallery& g2);
/// Pairwise view distances, rows indexed by g1.
std::vector<std::vector<double>> gallery_matrix(const Gallery& g1, const Gallery& g2);

enum class BorderSide { Left, Right };

struct BoundaryView {
    double t = 0.0;
    std::size_t occupied = 0;
    /// Occupied cells on the forbidden side of the center line.
    std::size_t violations = 0;
    bool is_pattern = false;
};

struct BoundaryReport {
    BorderSide side = BorderSide::Left;
    Letter letter = 0;
    Point point;
    int grid = 0;
    std::vector<BoundaryView> views;

    bool holds() const;
};

/// Views at the fixed point of the leftmost (or rightmost) map at `count` scales
/// t0 * s_*^k; on the left side every occupied cell must satisfy x1 >= 1/2 - 1/N.
BoundaryReport boundary_demo(const SelfAffineSystem& sys, int grid, BorderSide side = BorderSide::Left,
                             int count = 4, double t0 = 0.1, int K = 3);

/// Worker count: hardware concurrency, capped by TANGENTLAB_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on a worker pool. The first exception (lowest
/// index) is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned workers = 0);

/// Addresses sampled from nu_p, one RNG substream per sample.
std::vector<Word> sample_points(const ProbVector& p, std::uint64_t seed, std::size_t count, std::size_t length);

/// zoom_sequence at each point, reduced in sample order.
std::vector<ZoomReport> zoom_experiment(const SelfAffineSystem& sys, const std::vector<Word>& points,
                                        const ZoomParams& params, unsigned workers = 0);

}  // namespace tangentlab

#endif
