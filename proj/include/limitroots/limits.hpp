#pragma once

#include <array>
#include <vector>

#include "limitroots/projective.hpp"

namespace limitroots {

/// Depth windows for one comparison level.
struct LevelWindows {
    std::array<int, 2> roots{0, 0};
    std::array<int, 2> orbit{0, 0};
};

struct ComparisonLevel {
    std::array<int, 2> root_window{0, 0};
    std::array<int, 2> orbit_window{0, 0};
    std::size_t root_count = 0;
    std::size_t orbit_count = 0;
    double hausdorff = 0.0;
    double root_residual = 0.0;
    double orbit_residual = 0.0;
};

struct ComparisonReport {
    std::vector<ComparisonLevel> levels;
    bool verdict = false;
};

/// Orbit of the imaginary point, normalized, word lengths in
/// [length_lo, length_hi].  Every point is interior to the unit ball.
PointCloud limit_set_sample(const GramMatrix& G, int length_lo, int length_hi,
                            std::size_t budget = kDefaultBudget);

/// Symmetric Hausdorff distance of two clouds in the Euclidean chart metric.
double hausdorff_distance(const PointCloud& a, const PointCloud& b,
                          int threads = 1);

/// max over the cloud of | |p| - 1 |: distance of the sample to the unit
/// sphere of the chart.
double max_isotropy_residual(const PointCloud& cloud);

/// Compares the normalized-root sample with the orbit sample level by level.
/// Verdict: the Hausdorff sequence is non-increasing within 10% slack and
/// the final value is <= eps.
ComparisonReport verify_limit_equality(const GramMatrix& G,
                                       const std::vector<LevelWindows>& levels,
                                       double eps = 0.1,
                                       std::size_t budget = kDefaultBudget,
                                       int threads = 1);

/// Maximum angular gap (radians) after projecting a 2-d cloud radially to
/// the unit circle.  A single point yields 2*pi.
double boundary_coverage(const PointCloud& cloud);

} // namespace limitroots
