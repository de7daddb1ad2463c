#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "limitroots/models.hpp"
#include "limitroots/projective.hpp"

namespace limitroots {

/// Orbit of a family of circles under four inversions: the configuration of
/// pairwise tangent or disjoint circles that accumulates on the limit set.
struct GasketScene {
    std::vector<CircleOrLine> circles;    // orbit, seeds first, by generation
    std::vector<CircleOrLine> generators; // the four inversion circles
    std::vector<CircleOrLine> seed;
};

/// The unique circle through two boundary points orthogonal to the unit
/// circle (|m|^2 = r^2 + 1), or the diameter line for antipodal points.
CircleOrLine geodesic_circle(const Eigen::Vector2d& a, const Eigen::Vector2d& b);

/// The unique triple of pairwise tangent circles internally tangent to the
/// unit circle at a, b, c.  Solved by damped Newton on the three tangency
/// equations |m_i - m_j| = r_i + r_j with m_i = (1 - r_i) * touch point.
std::array<CircleOrLine, 3> tangent_horocycles(const Eigen::Vector2d& a,
                                               const Eigen::Vector2d& b,
                                               const Eigen::Vector2d& c);

/// Circumcircle of the three pairwise tangency points of the horocycles.
CircleOrLine tangency_circle(const CircleOrLine& ha, const CircleOrLine& hb,
                             const CircleOrLine& hc);

/// Breadth-first orbit of the seed circles under the generator inversions up
/// to generation max_gen, deduplicated at 1e-9 resolution.
GasketScene generate_gasket(const std::vector<CircleOrLine>& seed,
                            const std::vector<CircleOrLine>& generators,
                            int max_gen, std::size_t budget = kDefaultBudget);

/// Seed = three mutually tangent horocycles at a, b, c plus the unit circle;
/// generators = the three geodesic circles plus the tangency circle.
GasketScene intrinsic_gasket(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                             const Eigen::Vector2d& c, int max_gen,
                             std::size_t budget = kDefaultBudget);

/// Chart data for the rank-4 system with all off-diagonal entries -1.  The
/// rotation aligns the last simple-root vertex with +e3 so the point mapped
/// to infinity lies inside the opposite face circle and the planar picture
/// stays bounded.
struct Rank4Chart {
    GramMatrix gram;
    DiagonalBasis basis;
    Eigen::Matrix3d rotation;
    std::array<Eigen::Vector3d, 4> vertices; // rotated chart coords of the simple roots
};

Rank4Chart rank4_chart();

/// Boundary-plane image of a vector: normalize to the chart, push radially
/// to the unit sphere, rotate, then apply the half-space inversion.
PlanePoint rank4_boundary_point(const Rank4Chart& chart, const Eigen::VectorXd& v);

/// Builds the rank-4 scene: the four face circles of the chart tetrahedron
/// mapped to the boundary plane as seeds, the four reflection-sphere traces
/// as generators.
GasketScene rank4_gasket(int max_gen, std::size_t budget = kDefaultBudget);

} // namespace limitroots
