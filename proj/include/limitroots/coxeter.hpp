#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "limitroots/form.hpp"

namespace limitroots {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// A positive root in simple-root coordinates.  depth is the minimal number
/// of simple reflections producing it from a simple root.
struct Root {
    Eigen::VectorXd vector;
    int depth = 0;
    bool positive = true;
};

/// A point of a group orbit; length is the minimal word length at discovery.
struct OrbitPoint {
    Eigen::VectorXd vector;
    int length = 0;
};

/// s_alpha(v) = v - 2 B(alpha, v) alpha.  Requires q(alpha) = 1 within 1e-9;
/// callers must normalize first.
Eigen::VectorXd reflect(const GramMatrix& G, const Eigen::VectorXd& alpha,
                        const Eigen::VectorXd& v);

/// Breadth-first closure of the simple roots under the simple reflections,
/// truncated at max_depth and restricted to positive roots.  Output order is
/// deterministic: by (depth, discovery order).  Throws BudgetError when the
/// closure exceeds `budget` elements.
std::vector<Root> generate_roots(const GramMatrix& G, int max_depth,
                                 std::size_t budget = kDefaultBudget);

/// Breadth-first orbit of `start` under the simple reflections up to word
/// length max_length, deduplicated at 1e-9 resolution.
std::vector<OrbitPoint> orbit_points(const GramMatrix& G,
                                     const Eigen::VectorXd& start,
                                     int max_length,
                                     std::size_t budget = kDefaultBudget);

} // namespace limitroots
