#pragma once

#include <variant>

#include <Eigen/Dense>

#include "limitroots/form.hpp"

namespace limitroots {

// n-dimensional Lorentz product of diagonal coordinates:
// sum x_i y_i - x_n y_n.
double lorentz_form(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// A point on the upper sheet of the hyperboloid q = -1 (diagonal coords).
struct HyperboloidPoint {
    Eigen::VectorXd x;
};

enum class BallModel { Projective, Conformal };

/// A point of the open unit ball, tagged by which ball model it lives in.
struct BallPoint {
    Eigen::VectorXd x;
    BallModel model = BallModel::Projective;
};

/// A point of the closed upper half-space; the last coordinate is the
/// height.  The boundary point at infinity is carried explicitly.
struct HalfSpacePoint {
    Eigen::VectorXd x;
    bool at_infinity = false;
};

/// A point of the extended plane R^2 united with infinity.
struct PlanePoint {
    Eigen::Vector2d p{0.0, 0.0};
    bool at_infinity = false;
};

struct Circle {
    Eigen::Vector2d center{0.0, 0.0};
    double radius = 0.0;
};

struct Line {
    Eigen::Vector2d point{0.0, 0.0};  // any point on the line
    Eigen::Vector2d normal{0.0, 1.0}; // unit normal
};

/// A generalized circle of the extended plane.
struct CircleOrLine {
    std::variant<Circle, Line> shape;
    int generation = 0;

    bool is_circle() const { return std::holds_alternative<Circle>(shape); }
    const Circle& circle() const { return std::get<Circle>(shape); }
    const Line& line() const { return std::get<Line>(shape); }
};

CircleOrLine make_circle(const Eigen::Vector2d& center, double radius, int generation = 0);
CircleOrLine make_line(const Eigen::Vector2d& point, const Eigen::Vector2d& normal, int generation = 0);

/// v / sqrt(-q(v)) on the positive sheet.  Input must be time-like.
HyperboloidPoint radial_project(const Eigen::VectorXd& diag_coords);

/// cosh d(x, y) = -B(x, y) on the hyperboloid.
double hyperbolic_distance(const HyperboloidPoint& a, const HyperboloidPoint& b);

/// Chart map between the projective and conformal ball models.  The factor
/// 1/(1 + sqrt(1 - |x|^2)) is the stable form of (1 - sqrt(1-|x|^2))/|x|^2;
/// the boundary sphere is fixed pointwise.
BallPoint projective_to_conformal(const BallPoint& p);
BallPoint conformal_to_projective(const BallPoint& p);

/// u(x) = 2 (x + e_n)/|x + e_n|^2 - e_n: the inversion in the sphere of
/// radius sqrt(2) centered at -e_n.  Maps the conformal ball onto the upper
/// half-space; x = -e_n goes to infinity.
HalfSpacePoint conformal_to_upper(const BallPoint& p);
BallPoint upper_to_conformal(const HalfSpacePoint& p);

/// Inversion of the extended plane across a circle or reflection across a
/// line.  Fixes the mirror pointwise, swaps center and infinity.
PlanePoint invert_point(const CircleOrLine& mirror, const PlanePoint& x);

/// Image of a generalized circle under the inversion across `mirror`, by
/// closed-form center/radius algebra.  A circle through the inversion
/// center maps to a line and vice versa.
CircleOrLine invert_circle(const CircleOrLine& mirror, const CircleOrLine& c);

/// Circumcircle of three non-collinear points.
Circle circumcircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                    const Eigen::Vector2d& c);

enum class HyperplaneRelation { Intersect, Parallel, UltraParallel };

struct HyperplanePosition {
    HyperplaneRelation relation = HyperplaneRelation::Intersect;
    double value = 0.0; // dihedral angle when intersecting, distance when ultra-parallel
};

/// Relative position of the two reflection hyperplanes of unit space-like
/// vectors: |B| < 1 intersect at angle arccos |B|, |B| = 1 parallel,
/// |B| > 1 ultra-parallel at distance arccosh |B|.
HyperplanePosition hyperplane_position(const GramMatrix& G,
                                       const Eigen::VectorXd& alpha,
                                       const Eigen::VectorXd& beta,
                                       double tol = 1e-9);

} // namespace limitroots
