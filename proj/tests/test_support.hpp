#pragma once

// Shared helpers and independent oracles for the test suites.  Everything in
// here recomputes geometry by a different route than the library code it
// checks.

#include <cmath>
#include <complex>
#include <optional>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "limitroots/form.hpp"
#include "limitroots/models.hpp"

namespace testsupport {

inline limitroots::CoxeterDiagram universal_diagram(int rank, double weight = -1.0) {
    limitroots::CoxeterDiagram d;
    d.rank = rank;
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            d.edges.push_back({i, j, limitroots::kInfiniteLabel, weight});
    return d;
}

inline limitroots::GramMatrix universal_gram(int rank, double weight = -1.0) {
    return limitroots::GramMatrix::from_diagram(universal_diagram(rank, weight));
}

inline limitroots::GramMatrix a2_gram() {
    limitroots::CoxeterDiagram d;
    d.rank = 2;
    d.edges.push_back({0, 1, 3, -1.0});
    return limitroots::GramMatrix::from_diagram(d);
}

inline limitroots::GramMatrix dihedral_gram(double weight) {
    limitroots::CoxeterDiagram d;
    d.rank = 2;
    d.edges.push_back({0, 1, limitroots::kInfiniteLabel, weight});
    return limitroots::GramMatrix::from_diagram(d);
}

inline limitroots::GramMatrix triangle_gram(int p, int q, int r) {
    limitroots::CoxeterDiagram d;
    d.rank = 3;
    d.edges.push_back({0, 1, p, -1.0});
    d.edges.push_back({1, 2, q, -1.0});
    d.edges.push_back({0, 2, r, -1.0});
    return limitroots::GramMatrix::from_diagram(d);
}

// ---- plane-geometry oracles -------------------------------------------------

// Circle through three points via the complex cross-ratio construction;
// independent of limitroots::circumcircle.
inline std::optional<limitroots::Circle> circle_through(const Eigen::Vector2d& p1,
                                                        const Eigen::Vector2d& p2,
                                                        const Eigen::Vector2d& p3) {
    using C = std::complex<double>;
    const C z1(p1.x(), p1.y()), z2(p2.x(), p2.y()), z3(p3.x(), p3.y());
    const C w = (z3 - z1) / (z2 - z1);
    if (std::abs(w.imag()) < 1e-12) return std::nullopt; // collinear
    const C c = (z2 - z1) * (w - std::norm(w)) / (C(0, 2) * w.imag()) + z1;
    return limitroots::Circle{{c.real(), c.imag()}, std::abs(z1 - c)};
}

// Image of a circle under an inversion by mapping three sample points.
inline limitroots::CircleOrLine invert_via_points(const limitroots::CircleOrLine& mirror,
                                                  const limitroots::CircleOrLine& c) {
    using namespace limitroots;
    const Circle& src = c.circle();
    std::vector<Eigen::Vector2d> images;
    std::vector<Eigen::Vector2d> escaped; // points that inverted to infinity
    for (double phase : {0.1, 0.1 + 2.0 * M_PI / 3.0, 0.1 + 4.0 * M_PI / 3.0, 1.9, 2.6}) {
        if (images.size() == 3) break;
        const Eigen::Vector2d p =
            src.center + src.radius * Eigen::Vector2d(std::cos(phase), std::sin(phase));
        const PlanePoint img = invert_point(mirror, PlanePoint{p, false});
        if (img.at_infinity)
            escaped.push_back(p);
        else
            images.push_back(img.p);
    }
    if (!escaped.empty() || images.size() < 3) {
        // Source passes through the inversion center: image is the line
        // through any two finite images.
        const Eigen::Vector2d dir = (images[1] - images[0]).normalized();
        return make_line(images[0], {-dir.y(), dir.x()});
    }
    if (auto circ = circle_through(images[0], images[1], images[2]))
        return make_circle(circ->center, circ->radius);
    const Eigen::Vector2d dir = (images[1] - images[0]).normalized();
    return make_line(images[0], {-dir.y(), dir.x()});
}

enum class PairKind { Tangent, Disjoint, Overlap };

// Tangent / disjoint / overlapping classification of two generalized circles.
inline PairKind relate(const limitroots::CircleOrLine& a, const limitroots::CircleOrLine& b,
                       double tol = 1e-9) {
    using namespace limitroots;
    if (a.is_circle() && b.is_circle()) {
        const Circle &c1 = a.circle(), &c2 = b.circle();
        const double d = (c1.center - c2.center).norm();
        if (std::abs(d - (c1.radius + c2.radius)) <= tol) return PairKind::Tangent;
        if (std::abs(d - std::abs(c1.radius - c2.radius)) <= tol) return PairKind::Tangent;
        if (d > c1.radius + c2.radius + tol) return PairKind::Disjoint;
        if (d < std::abs(c1.radius - c2.radius) - tol) return PairKind::Disjoint; // nested
        return PairKind::Overlap;
    }
    if (!a.is_circle() && !b.is_circle()) {
        const double cross = std::abs(a.line().normal.x() * b.line().normal.y() -
                                      a.line().normal.y() * b.line().normal.x());
        return cross <= tol ? PairKind::Disjoint : PairKind::Overlap;
    }
    const auto& circ = a.is_circle() ? a.circle() : b.circle();
    const auto& line = a.is_circle() ? b.line() : a.line();
    const double h = std::abs((circ.center - line.point).dot(line.normal));
    if (std::abs(h - circ.radius) <= tol) return PairKind::Tangent;
    return h > circ.radius + tol ? PairKind::Disjoint : PairKind::Overlap;
}

// Tangency points of all tangent circle pairs in a family.
inline std::vector<Eigen::Vector2d>
pairwise_tangency_points(const std::vector<limitroots::CircleOrLine>& circles,
                         double tol = 1e-9) {
    std::vector<Eigen::Vector2d> points;
    for (std::size_t i = 0; i < circles.size(); ++i) {
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            if (!circles[i].is_circle() || !circles[j].is_circle()) continue;
            const auto &a = circles[i].circle(), &b = circles[j].circle();
            const double d = (a.center - b.center).norm();
            if (d <= tol) continue;
            const Eigen::Vector2d u = (b.center - a.center) / d;
            if (std::abs(d - (a.radius + b.radius)) <= tol)
                points.push_back(a.center + a.radius * u);
            else if (std::abs(d - std::abs(a.radius - b.radius)) <= tol)
                points.push_back(a.radius > b.radius ? Eigen::Vector2d(a.center + a.radius * u)
                                                     : Eigen::Vector2d(b.center - b.radius * u));
        }
    }
    return points;
}

// ---- hyperbolic oracles -----------------------------------------------------

// Distance in the conformal ball via the cross-ratio formula.
inline double poincare_distance(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    const double a = (u - v).squaredNorm();
    const double b = (1.0 - u.squaredNorm()) * (1.0 - v.squaredNorm());
    return std::acosh(1.0 + 2.0 * a / b);
}

// Horocycle triple by transport to the half-plane: rotate c to (0,-1), map by
// the boundary inversion, read off the equal-radius configuration, map back.
inline std::array<limitroots::CircleOrLine, 3>
transport_horocycles(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                     const Eigen::Vector2d& c) {
    using namespace limitroots;
    const double theta = std::atan2(c.y(), c.x());
    const double rot = -M_PI / 2.0 - theta; // send c to (0,-1)
    Eigen::Matrix2d R;
    R << std::cos(rot), -std::sin(rot), std::sin(rot), std::cos(rot);

    const CircleOrLine ucirc = make_circle({0.0, -1.0}, std::sqrt(2.0));
    auto to_half = [&](const Eigen::Vector2d& p) {
        return invert_point(ucirc, PlanePoint{R * p, false}).p;
    };
    const double xa = to_half(a).x();
    const double xb = to_half(b).x();
    const double r = std::abs(xa - xb) / 2.0;

    const CircleOrLine ha = make_circle({xa, r}, r);
    const CircleOrLine hb = make_circle({xb, r}, r);
    const CircleOrLine hc = make_line({0.0, 2.0 * r}, {0.0, 1.0});

    const Eigen::Matrix2d Rback = R.transpose();
    auto back = [&](const CircleOrLine& circ) {
        const CircleOrLine in_disk = invert_circle(ucirc, circ);
        const Circle& k = in_disk.circle();
        return make_circle(Rback * k.center, k.radius);
    };
    return {back(ha), back(hb), back(hc)};
}

// ---- enumeration oracles ----------------------------------------------------

// Positive roots of the infinite dihedral system by direct chain iteration:
// two alternating reflection chains starting at the simple roots.
inline std::vector<std::pair<Eigen::Vector2d, int>> dihedral_roots(double weight,
                                                                   int max_depth) {
    const double c = weight;
    auto s0 = [&](Eigen::Vector2d v) { return Eigen::Vector2d(-v.x() - 2 * c * v.y(), v.y()); };
    auto s1 = [&](Eigen::Vector2d v) { return Eigen::Vector2d(v.x(), -v.y() - 2 * c * v.x()); };
    std::vector<std::pair<Eigen::Vector2d, int>> roots;
    roots.push_back({{1.0, 0.0}, 0});
    roots.push_back({{0.0, 1.0}, 0});
    Eigen::Vector2d chain_a{1.0, 0.0}, chain_b{0.0, 1.0};
    for (int depth = 1; depth <= max_depth; ++depth) {
        chain_a = (depth % 2 == 1) ? s1(chain_a) : s0(chain_a);
        chain_b = (depth % 2 == 1) ? s0(chain_b) : s1(chain_b);
        roots.push_back({chain_a, depth});
        roots.push_back({chain_b, depth});
    }
    return roots;
}

// All images of a start vector under words up to a given length, counted with
// rounded-coordinate deduplication.
inline std::size_t word_orbit_count(const limitroots::GramMatrix& G,
                                    const Eigen::VectorXd& start, int max_length) {
    const int n = G.rank();
    std::set<std::vector<long long>> seen;
    auto key_of = [](const Eigen::VectorXd& v) {
        std::vector<long long> key;
        for (Eigen::Index i = 0; i < v.size(); ++i) key.push_back(std::llround(v[i] * 1e9));
        return key;
    };
    std::vector<Eigen::VectorXd> frontier{start};
    seen.insert(key_of(start));
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Eigen::VectorXd> next;
        for (const auto& v : frontier) {
            for (int j = 0; j < n; ++j) {
                Eigen::VectorXd w = v - 2.0 * (G.matrix() * v)[j] * Eigen::VectorXd::Unit(n, j);
                if (seen.insert(key_of(w)).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

} // namespace testsupport
