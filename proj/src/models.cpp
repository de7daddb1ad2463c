#include "limitroots/models.hpp"

#include <cmath>

namespace limitroots {

namespace {

constexpr double kTol = 1e-9;

Eigen::Vector2d canonical_normal(Eigen::Vector2d n) {
    const double len = n.norm();
    if (!(len > 1e-12)) throw NumericError("line normal is degenerate");
    n /= len;
    if (n.y() < 0.0 || (n.y() == 0.0 && n.x() < 0.0)) n = -n;
    return n;
}

} // namespace

double lorentz_form(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) throw InputError("lorentz_form: dimension mismatch");
    const int n = static_cast<int>(x.size());
    return x.head(n - 1).dot(y.head(n - 1)) - x[n - 1] * y[n - 1];
}

CircleOrLine make_circle(const Eigen::Vector2d& center, double radius, int generation) {
    if (!(radius > 1e-12)) throw NumericError("circle radius below resolution");
    return CircleOrLine{Circle{center, radius}, generation};
}

CircleOrLine make_line(const Eigen::Vector2d& point, const Eigen::Vector2d& normal,
                       int generation) {
    const Eigen::Vector2d n = canonical_normal(normal);
    // canonical representative: the point closest to the origin
    return CircleOrLine{Line{point.dot(n) * n, n}, generation};
}

HyperboloidPoint radial_project(const Eigen::VectorXd& diag_coords) {
    const int n = static_cast<int>(diag_coords.size());
    const double qv = lorentz_form(diag_coords, diag_coords);
    if (!(qv < 0.0)) throw InputError("radial_project: vector must be time-like");
    Eigen::VectorXd x = diag_coords / std::sqrt(-qv);
    if (x[n - 1] < 0.0) x = -x; // positive sheet
    return HyperboloidPoint{std::move(x)};
}

double hyperbolic_distance(const HyperboloidPoint& a, const HyperboloidPoint& b) {
    if (a.x.size() != b.x.size()) throw InputError("hyperbolic_distance: dimension mismatch");
    const int n = static_cast<int>(a.x.size());
    for (const auto* p : {&a, &b}) {
        if (std::abs(lorentz_form(p->x, p->x) + 1.0) > kTol || !(p->x[n - 1] > 0.0))
            throw InputError("hyperbolic_distance: points must lie on the positive sheet");
    }
    double c = -lorentz_form(a.x, b.x);
    if (c < 1.0 - kTol) throw NumericError("hyperbolic_distance: cosh argument below 1");
    c = std::max(c, 1.0);
    return std::acosh(c);
}

BallPoint projective_to_conformal(const BallPoint& p) {
    if (p.model != BallModel::Projective)
        throw InputError("projective_to_conformal: wrong source model");
    const double r2 = p.x.squaredNorm();
    if (r2 > 1.0 + kTol) throw InputError("projective_to_conformal: point outside closed ball");
    const double factor = 1.0 / (1.0 + std::sqrt(std::max(0.0, 1.0 - r2)));
    return BallPoint{factor * p.x, BallModel::Conformal};
}

BallPoint conformal_to_projective(const BallPoint& p) {
    if (p.model != BallModel::Conformal)
        throw InputError("conformal_to_projective: wrong source model");
    const double r2 = p.x.squaredNorm();
    if (r2 > 1.0 + kTol) throw InputError("conformal_to_projective: point outside closed ball");
    return BallPoint{2.0 / (1.0 + r2) * p.x, BallModel::Projective};
}

HalfSpacePoint conformal_to_upper(const BallPoint& p) {
    if (p.model != BallModel::Conformal)
        throw InputError("conformal_to_upper: wrong source model");
    const int n = static_cast<int>(p.x.size());
    if (n != 2 && n != 3) throw InputError("conformal_to_upper: dimension must be 2 or 3");
    Eigen::VectorXd shifted = p.x;
    shifted[n - 1] += 1.0;
    const double den = shifted.squaredNorm();
    if (den <= 1e-300) return HalfSpacePoint{Eigen::VectorXd::Zero(n), true};
    Eigen::VectorXd y = (2.0 / den) * shifted;
    y[n - 1] -= 1.0;
    return HalfSpacePoint{std::move(y), false};
}

BallPoint upper_to_conformal(const HalfSpacePoint& p) {
    const int n = static_cast<int>(p.x.size());
    if (p.at_infinity) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n == 0 ? 2 : n);
        x[x.size() - 1] = -1.0;
        return BallPoint{std::move(x), BallModel::Conformal};
    }
    if (n != 2 && n != 3) throw InputError("upper_to_conformal: dimension must be 2 or 3");
    Eigen::VectorXd shifted = p.x;
    shifted[n - 1] += 1.0;
    const double den = shifted.squaredNorm();
    if (den <= 1e-300) throw NumericError("upper_to_conformal: point at the inversion center");
    Eigen::VectorXd y = (2.0 / den) * shifted;
    y[n - 1] -= 1.0;
    return BallPoint{std::move(y), BallModel::Conformal};
}

PlanePoint invert_point(const CircleOrLine& mirror, const PlanePoint& x) {
    if (mirror.is_circle()) {
        const Circle& s = mirror.circle();
        if (x.at_infinity) return PlanePoint{s.center, false};
        const Eigen::Vector2d d = x.p - s.center;
        const double d2 = d.squaredNorm();
        if (d2 <= 1e-300) return PlanePoint{{0.0, 0.0}, true};
        return PlanePoint{s.center + (s.radius * s.radius / d2) * d, false};
    }
    const Line& l = mirror.line();
    if (x.at_infinity) return x; // reflections fix infinity
    return PlanePoint{x.p - 2.0 * (x.p - l.point).dot(l.normal) * l.normal, false};
}

CircleOrLine invert_circle(const CircleOrLine& mirror, const CircleOrLine& c) {
    if (!mirror.is_circle()) {
        // Euclidean reflection across a line.
        const Line& m = mirror.line();
        auto reflect_pt = [&](const Eigen::Vector2d& p) {
            return Eigen::Vector2d(p - 2.0 * (p - m.point).dot(m.normal) * m.normal);
        };
        if (c.is_circle())
            return make_circle(reflect_pt(c.circle().center), c.circle().radius, c.generation);
        const Line& l = c.line();
        const Eigen::Vector2d n = l.normal - 2.0 * l.normal.dot(m.normal) * m.normal;
        return make_line(reflect_pt(l.point), n, c.generation);
    }

    const Circle& s = mirror.circle();
    const double k = s.radius * s.radius;

    if (c.is_circle()) {
        const Circle& t = c.circle();
        const Eigen::Vector2d d = t.center - s.center;
        const double dist = d.norm();
        if (std::abs(dist - t.radius) <= kTol * (1.0 + t.radius)) {
            // Passes through the inversion center: the image is a line
            // perpendicular to the center line at distance k / (2 dist).
            if (dist <= 1e-12) throw NumericError("invert_circle: degenerate circle at center");
            const Eigen::Vector2d u = d / dist;
            return make_line(s.center + (k / (2.0 * dist)) * u, u, c.generation);
        }
        const double denom = dist * dist - t.radius * t.radius;
        const double scale = k / denom;
        return make_circle(s.center + scale * d, std::abs(scale) * t.radius, c.generation);
    }

    const Line& l = c.line();
    const double h = (l.point - s.center).dot(l.normal); // signed distance to the center
    if (std::abs(h) <= kTol) {
        // Line through the center maps to itself.
        return make_line(s.center, l.normal, c.generation);
    }
    const Eigen::Vector2d center = s.center + (k / (2.0 * h)) * l.normal;
    return make_circle(center, k / (2.0 * std::abs(h)), c.generation);
}

Circle circumcircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                    const Eigen::Vector2d& c) {
    Eigen::Matrix2d A;
    A.row(0) = (b - a).transpose();
    A.row(1) = (c - a).transpose();
    Eigen::Vector2d rhs(0.5 * (b.squaredNorm() - a.squaredNorm()),
                        0.5 * (c.squaredNorm() - a.squaredNorm()));
    const double det = A.determinant();
    const double scale = (b - a).norm() * (c - a).norm();
    if (std::abs(det) <= 1e-12 * std::max(1.0, scale))
        throw NumericError("circumcircle: points are collinear");
    const Eigen::Vector2d center = A.inverse() * rhs;
    return Circle{center, (a - center).norm()};
}

HyperplanePosition hyperplane_position(const GramMatrix& G, const Eigen::VectorXd& alpha,
                                       const Eigen::VectorXd& beta, double tol) {
    if (std::abs(G.q(alpha) - 1.0) > kTol || std::abs(G.q(beta) - 1.0) > kTol)
        throw InputError("hyperplane_position: vectors must satisfy q = 1");
    const double b = std::abs(G.evaluate(alpha, beta));
    if (b < 1.0 - tol) return {HyperplaneRelation::Intersect, std::acos(b)};
    if (b <= 1.0 + tol) return {HyperplaneRelation::Parallel, 0.0};
    return {HyperplaneRelation::UltraParallel, std::acosh(b)};
}

} // namespace limitroots
