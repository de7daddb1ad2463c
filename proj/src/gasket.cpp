#include "limitroots/gasket.hpp"

#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>

#include <Eigen/Dense>

namespace limitroots {

namespace {

constexpr double kUnitTol = 1e-9;

void require_boundary_point(const Eigen::Vector2d& p) {
    if (std::abs(p.norm() - 1.0) > kUnitTol)
        throw InputError("expected a point of the unit circle");
}

Eigen::Vector2d touch_point(const CircleOrLine& h) {
    // A horocycle has center (1 - r) * p with touch point p on the unit circle.
    const Circle& c = h.circle();
    const double len = c.center.norm();
    if (!(len > 1e-12)) throw InputError("not a horocycle: centered circle");
    return c.center / len;
}

// Tangency point of two externally tangent circles.
Eigen::Vector2d mutual_tangency(const Circle& a, const Circle& b) {
    const Eigen::Vector2d d = b.center - a.center;
    return a.center + (a.radius / d.norm()) * d;
}

// Rounded key for generalized-circle deduplication at 1e-9 resolution.
std::vector<std::int64_t> scene_key(const CircleOrLine& c) {
    auto r9 = [](double v) {
        auto r = std::llround(v * 1e9);
        return r == 0 ? 0 : r; // collapse -0
    };
    if (c.is_circle()) {
        const Circle& k = c.circle();
        return {0, r9(k.center.x()), r9(k.center.y()), r9(k.radius)};
    }
    const Line& l = c.line();
    return {1, r9(l.normal.x()), r9(l.normal.y()), r9(l.point.dot(l.normal))};
}

// Plane {x . n = h} through three points, n unit, h >= 0.
std::pair<Eigen::Vector3d, double> plane_from_points(const Eigen::Vector3d& a,
                                                     const Eigen::Vector3d& b,
                                                     const Eigen::Vector3d& c) {
    Eigen::Vector3d n = (b - a).cross(c - a);
    const double len = n.norm();
    if (!(len > 1e-12)) throw NumericError("plane through collinear points");
    n /= len;
    double h = n.dot(a);
    if (h < 0.0) {
        n = -n;
        h = -h;
    }
    return {n, h};
}

// Image, in the boundary plane x3 = 0, of the circle cut from the unit
// sphere by the plane {x . n = h}, under the inversion centered at -e3 with
// radius sqrt(2).  The sphere itself maps onto the boundary plane, so the
// image is the trace of the plane's image (a sphere or plane) there.
CircleOrLine sphere_circle_to_boundary(const Eigen::Vector3d& n, double h, int generation) {
    if (!(h < 1.0 - 1e-12))
        throw NumericError("plane does not cut the unit sphere in a circle");
    const double delta = h + n.z(); // signed distance of the plane from -e3
    if (std::abs(delta) <= 1e-12) {
        // Plane through the inversion center: fixed as a set; its boundary
        // trace is the line n1 x1 + n2 x2 = h.
        const Eigen::Vector2d n2(n.x(), n.y());
        const double len = n2.norm();
        if (!(len > 1e-12))
            throw NumericError("plane tangent to the boundary at the inversion center");
        return make_line((h / (len * len)) * n2, n2, generation);
    }
    // Image sphere: center -e3 + n / delta, radius 1 / |delta|.
    const Eigen::Vector3d center = Eigen::Vector3d(0, 0, -1) + n / delta;
    const double rho = 1.0 / std::abs(delta);
    const double r2 = rho * rho - center.z() * center.z();
    if (!(r2 > 1e-18)) throw NumericError("image sphere misses the boundary plane");
    return make_circle({center.x(), center.y()}, std::sqrt(r2), generation);
}

} // namespace

CircleOrLine geodesic_circle(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    require_boundary_point(a);
    require_boundary_point(b);
    if ((a - b).norm() <= kUnitTol) throw InputError("geodesic_circle: points must be distinct");
    if ((a + b).norm() <= kUnitTol) {
        // Antipodal points: the geodesic is the diameter through them.
        return make_line({0.0, 0.0}, {-a.y(), a.x()});
    }
    // Orthogonality |m|^2 = r^2 + 1 reduces to m.a = m.b = 1.
    Eigen::Matrix2d A;
    A.row(0) = a.transpose();
    A.row(1) = b.transpose();
    const Eigen::Vector2d m = A.inverse() * Eigen::Vector2d(1.0, 1.0);
    const double r2 = m.squaredNorm() - 1.0;
    if (!(r2 > 1e-18)) throw NumericError("geodesic_circle: degenerate configuration");
    return make_circle(m, std::sqrt(r2));
}

std::array<CircleOrLine, 3> tangent_horocycles(const Eigen::Vector2d& a,
                                               const Eigen::Vector2d& b,
                                               const Eigen::Vector2d& c) {
    const std::array<Eigen::Vector2d, 3> p{a, b, c};
    for (const auto& q : p) require_boundary_point(q);
    for (int i = 0; i < 3; ++i)
        if ((p[i] - p[(i + 1) % 3]).norm() <= kUnitTol)
            throw InputError("tangent_horocycles: points must be pairwise distinct");

    // Unknown radii r; centers m_i = (1 - r_i) p_i.  Squared tangency
    // residuals F_ij = |m_i - m_j|^2 - (r_i + r_j)^2.
    auto residual = [&](const Eigen::Vector3d& r) {
        Eigen::Vector3d f;
        int k = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j, ++k) {
                const Eigen::Vector2d d = (1.0 - r[i]) * p[i] - (1.0 - r[j]) * p[j];
                f[k] = d.squaredNorm() - (r[i] + r[j]) * (r[i] + r[j]);
            }
        return f;
    };
    auto jacobian = [&](const Eigen::Vector3d& r) {
        Eigen::Matrix3d J = Eigen::Matrix3d::Zero();
        int k = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j, ++k) {
                const Eigen::Vector2d d = (1.0 - r[i]) * p[i] - (1.0 - r[j]) * p[j];
                J(k, i) = -2.0 * d.dot(p[i]) - 2.0 * (r[i] + r[j]);
                J(k, j) = 2.0 * d.dot(p[j]) - 2.0 * (r[i] + r[j]);
            }
        return J;
    };

    // Symmetric-configuration radius as the starting point.
    Eigen::Vector3d r = Eigen::Vector3d::Constant(2.0 * std::sqrt(3.0) - 3.0);
    Eigen::Vector3d f = residual(r);
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
        if (f.cwiseAbs().maxCoeff() <= 1e-13) {
            converged = true;
            break;
        }
        const Eigen::Vector3d step = jacobian(r).fullPivLu().solve(-f);
        double damping = 1.0;
        bool accepted = false;
        for (int half = 0; half < 40; ++half, damping *= 0.5) {
            const Eigen::Vector3d cand = r + damping * step;
            if ((cand.array() <= 1e-9).any() || (cand.array() >= 1.0 - 1e-9).any()) continue;
            const Eigen::Vector3d fc = residual(cand);
            if (fc.norm() < f.norm()) {
                r = cand;
                f = fc;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    if (!converged && f.cwiseAbs().maxCoeff() > 1e-13) {
        std::ostringstream os;
        os << "tangent_horocycles: Newton stalled with residuals " << f.transpose();
        throw NumericError(os.str());
    }
    std::array<CircleOrLine, 3> out{
        make_circle((1.0 - r[0]) * p[0], r[0]),
        make_circle((1.0 - r[1]) * p[1], r[1]),
        make_circle((1.0 - r[2]) * p[2], r[2]),
    };
    return out;
}

CircleOrLine tangency_circle(const CircleOrLine& ha, const CircleOrLine& hb,
                             const CircleOrLine& hc) {
    const Eigen::Vector2d tab = mutual_tangency(ha.circle(), hb.circle());
    const Eigen::Vector2d tac = mutual_tangency(ha.circle(), hc.circle());
    const Eigen::Vector2d tbc = mutual_tangency(hb.circle(), hc.circle());
    const Circle c = circumcircle(tab, tac, tbc);
    return make_circle(c.center, c.radius);
}

GasketScene generate_gasket(const std::vector<CircleOrLine>& seed,
                            const std::vector<CircleOrLine>& generators,
                            int max_gen, std::size_t budget) {
    if (max_gen < 0) throw InputError("generate_gasket: max_gen must be >= 0");
    if (seed.empty() || generators.empty())
        throw InputError("generate_gasket: seed and generators must be non-empty");

    GasketScene scene;
    scene.generators = generators;
    scene.seed = seed;

    std::set<std::vector<std::int64_t>> seen;
    for (const auto& c : seed) {
        CircleOrLine s = c;
        s.generation = 0;
        if (!seen.insert(scene_key(s)).second) continue;
        scene.circles.push_back(std::move(s));
    }

    std::size_t frontier_begin = 0;
    for (int gen = 1; gen <= max_gen; ++gen) {
        const std::size_t frontier_end = scene.circles.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const auto& g : generators) {
                CircleOrLine img = invert_circle(g, scene.circles[i]);
                img.generation = gen;
                if (!seen.insert(scene_key(img)).second) continue;
                if (scene.circles.size() >= budget) {
                    std::ostringstream os;
                    os << "generate_gasket: element budget of " << budget << " exceeded";
                    throw BudgetError(os.str());
                }
                scene.circles.push_back(std::move(img));
            }
        }
        if (scene.circles.size() == frontier_end) break;
        frontier_begin = frontier_end;
    }
    return scene;
}

GasketScene intrinsic_gasket(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                             const Eigen::Vector2d& c, int max_gen, std::size_t budget) {
    const auto h = tangent_horocycles(a, b, c);
    std::vector<CircleOrLine> generators{
        geodesic_circle(a, b),
        geodesic_circle(a, c),
        geodesic_circle(b, c),
        tangency_circle(h[0], h[1], h[2]),
    };
    std::vector<CircleOrLine> seed{h[0], h[1], h[2], make_circle({0.0, 0.0}, 1.0)};
    return generate_gasket(seed, generators, max_gen, budget);
}

Rank4Chart rank4_chart() {
    CoxeterDiagram d;
    d.rank = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            d.edges.push_back(DiagramEdge{i, j, kInfiniteLabel, -1.0});
    GramMatrix G = GramMatrix::from_diagram(d);
    DiagonalBasis basis = DiagonalBasis::build(G);

    std::array<Eigen::Vector3d, 4> raw;
    for (int i = 0; i < 4; ++i)
        raw[static_cast<std::size_t>(i)] = basis.normalize(Eigen::VectorXd::Unit(4, i));

    // Send the last vertex to the +e3 axis and the first one to azimuth 0.
    const Eigen::Vector3d w3 = raw[3].normalized();
    const Eigen::Vector3d w1 = (raw[0] - raw[0].dot(w3) * w3).normalized();
    const Eigen::Vector3d w2 = w3.cross(w1);
    Eigen::Matrix3d R;
    R.row(0) = w1;
    R.row(1) = w2;
    R.row(2) = w3;

    Rank4Chart chart{std::move(G), std::move(basis), R, {}};
    for (int i = 0; i < 4; ++i)
        chart.vertices[static_cast<std::size_t>(i)] = R * raw[static_cast<std::size_t>(i)];
    return chart;
}

PlanePoint rank4_boundary_point(const Rank4Chart& chart, const Eigen::VectorXd& v) {
    Eigen::Vector3d x = chart.rotation * Eigen::Vector3d(chart.basis.normalize(v));
    const double len = x.norm();
    if (!(len > 1e-12)) throw NumericError("rank4_boundary_point: direction at the origin");
    x /= len;
    Eigen::Vector3d shifted = x + Eigen::Vector3d(0, 0, 1);
    const double den = shifted.squaredNorm();
    if (den <= 1e-18) return PlanePoint{{0.0, 0.0}, true};
    const Eigen::Vector3d y = (2.0 / den) * shifted - Eigen::Vector3d(0, 0, 1);
    return PlanePoint{{y.x(), y.y()}, false};
}

GasketScene rank4_gasket(int max_gen, std::size_t budget) {
    const Rank4Chart chart = rank4_chart();
    const auto& v = chart.vertices;

    // Seed circles: the unit sphere cuts each tetrahedron face in a circle
    // through the three edge midpoints of that face.
    std::vector<CircleOrLine> seed;
    for (int opposite = 0; opposite < 4; ++opposite) {
        std::array<Eigen::Vector3d, 3> face;
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != opposite) face[static_cast<std::size_t>(k++)] = v[static_cast<std::size_t>(i)];
        const auto [n, h] = plane_from_points(face[0], face[1], face[2]);
        seed.push_back(sphere_circle_to_boundary(n, h, 0));
    }

    // Generators: boundary traces of the four reflection hyperplanes.
    std::vector<CircleOrLine> generators;
    for (int i = 0; i < 4; ++i) {
        auto [d3, d0] = chart_functional(chart.basis, chart.gram, Eigen::VectorXd::Unit(4, i));
        Eigen::Vector3d n = chart.rotation * Eigen::Vector3d(d3);
        double h = -d0;
        const double len = n.norm();
        n /= len;
        h /= len;
        if (h < 0.0) {
            n = -n;
            h = -h;
        }
        generators.push_back(sphere_circle_to_boundary(n, h, 0));
    }

    return generate_gasket(seed, generators, max_gen, budget);
}

} // namespace limitroots
