#include "limitroots/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

namespace limitroots {

namespace {

constexpr double kWorld = 1.2; // world window is [-kWorld, kWorld]^2

std::string fmt(double v) {
    if (v == 0.0) v = 0.0; // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void require_finite(double v) {
    if (!std::isfinite(v)) throw NumericError("render: non-finite coordinate");
}

// Intersection of an infinite line with the world square, as a segment.
std::optional<std::array<Eigen::Vector2d, 2>> clip_line(const Line& l) {
    const Eigen::Vector2d dir(-l.normal.y(), l.normal.x());
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    for (int axis = 0; axis < 2; ++axis) {
        const double p = l.point[axis];
        const double d = dir[axis];
        if (std::abs(d) < 1e-15) {
            if (p < -kWorld || p > kWorld) return std::nullopt;
            continue;
        }
        double ta = (-kWorld - p) / d;
        double tb = (kWorld - p) / d;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    if (!(t0 < t1)) return std::nullopt;
    return std::array<Eigen::Vector2d, 2>{l.point + t0 * dir, l.point + t1 * dir};
}

// Barycentric coordinates of x in the triangle (a, b, c).
Eigen::Vector3d barycentric(const Eigen::Vector2d& x, const Eigen::Vector2d& a,
                            const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
    Eigen::Matrix2d m;
    m.col(0) = a - c;
    m.col(1) = b - c;
    const Eigen::Vector2d uv = m.inverse() * (x - c);
    return {uv[0], uv[1], 1.0 - uv[0] - uv[1]};
}

} // namespace

std::string render_svg(const Scene2D& scene, int size_px) {
    if (size_px < 64) throw InputError("render_svg: size must be >= 64");
    const double size = size_px;
    auto px = [&](double world) { return (world + kWorld) / (2.0 * kWorld) * size; };
    auto pr = [&](double world) { return world / (2.0 * kWorld) * size; };
    const double marker = size * 0.004;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size_px) +
           "\" height=\"" + std::to_string(size_px) + "\" viewBox=\"0 0 " +
           std::to_string(size_px) + " " + std::to_string(size_px) + "\">\n";
    out += "<style>\n"
           ".qcircle{fill:none;stroke:#c0392b;stroke-width:1.5}\n"
           ".simplex{fill:none;stroke:#27ae60;stroke-width:1}\n"
           ".roots{fill:#2c3e80;stroke:none}\n"
           ".kregion{fill:#f5d76e;fill-opacity:0.55;stroke:#b8860b;stroke-width:1}\n"
           ".hyperplane{fill:none;stroke:#888888;stroke-width:0.8}\n"
           ".gasket{fill:none;stroke:#111111;stroke-width:1}\n"
           "</style>\n";

    for (const auto& layer : scene.layers) {
        const std::string& cls = layer.css_class;
        if (const auto* pts = std::get_if<Scene2D::PointsLayer>(&layer.shape)) {
            for (const auto& p : pts->points) {
                require_finite(p.x());
                require_finite(p.y());
                out += "<circle class=\"" + cls + "\" cx=\"" + fmt(px(p.x())) + "\" cy=\"" +
                       fmt(px(p.y())) + "\" r=\"" + fmt(marker) + "\"/>\n";
            }
        } else if (const auto* cir = std::get_if<Scene2D::CirclesLayer>(&layer.shape)) {
            for (const auto& c : cir->circles) {
                require_finite(c.center.x());
                require_finite(c.center.y());
                require_finite(c.radius);
                out += "<circle class=\"" + cls + "\" cx=\"" + fmt(px(c.center.x())) +
                       "\" cy=\"" + fmt(px(c.center.y())) + "\" r=\"" + fmt(pr(c.radius)) +
                       "\"/>\n";
            }
        } else if (const auto* seg = std::get_if<Scene2D::SegmentsLayer>(&layer.shape)) {
            for (const auto& s : seg->segments) {
                for (const auto& e : s) {
                    require_finite(e.x());
                    require_finite(e.y());
                }
                out += "<line class=\"" + cls + "\" x1=\"" + fmt(px(s[0].x())) + "\" y1=\"" +
                       fmt(px(s[0].y())) + "\" x2=\"" + fmt(px(s[1].x())) + "\" y2=\"" +
                       fmt(px(s[1].y())) + "\"/>\n";
            }
        } else if (const auto* poly = std::get_if<Scene2D::PolygonLayer>(&layer.shape)) {
            if (poly->vertices.empty()) continue;
            out += "<polygon class=\"" + cls + "\" points=\"";
            bool first = true;
            for (const auto& p : poly->vertices) {
                require_finite(p.x());
                require_finite(p.y());
                if (!first) out += " ";
                first = false;
                out += fmt(px(p.x())) + "," + fmt(px(p.y()));
            }
            out += "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

Scene2D scene_from_system(const GramMatrix& G, int depth_lo, int depth_hi,
                          const SceneOptions& options) {
    const int n = G.rank();
    if (n < 2 || n > 4) throw InputError("scene_from_system: rank must be 2, 3 or 4");

    const DiagonalBasis basis = DiagonalBasis::build(G);
    const PointCloud cloud = limit_root_sample(G, depth_lo, depth_hi, options.budget);

    // Chart points of the scene; rank-2 charts embed on the x-axis and
    // rank-4 charts project orthographically to the first two coordinates.
    auto to_plane = [&](const Eigen::VectorXd& chart) {
        Eigen::Vector2d p(chart[0], 0.0);
        if (chart.size() >= 2) p.y() = chart[1];
        return p;
    };

    std::vector<Eigen::Vector2d> simplex;
    for (int i = 0; i < n; ++i)
        simplex.push_back(to_plane(basis.normalize(Eigen::VectorXd::Unit(n, i))));

    Scene2D scene;

    if (n == 2) {
        // Degenerate chart: a segment with the isotropic pair at +-1.
        scene.layers.push_back(
            {"qcircle", Scene2D::PointsLayer{{{-1.0, 0.0}, {1.0, 0.0}}}});
        scene.layers.push_back(
            {"simplex", Scene2D::SegmentsLayer{{{simplex[0], simplex[1]}}}});
    } else {
        scene.layers.push_back({"qcircle", Scene2D::CirclesLayer{{Circle{{0.0, 0.0}, 1.0}}}});
        Scene2D::SegmentsLayer edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.segments.push_back({simplex[static_cast<std::size_t>(i)],
                                          simplex[static_cast<std::size_t>(j)]});
        scene.layers.push_back({"simplex", std::move(edges)});
    }

    if (options.k_region && n == 3) {
        auto vertices = k_polytope(G);
        Scene2D::PolygonLayer poly;
        for (const auto& v : vertices) poly.vertices.push_back(to_plane(basis.normalize(v)));
        if (poly.vertices.size() >= 3) {
            // Cyclic order around the centroid.
            Eigen::Vector2d centroid(0, 0);
            for (const auto& p : poly.vertices) centroid += p;
            centroid /= static_cast<double>(poly.vertices.size());
            std::sort(poly.vertices.begin(), poly.vertices.end(),
                      [&](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
                          return std::atan2(a.y() - centroid.y(), a.x() - centroid.x()) <
                                 std::atan2(b.y() - centroid.y(), b.x() - centroid.x());
                      });
            scene.layers.push_back({"kregion", std::move(poly)});
        }
    }

    if (options.hyperplanes && n == 3) {
        Scene2D::SegmentsLayer chords;
        for (const auto& root : generate_roots(G, options.hyperplane_depth, options.budget)) {
            auto [d, d0] = chart_functional(basis, G, root.vector);
            const double len = d.norm();
            if (!(len > 1e-12)) continue;
            const double dist = -d0 / len; // chord line: d . x = -d0
            if (std::abs(dist) >= 1.0) continue;
            const Eigen::Vector2d nrm(d[0] / len, d[1] / len);
            const Eigen::Vector2d mid = dist * nrm;
            const Eigen::Vector2d dir(-nrm.y(), nrm.x());
            const double half = std::sqrt(1.0 - dist * dist);
            chords.segments.push_back({mid - half * dir, mid + half * dir});
        }
        scene.layers.push_back({"hyperplane", std::move(chords)});
    }

    Scene2D::PointsLayer roots;
    for (const auto& p : cloud.points) roots.points.push_back(to_plane(p));
    scene.layers.push_back({"roots", std::move(roots)});

    // Containment sanity check for the rank-3 chart: normalized roots stay
    // inside the simplex.
    if (n == 3) {
        const auto* layer = std::get_if<Scene2D::PointsLayer>(&scene.layers.back().shape);
        for (const auto& p : layer->points) {
            const Eigen::Vector3d bc = barycentric(p, simplex[0], simplex[1], simplex[2]);
            if (bc.minCoeff() < -1e-9)
                throw NumericError("scene_from_system: root outside the simplex");
        }
    }
    return scene;
}

Scene2D scene_from_gasket(const GasketScene& gasket) {
    // Scale the picture into the world window; line traces are clipped after
    // scaling.  The JSON export keeps the unscaled geometry.
    double extent = 1.0;
    for (const auto& c : gasket.circles) {
        if (!c.is_circle()) continue;
        extent = std::max(extent, c.circle().center.cwiseAbs().maxCoeff() + c.circle().radius);
    }
    const double scale = 1.1 / extent;

    Scene2D scene;
    Scene2D::CirclesLayer gen_circles;
    Scene2D::SegmentsLayer gen_lines;
    for (const auto& g : gasket.generators) {
        if (g.is_circle())
            gen_circles.circles.push_back(
                Circle{scale * g.circle().center, scale * g.circle().radius});
        else if (auto seg = clip_line(Line{scale * g.line().point, g.line().normal}))
            gen_lines.segments.push_back(*seg);
    }
    scene.layers.push_back({"hyperplane", std::move(gen_circles)});
    if (!gen_lines.segments.empty()) scene.layers.push_back({"hyperplane", std::move(gen_lines)});

    Scene2D::CirclesLayer circles;
    Scene2D::SegmentsLayer lines;
    for (const auto& c : gasket.circles) {
        if (c.is_circle())
            circles.circles.push_back(
                Circle{scale * c.circle().center, scale * c.circle().radius});
        else if (auto seg = clip_line(Line{scale * c.line().point, c.line().normal}))
            lines.segments.push_back(*seg);
    }
    scene.layers.push_back({"gasket", std::move(circles)});
    if (!lines.segments.empty()) scene.layers.push_back({"gasket", std::move(lines)});
    return scene;
}

} // namespace limitroots
