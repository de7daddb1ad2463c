#include "limitroots/json_io.hpp"

namespace limitroots {

namespace {

ordered_json vec_json(const Eigen::VectorXd& v) {
    auto a = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

ordered_json vec2_json(const Eigen::Vector2d& v) {
    return ordered_json::array({v.x(), v.y()});
}

} // namespace

ordered_json point_cloud_json(const PointCloud& cloud) {
    ordered_json j;
    j["kind"] = cloud.kind;
    j["dim"] = cloud.dim;
    j["window"] = ordered_json::array({cloud.window[0], cloud.window[1]});
    auto pts = ordered_json::array();
    for (const auto& p : cloud.points) pts.push_back(vec_json(p));
    j["points"] = std::move(pts);
    return j;
}

ordered_json classification_json(const Classification& c) {
    ordered_json j;
    j["kind"] = to_string(c.kind);
    j["signature"] = ordered_json::array(
        {c.signature.n_plus, c.signature.n_minus, c.signature.n_zero});
    j["irreducible"] = c.irreducible;
    if (c.kind == SystemKind::WeaklyHyperbolic) {
        j["hyperbolic"] = c.hyperbolic;
        j["compact_hyperbolic"] = c.compact_hyperbolic;
    }
    return j;
}

ordered_json comparison_report_json(const ComparisonReport& r) {
    ordered_json j;
    auto levels = ordered_json::array();
    for (const auto& lv : r.levels) {
        ordered_json l;
        l["root_window"] = ordered_json::array({lv.root_window[0], lv.root_window[1]});
        l["orbit_window"] = ordered_json::array({lv.orbit_window[0], lv.orbit_window[1]});
        l["hausdorff"] = lv.hausdorff;
        l["root_residual"] = lv.root_residual;
        l["orbit_residual"] = lv.orbit_residual;
        levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    j["verdict"] = r.verdict;
    return j;
}

ordered_json circle_json(const CircleOrLine& c) {
    ordered_json j;
    if (c.is_circle()) {
        j["center"] = vec2_json(c.circle().center);
        j["r"] = c.circle().radius;
    } else {
        ordered_json l;
        l["point"] = vec2_json(c.line().point);
        l["normal"] = vec2_json(c.line().normal);
        j["line"] = std::move(l);
    }
    j["gen"] = c.generation;
    return j;
}

ordered_json gasket_scene_json(const GasketScene& scene) {
    ordered_json j;
    auto circles = ordered_json::array();
    for (const auto& c : scene.circles) circles.push_back(circle_json(c));
    j["circles"] = std::move(circles);
    auto gens = ordered_json::array();
    for (const auto& g : scene.generators) gens.push_back(circle_json(g));
    j["generators"] = std::move(gens);
    return j;
}

ordered_json roots_json(const GramMatrix& G, int max_depth, const std::vector<Root>& roots) {
    ordered_json j;
    j["rank"] = G.rank();
    j["max_depth"] = max_depth;
    j["count"] = roots.size();
    auto arr = ordered_json::array();
    for (const auto& r : roots) {
        ordered_json e;
        e["depth"] = r.depth;
        e["coords"] = vec_json(r.vector);
        arr.push_back(std::move(e));
    }
    j["roots"] = std::move(arr);
    return j;
}

} // namespace limitroots
