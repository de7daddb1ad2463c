#include "limitroots/limits.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>

namespace limitroots {

PointCloud limit_set_sample(const GramMatrix& G, int length_lo, int length_hi,
                            std::size_t budget) {
    if (length_lo < 0 || length_lo > length_hi)
        throw InputError("limit_set_sample: window must satisfy 0 <= lo <= hi");
    const Eigen::VectorXd start = imaginary_point(G); // checks the Lorentzian precondition
    const DiagonalBasis basis = DiagonalBasis::build(G);
    const auto orbit = orbit_points(G, start, length_hi, budget);

    PointCloud cloud;
    cloud.kind = "limit_set";
    cloud.dim = G.rank() - 1;
    cloud.window = {length_lo, length_hi};
    cloud.diagram_hash = gram_hash(G);

    std::set<std::vector<long long>> seen;
    for (const auto& p : orbit) {
        if (p.length < length_lo || p.length > length_hi) continue;
        Eigen::VectorXd x = basis.normalize(p.vector);
        std::vector<long long> key(static_cast<std::size_t>(x.size()));
        for (Eigen::Index i = 0; i < x.size(); ++i)
            key[static_cast<std::size_t>(i)] = std::llround(x[i] * 1e9);
        if (!seen.insert(std::move(key)).second) continue;
        cloud.points.push_back(std::move(x));
    }
    return cloud;
}

namespace {

// Largest over a-range of the squared distance to the nearest point of b.
double directed_sq(const std::vector<Eigen::VectorXd>& a,
                   const std::vector<Eigen::VectorXd>& b, std::size_t begin,
                   std::size_t end) {
    double worst = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : b) {
            const double d = (a[i] - q).squaredNorm();
            if (d < best) best = d;
        }
        if (best > worst) worst = best;
    }
    return worst;
}

double directed_sq_threaded(const std::vector<Eigen::VectorXd>& a,
                            const std::vector<Eigen::VectorXd>& b, int threads) {
    if (threads <= 1 || a.size() < 256) return directed_sq(a, b, 0, a.size());
    const std::size_t chunks = static_cast<std::size_t>(threads);
    const std::size_t step = (a.size() + chunks - 1) / chunks;
    std::vector<std::future<double>> parts;
    for (std::size_t begin = 0; begin < a.size(); begin += step) {
        const std::size_t end = std::min(a.size(), begin + step);
        parts.push_back(std::async(std::launch::async, directed_sq, std::cref(a),
                                   std::cref(b), begin, end));
    }
    double worst = 0.0;
    for (auto& f : parts) worst = std::max(worst, f.get()); // max-merge keeps determinism
    return worst;
}

} // namespace

double hausdorff_distance(const PointCloud& a, const PointCloud& b, int threads) {
    if (a.dim != b.dim) throw InputError("hausdorff: dimension mismatch");
    if (a.points.empty() || b.points.empty())
        throw InputError("hausdorff: clouds must be non-empty");
    const double ab = directed_sq_threaded(a.points, b.points, threads);
    const double ba = directed_sq_threaded(b.points, a.points, threads);
    return std::sqrt(std::max(ab, ba));
}

double max_isotropy_residual(const PointCloud& cloud) {
    double worst = 0.0;
    for (const auto& p : cloud.points)
        worst = std::max(worst, std::abs(p.norm() - 1.0));
    return worst;
}

ComparisonReport verify_limit_equality(const GramMatrix& G,
                                       const std::vector<LevelWindows>& levels,
                                       double eps, std::size_t budget, int threads) {
    if (levels.empty()) throw InputError("verify_limit_equality: no levels given");
    ComparisonReport report;
    for (const auto& lv : levels) {
        const PointCloud roots = limit_root_sample(G, lv.roots[0], lv.roots[1], budget);
        const PointCloud orbit = limit_set_sample(G, lv.orbit[0], lv.orbit[1], budget);
        ComparisonLevel level;
        level.root_window = lv.roots;
        level.orbit_window = lv.orbit;
        level.root_count = roots.points.size();
        level.orbit_count = orbit.points.size();
        level.hausdorff = hausdorff_distance(roots, orbit, threads);
        level.root_residual = max_isotropy_residual(roots);
        level.orbit_residual = max_isotropy_residual(orbit);
        report.levels.push_back(level);
    }
    bool monotone = true;
    for (std::size_t i = 1; i < report.levels.size(); ++i)
        monotone = monotone &&
                   report.levels[i].hausdorff <= 1.1 * report.levels[i - 1].hausdorff;
    report.verdict = monotone && report.levels.back().hausdorff <= eps;
    return report;
}

double boundary_coverage(const PointCloud& cloud) {
    if (cloud.dim != 2) throw InputError("boundary_coverage: chart dimension must be 2");
    if (cloud.points.empty()) throw InputError("boundary_coverage: empty cloud");
    if (cloud.points.size() == 1) return 2.0 * M_PI;
    std::vector<double> angles;
    angles.reserve(cloud.points.size());
    for (const auto& p : cloud.points) angles.push_back(std::atan2(p[1], p[0]));
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + 2.0 * M_PI - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i)
        gap = std::max(gap, angles[i] - angles[i - 1]);
    return gap;
}

} // namespace limitroots
