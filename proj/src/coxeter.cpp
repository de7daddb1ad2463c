#include "limitroots/coxeter.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace limitroots {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kPositivityTol = 1e-9;
constexpr double kDedupScale = 1e9; // 9 decimal digits

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const {
        std::uint64_t h = 1469598103934665603ull; // FNV-1a
        for (std::int64_t v : key) {
            auto u = static_cast<std::uint64_t>(v);
            for (int b = 0; b < 8; ++b) {
                h ^= (u >> (8 * b)) & 0xffu;
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

std::vector<std::int64_t> dedup_key(const Eigen::VectorXd& v) {
    std::vector<std::int64_t> key(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double scaled = v[i] * kDedupScale;
        if (!(std::abs(scaled) < 9.0e18))
            throw NumericError("coordinate too large for 1e-9 deduplication");
        auto r = std::llround(scaled);
        if (r == 0) r = 0; // collapse -0
        key[static_cast<std::size_t>(i)] = r;
    }
    return key;
}

[[noreturn]] void budget_fail(const char* what, std::size_t budget) {
    std::ostringstream os;
    os << what << ": element budget of " << budget << " exceeded";
    throw BudgetError(os.str());
}

} // namespace

Eigen::VectorXd reflect(const GramMatrix& G, const Eigen::VectorXd& alpha,
                        const Eigen::VectorXd& v) {
    if (alpha.size() != G.rank() || v.size() != G.rank())
        throw InputError("reflect: dimension mismatch");
    if (std::abs(G.q(alpha) - 1.0) > kUnitTol)
        throw InputError("reflect: mirror vector must satisfy q = 1 (normalize first)");
    return v - 2.0 * G.evaluate(alpha, v) * alpha;
}

std::vector<Root> generate_roots(const GramMatrix& G, int max_depth, std::size_t budget) {
    if (max_depth < 0) throw InputError("generate_roots: max_depth must be >= 0");
    const int n = G.rank();

    std::vector<Root> roots;
    std::unordered_map<std::vector<std::int64_t>, std::size_t, KeyHash> seen;
    for (int i = 0; i < n; ++i) {
        Root r{Eigen::VectorXd::Unit(n, i), 0, true};
        seen.emplace(dedup_key(r.vector), roots.size());
        roots.push_back(std::move(r));
    }

    std::size_t frontier_begin = 0;
    for (int depth = 1; depth <= max_depth; ++depth) {
        const std::size_t frontier_end = roots.size();
        for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
            const Eigen::VectorXd gv = G.matrix() * roots[p].vector;
            for (int j = 0; j < n; ++j) {
                Eigen::VectorXd w = roots[p].vector;
                w[j] -= 2.0 * gv[j];
                // Negative roots never re-enter the positive closure.
                if ((w.array() < -kPositivityTol).any()) continue;
                auto key = dedup_key(w);
                if (seen.find(key) != seen.end()) continue;
                if (roots.size() >= budget) budget_fail("generate_roots", budget);
                seen.emplace(std::move(key), roots.size());
                roots.push_back(Root{std::move(w), depth, true});
            }
        }
        if (roots.size() == frontier_end) break; // closure stabilized
        frontier_begin = frontier_end;
    }
    return roots;
}

std::vector<OrbitPoint> orbit_points(const GramMatrix& G, const Eigen::VectorXd& start,
                                     int max_length, std::size_t budget) {
    if (max_length < 0) throw InputError("orbit_points: max_length must be >= 0");
    if (start.size() != G.rank()) throw InputError("orbit_points: dimension mismatch");
    const int n = G.rank();

    std::vector<OrbitPoint> orbit;
    std::unordered_map<std::vector<std::int64_t>, std::size_t, KeyHash> seen;
    seen.emplace(dedup_key(start), 0);
    orbit.push_back(OrbitPoint{start, 0});

    std::size_t frontier_begin = 0;
    for (int length = 1; length <= max_length; ++length) {
        const std::size_t frontier_end = orbit.size();
        for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
            const Eigen::VectorXd gv = G.matrix() * orbit[p].vector;
            for (int j = 0; j < n; ++j) {
                Eigen::VectorXd w = orbit[p].vector;
                w[j] -= 2.0 * gv[j];
                auto key = dedup_key(w);
                if (seen.find(key) != seen.end()) continue;
                if (orbit.size() >= budget) budget_fail("orbit_points", budget);
                seen.emplace(std::move(key), orbit.size());
                orbit.push_back(OrbitPoint{std::move(w), length});
            }
        }
        if (orbit.size() == frontier_end) break;
        frontier_begin = frontier_end;
    }
    return orbit;
}

} // namespace limitroots
