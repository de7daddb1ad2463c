#include "limitroots/projective.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace limitroots {

namespace {

constexpr double kDiagTol = 1e-9;
constexpr double kTransverseTol = 1e-12;

bool lorentzian(const GramMatrix& G) {
    const Signature s = G.signature();
    return s.n_minus == 1 && s.n_zero == 0;
}

// Time-like candidate with strictly negative slacks B(v, alpha_i), or empty.
bool transverse_time_like(const GramMatrix& G, const Eigen::VectorXd& v) {
    if (!(G.q(v) < -1e-12)) return false;
    const Eigen::VectorXd slacks = G.matrix() * v;
    return (slacks.array() < -1e-9).all();
}

} // namespace

DiagonalBasis DiagonalBasis::build(const GramMatrix& G) {
    const int n = G.rank();
    if (!lorentzian(G)) {
        const Signature s = G.signature();
        std::ostringstream os;
        os << "diagonalizing basis requires a Lorentzian form, got signature (" << s.n_plus
           << "," << s.n_minus << "," << s.n_zero << ")";
        throw InputError(os.str());
    }

    DiagonalBasis basis;

    // Time-like axis: z with B(z, alpha_i) = -1 for every simple root.
    Eigen::VectorXd z =
        G.matrix().fullPivLu().solve(Eigen::VectorXd::Constant(n, -1.0));
    if (!(G.q(z) < -1e-12)) {
        basis.used_fallback_ = true;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G.matrix());
        Eigen::VectorXd u = es.eigenvectors().col(0); // unique negative eigenvalue
        bool found = false;
        for (double sign : {1.0, -1.0}) {
            if (transverse_time_like(G, sign * u)) {
                z = sign * u;
                found = true;
                break;
            }
        }
        if (!found) {
            // Blend the slack-uniform direction with the time-like eigenvector.
            const Eigen::VectorXd z0 = z.normalized();
            for (double sign : {1.0, -1.0}) {
                for (double t = 0.1; t < 1.0 && !found; t += 0.1) {
                    Eigen::VectorXd cand = (1.0 - t) * z0 + t * sign * u;
                    if (transverse_time_like(G, cand)) {
                        z = cand;
                        found = true;
                    }
                }
                if (found) break;
            }
        }
        if (!found)
            throw NumericError(
                "no transverse time-like vector found: -G^-1*1 is not time-like and the "
                "eigenvector fallback produced no direction with all B(v, alpha_i) < 0");
    }
    const Eigen::VectorXd zhat = z / std::sqrt(-G.q(z));

    // Space-like complement: B restricted to the orthogonal of zhat is
    // positive definite, so Gram-Schmidt over the standard basis works.
    std::vector<Eigen::VectorXd> space;
    space.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n && space.size() + 1 < static_cast<std::size_t>(n); ++i) {
        Eigen::VectorXd w = Eigen::VectorXd::Unit(n, i);
        for (int pass = 0; pass < 2; ++pass) { // re-orthogonalize once
            w += G.evaluate(w, zhat) * zhat;   // q(zhat) = -1
            for (const auto& u : space) w -= G.evaluate(w, u) * u;
        }
        const double nw = G.q(w);
        if (nw > 1e-10) space.push_back(w / std::sqrt(nw));
    }
    if (space.size() + 1 != static_cast<std::size_t>(n))
        throw NumericError("failed to complete the space-like complement");

    basis.T_.resize(n, n);
    for (int i = 0; i + 1 < n; ++i) basis.T_.col(i) = space[static_cast<std::size_t>(i)];
    basis.T_.col(n - 1) = zhat;
    basis.Tinv_ = basis.T_.fullPivLu().inverse();

    Eigen::MatrixXd d = basis.T_.transpose() * G.matrix() * basis.T_;
    d(n - 1, n - 1) += 2.0; // expect -1 there, +1 elsewhere
    if ((d - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > kDiagTol)
        throw NumericError("diagonalization residual exceeds tolerance");
    return basis;
}

Eigen::VectorXd DiagonalBasis::to_diagonal(const Eigen::VectorXd& v) const {
    if (v.size() != T_.rows()) throw InputError("to_diagonal: dimension mismatch");
    return Tinv_ * v;
}

Eigen::VectorXd DiagonalBasis::from_diagonal(const Eigen::VectorXd& x) const {
    if (x.size() != T_.rows()) throw InputError("from_diagonal: dimension mismatch");
    return T_ * x;
}

Eigen::VectorXd DiagonalBasis::normalize(const Eigen::VectorXd& v) const {
    const Eigen::VectorXd x = to_diagonal(v);
    const int n = static_cast<int>(x.size());
    const double last = x[n - 1];
    if (!(last > kTransverseTol))
        throw NumericError("normalize: direction is not transverse to the chart");
    return x.head(n - 1) / last;
}

double DiagonalBasis::diagonal_q(const Eigen::VectorXd& x) {
    const int n = static_cast<int>(x.size());
    return x.head(n - 1).squaredNorm() - x[n - 1] * x[n - 1];
}

std::pair<Eigen::VectorXd, double> chart_functional(const DiagonalBasis& basis,
                                                    const GramMatrix& G,
                                                    const Eigen::VectorXd& gamma) {
    // B(gamma, T (x;1)) = (T^T G gamma) . (x;1)
    const Eigen::VectorXd row = basis.transform().transpose() * (G.matrix() * gamma);
    const int n = static_cast<int>(row.size());
    return {row.head(n - 1), row[n - 1]};
}

std::uint64_t gram_hash(const GramMatrix& G) {
    std::uint64_t h = 1469598103934665603ull;
    const auto& m = G.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::uint64_t bits = 0;
            const double v = m(i, j);
            std::memcpy(&bits, &v, sizeof bits);
            for (int b = 0; b < 8; ++b) {
                h ^= (bits >> (8 * b)) & 0xffu;
                h *= 1099511628211ull;
            }
        }
    return h;
}

PointCloud limit_root_sample(const GramMatrix& G, int depth_lo, int depth_hi,
                             std::size_t budget) {
    if (depth_lo < 0 || depth_lo > depth_hi)
        throw InputError("limit_root_sample: window must satisfy 0 <= lo <= hi");
    const DiagonalBasis basis = DiagonalBasis::build(G);
    const auto roots = generate_roots(G, depth_hi, budget);

    PointCloud cloud;
    cloud.kind = "limit_roots";
    cloud.dim = G.rank() - 1;
    cloud.window = {depth_lo, depth_hi};
    cloud.diagram_hash = gram_hash(G);

    std::set<std::vector<long long>> seen;
    for (const auto& r : roots) {
        if (r.depth < depth_lo || r.depth > depth_hi) continue;
        Eigen::VectorXd p = basis.normalize(r.vector);
        std::vector<long long> key(static_cast<std::size_t>(p.size()));
        for (Eigen::Index i = 0; i < p.size(); ++i)
            key[static_cast<std::size_t>(i)] = std::llround(p[i] * 1e9);
        if (!seen.insert(std::move(key)).second) continue;
        cloud.points.push_back(std::move(p));
    }
    return cloud;
}

Eigen::VectorXd imaginary_point(const GramMatrix& G) {
    const int n = G.rank();
    if (!lorentzian(G))
        throw InputError("imaginary_point requires a Lorentzian form");

    Eigen::VectorXd v =
        G.matrix().fullPivLu().solve(Eigen::VectorXd::Constant(n, -1.0));
    if (G.q(v) < 0.0 && ((G.matrix() * v).array() <= -1e-6).all()) return v;

    // Projected coordinate search over simplex weights, minimizing the
    // largest slack max_i B(v, alpha_i).
    Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / n);
    auto objective = [&](const Eigen::VectorXd& weights) {
        return (G.matrix() * weights).maxCoeff();
    };
    double best = objective(w);
    for (double step = 0.25; step > 1e-7;) {
        bool improved = false;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j || w[j] < step) continue;
                Eigen::VectorXd cand = w;
                cand[i] += step;
                cand[j] -= step;
                const double obj = objective(cand);
                if (obj < best - 1e-15) {
                    w = cand;
                    best = obj;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    if (!(best < 0.0))
        throw NumericError("imaginary_point: no vector with all B(v, alpha_i) < 0 found");
    v = w / (-best); // rescale so the largest slack is exactly -1
    if (!(G.q(v) < 0.0))
        throw NumericError("imaginary_point: feasible direction is not time-like");
    return v;
}

std::vector<Eigen::VectorXd> k_polytope(const GramMatrix& G) {
    const int n = G.rank();
    if (n > 4) throw InputError("k_polytope: rank must be <= 4");
    if (!lorentzian(G)) return {}; // no time-like vectors to cut out

    const DiagonalBasis basis = DiagonalBasis::build(G);
    // t_i > 0 rescales each simple root onto the chart.
    Eigen::VectorXd t(n);
    for (int i = 0; i < n; ++i) t[i] = basis.inverse()(n - 1, i);

    // Barycentric weights w over the rescaled simple roots; constraints are
    // w_i >= 0 (simplex facets) and (M w)_j <= 0 with M = G diag(1/t).
    const Eigen::MatrixXd M = G.matrix() * t.cwiseInverse().asDiagonal();

    std::vector<Eigen::VectorXd> vertices;
    std::set<std::vector<long long>> seen;
    const int total = 2 * n;
    for (unsigned mask = 0; mask < (1u << total); ++mask) {
        if (__builtin_popcount(mask) != n - 1) continue;
        Eigen::MatrixXd A(n, n);
        int row = 0;
        for (int c = 0; c < total; ++c) {
            if (!(mask & (1u << c))) continue;
            if (c < n)
                A.row(row) = Eigen::RowVectorXd::Unit(n, c);
            else
                A.row(row) = M.row(c - n);
            ++row;
        }
        A.row(n - 1) = Eigen::RowVectorXd::Ones(n);
        Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
        b[n - 1] = 1.0;
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        lu.setThreshold(1e-10);
        if (!lu.isInvertible()) continue;
        const Eigen::VectorXd w = lu.solve(b);
        if ((w.array() < -1e-9).any()) continue;
        if (((M * w).array() > 1e-9).any()) continue;

        const Eigen::VectorXd v = w.cwiseQuotient(t); // chart point in simple-root coords
        std::vector<long long> key(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) key[static_cast<std::size_t>(i)] = std::llround(v[i] * 1e9);
        if (!seen.insert(std::move(key)).second) continue;
        vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end(),
              [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
                  for (Eigen::Index i = 0; i < a.size(); ++i) {
                      if (std::abs(a[i] - b[i]) > 1e-12) return a[i] < b[i];
                  }
                  return false;
              });
    return vertices;
}

} // namespace limitroots
