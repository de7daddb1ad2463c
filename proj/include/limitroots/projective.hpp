#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "limitroots/coxeter.hpp"
#include "limitroots/form.hpp"

namespace limitroots {

/// Change of basis bringing a Lorentzian form to q = x_1^2 + ... + x_{n-1}^2
/// - x_n^2, with the extra property that the last basis vector z satisfies
/// B(z, alpha_i) < 0 for every simple root.  The affine chart x_n = 1 is then
/// transverse to all positive root directions.
class DiagonalBasis {
  public:
    /// Builds the basis.  The time-like axis is z = -G^{-1} 1, which has
    /// B(z, alpha_i) = -1 for all i; the space-like complement comes from
    /// B-orthonormalizing the standard basis against it.  Falls back to an
    /// eigenvector search when q(z) >= 0.
    static DiagonalBasis build(const GramMatrix& G);

    int rank() const { return static_cast<int>(T_.rows()); }

    /// Columns are the basis vectors in simple-root coordinates.
    const Eigen::MatrixXd& transform() const { return T_; }
    const Eigen::MatrixXd& inverse() const { return Tinv_; }

    Eigen::VectorXd to_diagonal(const Eigen::VectorXd& v) const;
    Eigen::VectorXd from_diagonal(const Eigen::VectorXd& x) const;

    /// Chart coordinates of the direction of v: the first n-1 diagonal
    /// coordinates after rescaling the last one to 1.  Throws NumericError
    /// when the last coordinate is not positive (non-transverse direction).
    Eigen::VectorXd normalize(const Eigen::VectorXd& v) const;

    bool used_fallback() const { return used_fallback_; }

    /// q of diagonal coordinates: sum of squares minus the last square.
    static double diagonal_q(const Eigen::VectorXd& x);

  private:
    Eigen::MatrixXd T_;
    Eigen::MatrixXd Tinv_;
    bool used_fallback_ = false;
};

/// The affine functional x -> B(gamma, lift(x)) on chart coordinates, where
/// lift(x) is the chart point with coordinates x.  Returns (d, d0) with the
/// functional equal to d . x + d0.
std::pair<Eigen::VectorXd, double> chart_functional(const DiagonalBasis& basis,
                                                    const GramMatrix& G,
                                                    const Eigen::VectorXd& gamma);

/// A finite sample of chart points with generation metadata.
struct PointCloud {
    std::string kind; // "limit_roots" | "limit_set"
    int dim = 0;
    std::array<int, 2> window{0, 0};
    std::uint64_t diagram_hash = 0;
    std::vector<Eigen::VectorXd> points;
};

std::uint64_t gram_hash(const GramMatrix& G);

/// Normalizes every positive root with depth in [depth_lo, depth_hi].
PointCloud limit_root_sample(const GramMatrix& G, int depth_lo, int depth_hi,
                             std::size_t budget = kDefaultBudget);

/// A time-like vector v with B(v, alpha_i) <= -1e-6 for all i.  Primary
/// construction is -G^{-1} 1; a projected coordinate search over the simplex
/// is the fallback.
Eigen::VectorXd imaginary_point(const GramMatrix& G);

/// Vertices of {v in conv of normalized simple roots : B(v, alpha_i) <= 0},
/// each rescaled to the chart.  Empty when the form is not Lorentzian (no
/// time-like vectors to cut out).  Rank <= 4 only.
std::vector<Eigen::VectorXd> k_polytope(const GramMatrix& G);

} // namespace limitroots
