#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "limitroots/errors.hpp"

namespace limitroots {

// Sentinel edge label for an infinite-order pair.
inline constexpr int kInfiniteLabel = 0;

struct DiagramEdge {
    int i = 0; // 0-based, i < j
    int j = 0;
    int label = kInfiniteLabel; // finite order m >= 2, or kInfiniteLabel
    double weight = -1.0;       // bilinear value for infinite edges, <= -1
};

/// A Coxeter diagram: rank plus labelled edges.  Absent pairs carry the
/// implicit label 2 (commuting generators).
struct CoxeterDiagram {
    int rank = 0;
    std::vector<DiagramEdge> edges;
};

// Text format, one directive per line, '#' starts a comment:
//   rank <n>
//   edge <i> <j> <m>          finite label m >= 2, 1-based indices
//   edge <i> <j> inf [<c>]    infinite label, optional weight c <= -1 (default -1)
CoxeterDiagram parse_diagram(std::istream& in);
CoxeterDiagram parse_diagram_text(const std::string& text);
CoxeterDiagram parse_diagram_file(const std::string& path);

struct Signature {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    bool operator==(const Signature&) const = default;
};

enum class VectorKind { SpaceLike, TimeLike, LightLike };

/// The symmetric bilinear form in the simple-root basis.  Diagonal entries
/// are exactly 1; off-diagonal entries lie in (-inf,-1] or equal -cos(pi/k)
/// for an integer k >= 2.
class GramMatrix {
  public:
    explicit GramMatrix(Eigen::MatrixXd entries);

    static GramMatrix from_diagram(const CoxeterDiagram& d);

    int rank() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }

    /// B(u, v) = u^T G v.
    double evaluate(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

    /// q(v) = B(v, v).
    double q(const Eigen::VectorXd& v) const { return evaluate(v, v); }

    /// Eigenvalue counts of the form, split at +/- tol.
    Signature signature(double tol = 1e-9) const;

    VectorKind vector_kind(const Eigen::VectorXd& v, double tol = 1e-9) const;

  private:
    Eigen::MatrixXd m_;
};

const char* to_string(VectorKind k);

} // namespace limitroots
