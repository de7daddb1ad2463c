#include "limitroots/classify.hpp"

#include <vector>

#include <Eigen/Eigenvalues>

namespace limitroots {

namespace {

// Connectivity of the adjacency given by nonzero off-diagonal entries.
bool connected(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    visited[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (visited[static_cast<std::size_t>(w)] || w == v) continue;
            if (m(v, w) != 0.0) {
                visited[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
                ++count;
            }
        }
    }
    return count == n;
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace

Classification classify(const GramMatrix& G, double tol) {
    if (!(tol > 0.0)) throw InputError("classify: tol must be positive");
    const int n = G.rank();

    Classification c;
    c.signature = G.signature(tol);
    c.irreducible = connected(G.matrix());

    if (c.signature.n_minus == 0 && c.signature.n_zero == 0)
        c.kind = SystemKind::Finite;
    else if (c.signature.n_minus == 0)
        c.kind = SystemKind::Affine;
    else if (c.signature.n_minus == 1 && c.signature.n_zero == 0)
        c.kind = SystemKind::WeaklyHyperbolic;
    else
        c.kind = SystemKind::OtherIndefinite;

    if (c.kind == SystemKind::WeaklyHyperbolic && n >= 2) {
        // Facewise criterion over all proper nonempty principal submatrices.
        c.hyperbolic = true;
        c.compact_hyperbolic = true;
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) idx.push_back(i);
            Eigen::MatrixXd sub(idx.size(), idx.size());
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = 0; b < idx.size(); ++b)
                    sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                        G(idx[a], idx[b]);
            const double lo = min_eigenvalue(sub);
            if (lo < -tol) c.hyperbolic = false;
            if (lo < tol) c.compact_hyperbolic = false;
            if (!c.hyperbolic) break;
        }
        c.compact_hyperbolic = c.compact_hyperbolic && c.hyperbolic;
    }
    return c;
}

bool is_irreducible(const CoxeterDiagram& d) {
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(d.rank, d.rank);
    for (const auto& e : d.edges) {
        if (e.label != kInfiniteLabel && e.label < 3) continue; // label 2 does not connect
        adj(e.i, e.j) = 1.0;
        adj(e.j, e.i) = 1.0;
    }
    return connected(adj);
}

const char* to_string(SystemKind k) {
    switch (k) {
    case SystemKind::Finite: return "Finite";
    case SystemKind::Affine: return "Affine";
    case SystemKind::WeaklyHyperbolic: return "WeaklyHyperbolic";
    case SystemKind::OtherIndefinite: return "OtherIndefinite";
    }
    return "?";
}

} // namespace limitroots
