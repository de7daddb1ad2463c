#pragma once

#include "limitroots/form.hpp"

namespace limitroots {

enum class SystemKind { Finite, Affine, WeaklyHyperbolic, OtherIndefinite };

struct Classification {
    SystemKind kind = SystemKind::Finite;
    // Meaningful when kind == WeaklyHyperbolic:
    bool hyperbolic = false;         // every proper principal submatrix PSD
    bool compact_hyperbolic = false; // every proper principal submatrix PD
    bool irreducible = false;
    Signature signature;
};

/// Kind from the signature: (n,0,0) finite, positive semidefinite with
/// kernel affine, (n-1,1,0) weakly hyperbolic, anything else indefinite.
/// The hyperbolic flags test all proper nonempty principal submatrices.
Classification classify(const GramMatrix& G, double tol = 1e-9);

/// Connectivity of the Coxeter graph (edges with label >= 3 or infinite).
bool is_irreducible(const CoxeterDiagram& d);

const char* to_string(SystemKind k);

} // namespace limitroots
