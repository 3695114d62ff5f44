#pragma once

#include <optional>

#include "trop/matrix.hpp"

namespace trop {

/// Eigenpair of a square max-plus matrix.  The eigenvector is a non-trivial
/// column (never all-eps) satisfying A (x) x = lambda (x) x exactly;
/// finite_eigenvector is true iff every component is finite.
struct EigenResult {
    TropScalar lambda = TropScalar::eps();
    TropMatrix eigenvector;
    bool finite_eigenvector = false;
};

/// Maximum cycle mean: max over cycles of (cycle weight) / (cycle length),
/// eps when the digraph of finite entries is acyclic.  Computed with Karp's
/// dynamic program on a super-source extension, exact on rational entries.
TropScalar max_cycle_mean(const TropMatrix& a);

/// Kleene star I (+) A (+) A^2 (+) ... (+) A^(n-1); nullopt (divergent) when
/// the maximum cycle mean is positive.
std::optional<TropMatrix> kleene_star(const TropMatrix& a);

/// Eigenpair for any square top-free A: lambda = max_cycle_mean(A) and an
/// eigenvector from a critical column of the Kleene star of (-lambda) (x) A.
/// When lambda is eps (acyclic digraph), the eigenvector is the unit-like
/// indicator of an all-eps column, which always exists in that case.
EigenResult eigenpair(const TropMatrix& a);

/// True iff the digraph with an arc (i, j) whenever a_ij != eps is strongly
/// connected; 1 x 1 matrices count as irreducible.
bool is_irreducible(const TropMatrix& a);

} // namespace trop
