#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trop/matrix.hpp"

namespace trop {

/// Result of the tropical permanent / assignment problem on a square A.
///
/// When the value is finite, `perm` attains it and the duals certify
/// optimality:  row_duals[i] + a_ij + col_duals[j] <= 0 for all (i, j), with
/// equality at every matched cell (i, perm(i)), and
/// value == -(sum of row_duals + sum of col_duals).
/// When no permutation has finite weight, value is eps and perm/duals are
/// absent (empty).
struct AssignmentResult {
    TropScalar value = TropScalar::eps();
    std::optional<Permutation> perm;
    std::vector<TropScalar> row_duals;
    std::vector<TropScalar> col_duals;
};

/// maper(A) = max over permutations pi of sum_i a_{i,pi(i)}, solved by the
/// Hungarian method (shortest augmenting paths with potentials) in O(n^3).
/// eps entries are forbidden cells, not large negative surrogates.
AssignmentResult maper(const TropMatrix& a);

/// Diagonal matrices (C, D) with finite diagonals such that
/// C (x) A (x) D <= 0 entrywise and maper(C (x) A (x) D) = 0; they are read
/// off the Hungarian potentials.  Throws DomainError when maper(A) is eps.
std::pair<TropMatrix, TropMatrix> hungarian_scaling(const TropMatrix& a);

/// Both candidate closed forms for the permanent of a tensor product of an
/// n x n matrix A with an m x m matrix B, next to the directly computed
/// value.  `rhs_own_exponents` raises each permanent to its own order
/// (n * maper(A) + m * maper(B)); `rhs_swapped_exponents` to the other's
/// (m * maper(A) + n * maper(B)).  The tensor_permanent tests settle which
/// one is the identity.
struct TensorPermanentCheck {
    TropScalar lhs;
    TropScalar rhs_own_exponents;
    TropScalar rhs_swapped_exponents;
};

TensorPermanentCheck maper_tensor_exponent_check(const TropMatrix& a, const TropMatrix& b);

} // namespace trop
