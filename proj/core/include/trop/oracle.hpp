#pragma once

#include <optional>
#include <utility>

#include "trop/matrix.hpp"

namespace trop {

// Deliberately naive reference implementations used as ground truth by the
// property and acceptance tests.  They share nothing with the production
// algorithms beyond the scalar type and matrix accessors, and they guard
// their input sizes so a misuse fails loudly instead of hanging.

/// Exact permanent by enumerating all n! permutations; n <= 8.
std::pair<TropScalar, std::optional<Permutation>> brute_maper(const TropMatrix& a);

/// Exact maximum cycle mean by enumerating all elementary cycles; n <= 7.
TropScalar brute_cycle_mean(const TropMatrix& a);

/// Direct verification that (lambda, x) is an eigenpair of A: x is not
/// all-eps and A (x) x equals lambda (x) x exactly.
bool brute_eigen_check(const TropMatrix& a, const TropScalar& lambda, const TropMatrix& x);

} // namespace trop
