#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trop/matrix.hpp"

namespace trop {

/// The tropical matrix equation  (+)_i  A_i (x) X (x) B_i  =  C  with a
/// non-empty list of term pairs.  All A_i share a p x q shape, all B_i a
/// u x v shape, and C is p x v; the unknown X is q x u.
class MatrixEquation {
public:
    MatrixEquation(std::vector<std::pair<TropMatrix, TropMatrix>> terms, TropMatrix rhs);

    const std::vector<std::pair<TropMatrix, TropMatrix>>& terms() const { return terms_; }
    const TropMatrix& rhs() const { return rhs_; }

    int x_rows() const { return terms_.front().first.cols(); }
    int x_cols() const { return terms_.front().second.rows(); }

private:
    std::vector<std::pair<TropMatrix, TropMatrix>> terms_;
    TropMatrix rhs_;
};

/// Outcome of solve_matrix_equation.  `op` is the assembled vectorization
/// operator D, `principal` the candidate D# (x)' vec(C).  solvable holds iff
/// residual_rows is empty, i.e. D (x) principal reproduces vec(C) row by row;
/// residual_rows lists the 1-based rows where it does not.  When solvable,
/// `solution` is unvec of the principal candidate (the greatest solution) and
/// substituting it into the equation reproduces C exactly.
struct EquationReport {
    TropMatrix op;
    TropMatrix principal;
    bool solvable = false;
    std::optional<TropMatrix> solution;
    std::vector<int> residual_rows;
};

/// Greatest x with A (x) x <= b:  x = A# (x)' b, componentwise
/// x_j = min_i (b_i - a_ij), where eps entries of A impose no constraint
/// (their conjugates are top).  Components may be top when a column of A is
/// all eps.
TropMatrix principal_solution(const TropMatrix& a, const TropMatrix& b);

/// A (x) x = b has a solution iff the principal solution attains b.
bool is_solvable(const TropMatrix& a, const TropMatrix& b);

/// The vectorization operator D = (+)_i  A_i (#) B_i^T  of shape
/// (p*v) x (q*u); applying it to vec(X) evaluates the equation's left side.
TropMatrix assemble_operator(const MatrixEquation& eq);

/// Residuation solve of the full matrix equation via D and vec.
EquationReport solve_matrix_equation(const MatrixEquation& eq);

/// Direct evaluation  (+)_i  A_i (x) X (x) B_i.  X may carry top components
/// (a solvable report's solution can, where D has all-eps columns); they are
/// absorbed per the primal scalar rule eps (x) top = eps.
TropMatrix evaluate_equation(const MatrixEquation& eq, const TropMatrix& x);

} // namespace trop
