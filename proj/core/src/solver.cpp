#include "trop/solver.hpp"

#include <string>

namespace trop {

MatrixEquation::MatrixEquation(std::vector<std::pair<TropMatrix, TropMatrix>> terms, TropMatrix rhs)
    : terms_(std::move(terms)), rhs_(std::move(rhs)) {
    if (terms_.empty()) throw DimensionError("matrix equation: at least one term required");
    const auto& [a0, b0] = terms_.front();
    for (size_t t = 1; t < terms_.size(); ++t) {
        const auto& [at, bt] = terms_[t];
        if (at.rows() != a0.rows() || at.cols() != a0.cols() ||
            bt.rows() != b0.rows() || bt.cols() != b0.cols())
            throw DimensionError("matrix equation: term " + std::to_string(t + 1) +
                                 " has a shape differing from term 1");
    }
    if (rhs_.rows() != a0.rows() || rhs_.cols() != b0.cols())
        throw DimensionError("matrix equation: right-hand side is " +
                             std::to_string(rhs_.rows()) + "x" + std::to_string(rhs_.cols()) +
                             ", expected " + std::to_string(a0.rows()) + "x" +
                             std::to_string(b0.cols()));
}

TropMatrix principal_solution(const TropMatrix& a, const TropMatrix& b) {
    if (!b.is_column() || a.rows() != b.rows())
        throw DimensionError("principal solution: need A (m x n) and column b (m x 1), got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    return mat_otimes_prime(conjugate(a), b);
}

bool is_solvable(const TropMatrix& a, const TropMatrix& b) {
    return detail::product_unchecked(a, principal_solution(a, b)) == b;
}

TropMatrix assemble_operator(const MatrixEquation& eq) {
    const auto& terms = eq.terms();
    TropMatrix op = tensor(terms.front().first, terms.front().second.transpose());
    for (size_t t = 1; t < terms.size(); ++t)
        op = mat_oplus(op, tensor(terms[t].first, terms[t].second.transpose()));
    return op;
}

EquationReport solve_matrix_equation(const MatrixEquation& eq) {
    TropMatrix op = assemble_operator(eq);
    TropMatrix rhs_vec = vec(eq.rhs());
    TropMatrix principal = principal_solution(op, rhs_vec);

    // The principal candidate may hold top components exactly where a column
    // of the operator is all eps; they never propagate through the product
    // because eps absorbs top on the primal side.
    TropMatrix reached = detail::product_unchecked(op, principal);

    EquationReport report{std::move(op), principal, true, std::nullopt, {}};
    for (int i = 0; i < reached.rows(); ++i)
        if (reached.at(i, 0) != rhs_vec.at(i, 0)) report.residual_rows.push_back(i + 1);
    report.solvable = report.residual_rows.empty();
    if (report.solvable) report.solution = unvec(principal, eq.x_rows(), eq.x_cols());
    return report;
}

TropMatrix evaluate_equation(const MatrixEquation& eq, const TropMatrix& x) {
    if (x.rows() != eq.x_rows() || x.cols() != eq.x_cols())
        throw DimensionError("equation evaluation: X is " + std::to_string(x.rows()) + "x" +
                             std::to_string(x.cols()) + ", expected " +
                             std::to_string(eq.x_rows()) + "x" + std::to_string(eq.x_cols()));
    TropMatrix acc(eq.rhs().rows(), eq.rhs().cols());
    for (const auto& [a, b] : eq.terms()) {
        detail::require_top_free(a, "equation evaluation");
        detail::require_top_free(b, "equation evaluation");
        acc = mat_oplus(acc, detail::product_unchecked(detail::product_unchecked(a, x), b));
    }
    return acc;
}

} // namespace trop
