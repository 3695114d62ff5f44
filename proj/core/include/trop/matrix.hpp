#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "trop/scalar.hpp"

namespace trop {

/// Dense rectangular max-plus matrix, row-major, immutable shape.
/// Entries may hold top, but the primal operations (otimes products, the
/// tensor product, permanents, cycle means) reject matrices containing it;
/// top only flows through the dual product after conjugation.
class TropMatrix {
public:
    /// All-eps matrix (the tropical zero matrix); dimensions must be positive.
    TropMatrix(int rows, int cols);
    TropMatrix(int rows, int cols, const TropScalar& fill);

    /// Row-literal construction for tests and small fixtures.
    static TropMatrix from_rows(std::initializer_list<std::initializer_list<TropScalar>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const TropScalar& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    TropScalar& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_column() const { return cols_ == 1; }
    bool is_square() const { return rows_ == cols_; }
    bool has_top() const;
    bool all_eps() const;

    TropMatrix transpose() const;

    friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const TropMatrix& a, const TropMatrix& b) { return !(a == b); }

private:
    int rows_;
    int cols_;
    std::vector<TropScalar> entries_;
};

/// Permutation of {0, .., n-1}; construction validates bijectivity.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int>& image() const { return image_; }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }

private:
    std::vector<int> image_;
};

/// Entrywise max; shapes must agree.
TropMatrix mat_oplus(const TropMatrix& a, const TropMatrix& b);

/// Primal product: (A (x) B)_ij = max_k (a_ik + b_kj).  Rejects top entries.
TropMatrix mat_otimes(const TropMatrix& a, const TropMatrix& b);

/// Dual product: (A (x)' B)_ij = min_k a_ik (x)' b_kj, with the eps/top clash
/// resolving to top.  This is the residuation workhorse.
TropMatrix mat_otimes_prime(const TropMatrix& a, const TropMatrix& b);

/// alpha (x) A: adds alpha to every entry.
TropMatrix scalar_mul(const TropScalar& alpha, const TropMatrix& a);

/// Conjugate A# = -A^T; eps entries become top.
TropMatrix conjugate(const TropMatrix& a);

/// Tensor product A (#) B of an m x q matrix A with an r x s matrix B: the
/// (r*m) x (s*q) block matrix whose block at block position (i, j) is
/// b_ij (x) A.  Note that B's entries index the blocks -- the mirror of the
/// usual Kronecker convention.  Zero-based index formula:
///     (A (#) B)[i*m + k][j*q + l] = a_kl + b_ij .
/// Rejects top entries (primal operation).
TropMatrix tensor(const TropMatrix& a, const TropMatrix& b);

/// Column-major stacking of X into a column vector:
/// component j*rows + i (zero-based) is x_ij.
TropMatrix vec(const TropMatrix& x);

/// Inverse of vec: unvec(vec(X), X.rows, X.cols) == X.
TropMatrix unvec(const TropMatrix& v, int rows, int cols);

/// Square matrix with the given finite diagonal and eps elsewhere.
TropMatrix diag(const std::vector<TropScalar>& d);

/// diag(0, .., 0): the identity of the primal product.
TropMatrix identity(int n);

/// 0 on the diagonal, top elsewhere: the identity of the dual product.
TropMatrix dual_identity(int n);

/// Inverse of a generalized permutation matrix (exactly one finite entry per
/// row and per column); nullopt if A is not of that form.  The result
/// satisfies A (x) A^-1 = I, which is verified before returning.
std::optional<TropMatrix> try_invert(const TropMatrix& a);

namespace detail {

/// Primal product without the top-rejection screen.  The solver needs it:
/// principal solutions may carry top components that, by construction, only
/// ever meet eps columns (eps absorbs top under the primal rule).
TropMatrix product_unchecked(const TropMatrix& a, const TropMatrix& b);

void require_top_free(const TropMatrix& a, const char* op);
void require_square(const TropMatrix& a, const char* op);

} // namespace detail

} // namespace trop
