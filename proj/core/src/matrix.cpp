#include "trop/matrix.hpp"

#include <algorithm>
#include <string>

namespace trop {
namespace {

std::string shape_of(const TropMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

TropMatrix::TropMatrix(int rows, int cols) : TropMatrix(rows, cols, TropScalar::eps()) {}

TropMatrix::TropMatrix(int rows, int cols, const TropScalar& fill)
    : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw DimensionError("matrix dimensions must be positive, got " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    entries_.assign(static_cast<size_t>(rows) * cols, fill);
}

TropMatrix TropMatrix::from_rows(std::initializer_list<std::initializer_list<TropScalar>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    TropMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw DimensionError("ragged row literal: row " + std::to_string(i + 1) +
                                 " has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(c));
        int j = 0;
        for (const auto& v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool TropMatrix::has_top() const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [](const TropScalar& s) { return s.is_top(); });
}

bool TropMatrix::all_eps() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const TropScalar& s) { return s.is_eps(); });
}

TropMatrix TropMatrix::transpose() const {
    TropMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    int n = static_cast<int>(image_.size());
    std::vector<char> hit(n, 0);
    for (int v : image_) {
        if (v < 0 || v >= n || hit[v])
            throw DomainError("permutation image is not a bijection");
        hit[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
}

namespace detail {

void require_top_free(const TropMatrix& a, const char* op) {
    if (a.has_top())
        throw DomainError(std::string(op) + ": operand contains +inf entries");
}

void require_square(const TropMatrix& a, const char* op) {
    if (!a.is_square())
        throw DimensionError(std::string(op) + ": matrix must be square, got " + shape_of(a));
}

TropMatrix product_unchecked(const TropMatrix& a, const TropMatrix& b) {
    TropMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            TropScalar acc = TropScalar::eps();
            for (int k = 0; k < a.cols(); ++k)
                acc = oplus(acc, otimes(a.at(i, k), b.at(k, j)));
            out.at(i, j) = acc;
        }
    return out;
}

} // namespace detail

TropMatrix mat_oplus(const TropMatrix& a, const TropMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix sum: shapes differ (" + shape_of(a) + " vs " + shape_of(b) + ")");
    TropMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = oplus(a.at(i, j), b.at(i, j));
    return out;
}

TropMatrix mat_otimes(const TropMatrix& a, const TropMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix product: inner dimensions differ (" + shape_of(a) +
                             " vs " + shape_of(b) + ")");
    detail::require_top_free(a, "matrix product");
    detail::require_top_free(b, "matrix product");
    return detail::product_unchecked(a, b);
}

TropMatrix mat_otimes_prime(const TropMatrix& a, const TropMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("dual matrix product: inner dimensions differ (" + shape_of(a) +
                             " vs " + shape_of(b) + ")");
    TropMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            TropScalar acc = TropScalar::top();
            for (int k = 0; k < a.cols(); ++k)
                acc = oplus_prime(acc, otimes_prime(a.at(i, k), b.at(k, j)));
            out.at(i, j) = acc;
        }
    return out;
}

TropMatrix scalar_mul(const TropScalar& alpha, const TropMatrix& a) {
    TropMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = otimes(alpha, a.at(i, j));
    return out;
}

TropMatrix conjugate(const TropMatrix& a) {
    TropMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(j, i) = neg(a.at(i, j));
    return out;
}

TropMatrix tensor(const TropMatrix& a, const TropMatrix& b) {
    detail::require_top_free(a, "tensor product");
    detail::require_top_free(b, "tensor product");
    const int m = a.rows(), q = a.cols(), r = b.rows(), s = b.cols();
    TropMatrix out(r * m, s * q);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) {
            const TropScalar& bij = b.at(i, j);
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < q; ++l)
                    out.at(i * m + k, j * q + l) = otimes(a.at(k, l), bij);
        }
    return out;
}

TropMatrix vec(const TropMatrix& x) {
    TropMatrix out(x.rows() * x.cols(), 1);
    for (int j = 0; j < x.cols(); ++j)
        for (int i = 0; i < x.rows(); ++i) out.at(j * x.rows() + i, 0) = x.at(i, j);
    return out;
}

TropMatrix unvec(const TropMatrix& v, int rows, int cols) {
    if (!v.is_column())
        throw DimensionError("unvec: input must be a column vector, got " + shape_of(v));
    if (rows <= 0 || cols <= 0 || v.rows() != rows * cols)
        throw DimensionError("unvec: vector of length " + std::to_string(v.rows()) +
                             " does not fill a " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " matrix");
    TropMatrix out(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) out.at(i, j) = v.at(j * rows + i, 0);
    return out;
}

TropMatrix diag(const std::vector<TropScalar>& d) {
    int n = static_cast<int>(d.size());
    if (n == 0) throw DimensionError("diag: empty diagonal");
    for (const auto& v : d)
        if (!v.is_finite()) throw DomainError("diag: diagonal entries must be finite");
    TropMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = d[i];
    return out;
}

TropMatrix identity(int n) { return diag(std::vector<TropScalar>(static_cast<size_t>(n), TropScalar(0))); }

TropMatrix dual_identity(int n) {
    TropMatrix out(n, n, TropScalar::top());
    for (int i = 0; i < n; ++i) out.at(i, i) = TropScalar(0);
    return out;
}

std::optional<TropMatrix> try_invert(const TropMatrix& a) {
    detail::require_square(a, "tropical inverse");
    const int n = a.rows();
    std::vector<int> finite_col(n, -1);
    std::vector<char> col_used(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const TropScalar& v = a.at(i, j);
            if (v.is_eps()) continue;
            if (v.is_top() || finite_col[i] >= 0) return std::nullopt;
            finite_col[i] = j;
        }
        int j = finite_col[i];
        if (j < 0 || col_used[j]) return std::nullopt;
        col_used[j] = 1;
    }
    TropMatrix inv(n, n);
    for (int i = 0; i < n; ++i) {
        int j = finite_col[i];
        inv.at(j, i) = neg(a.at(i, j));
    }
    if (detail::product_unchecked(a, inv) != identity(n)) return std::nullopt;
    return inv;
}

} // namespace trop
