#include "trop/assignment.hpp"

namespace trop {
namespace {

// Shortest-augmenting-path Hungarian method (Jonker-Volgenant style) on the
// minimization costs c_ij = -a_ij.  eps cells are skipped outright, never
// replaced by a large constant.  Row potentials start at the row minima so
// every reduced cost is non-negative from the first Dijkstra step.
//
// On success the final potentials (u, v) satisfy u_i + v_j <= c_ij with
// equality on matched cells, which is exactly the dual certificate the
// scaling matrices need: u_i + a_ij + v_j <= 0, tight along the optimal
// permutation.
struct Hungarian {
    int n;
    const TropMatrix& a;
    std::vector<TropScalar> u, v;   // 1-based; index 0 is the virtual column
    std::vector<int> matched_row;   // matched_row[j] = row assigned to column j

    explicit Hungarian(const TropMatrix& m)
        : n(m.rows()), a(m), u(n + 1, TropScalar(0)), v(n + 1, TropScalar(0)),
          matched_row(n + 1, 0) {}

    TropScalar cost(int i, int j) const { return neg(a.at(i - 1, j - 1)); } // eps maps to top

    bool solve() {
        for (int i = 1; i <= n; ++i) {
            TropScalar row_min = TropScalar::top();
            for (int j = 1; j <= n; ++j) row_min = oplus_prime(row_min, cost(i, j));
            if (row_min.is_top()) return false; // row of forbidden cells only
            u[i] = row_min;
        }
        std::vector<TropScalar> minv(n + 1);
        std::vector<int> way(n + 1, 0);
        std::vector<char> used(n + 1, 0);
        for (int i = 1; i <= n; ++i) {
            matched_row[0] = i;
            int j0 = 0;
            std::fill(minv.begin(), minv.end(), TropScalar::top());
            std::fill(used.begin(), used.end(), 0);
            do {
                used[j0] = 1;
                const int i0 = matched_row[j0];
                int j1 = -1;
                TropScalar delta = TropScalar::top();
                for (int j = 1; j <= n; ++j) {
                    if (used[j]) continue;
                    TropScalar c = cost(i0, j);
                    if (!c.is_top()) {
                        TropScalar reduced = otimes(c, neg(otimes(u[i0], v[j])));
                        if (reduced < minv[j]) {
                            minv[j] = reduced;
                            way[j] = j0;
                        }
                    }
                    if (minv[j] < delta) {
                        delta = minv[j];
                        j1 = j;
                    }
                }
                if (delta.is_top()) return false; // no augmenting path over finite cells
                for (int j = 0; j <= n; ++j) {
                    if (used[j]) {
                        u[matched_row[j]] = otimes(u[matched_row[j]], delta);
                        v[j] = otimes(v[j], neg(delta));
                    } else {
                        minv[j] = otimes(minv[j], neg(delta));
                    }
                }
                j0 = j1;
            } while (matched_row[j0] != 0);
            do {
                int j1 = way[j0];
                matched_row[j0] = matched_row[j1];
                j0 = j1;
            } while (j0 != 0);
        }
        return true;
    }
};

} // namespace

AssignmentResult maper(const TropMatrix& a) {
    detail::require_square(a, "maper");
    detail::require_top_free(a, "maper");
    const int n = a.rows();

    Hungarian h(a);
    if (!h.solve()) return AssignmentResult{}; // value eps, perm and duals absent

    std::vector<int> image(n, -1);
    for (int j = 1; j <= n; ++j) image[h.matched_row[j] - 1] = j - 1;
    Permutation perm(std::move(image));

    TropScalar value(0);
    for (int i = 0; i < n; ++i) value = otimes(value, a.at(i, perm(i)));

    AssignmentResult res;
    res.value = value;
    res.perm = std::move(perm);
    res.row_duals.assign(h.u.begin() + 1, h.u.end());
    res.col_duals.assign(h.v.begin() + 1, h.v.end());
    return res;
}

std::pair<TropMatrix, TropMatrix> hungarian_scaling(const TropMatrix& a) {
    AssignmentResult res = maper(a);
    if (!res.value.is_finite())
        throw DomainError("hungarian scaling: no permutation with finite weight exists");
    return {diag(res.row_duals), diag(res.col_duals)};
}

TensorPermanentCheck maper_tensor_exponent_check(const TropMatrix& a, const TropMatrix& b) {
    detail::require_square(a, "tensor permanent check");
    detail::require_square(b, "tensor permanent check");
    const TropScalar ma = maper(a).value;
    const TropScalar mb = maper(b).value;
    if (!ma.is_finite() || !mb.is_finite())
        throw DomainError("tensor permanent check: both permanents must be finite");
    const long long n = a.rows(), m = b.rows();
    return TensorPermanentCheck{
        maper(tensor(a, b)).value,
        otimes(mul_int(ma, n), mul_int(mb, m)),
        otimes(mul_int(ma, m), mul_int(mb, n)),
    };
}

} // namespace trop
