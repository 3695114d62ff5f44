#include "trop/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace trop {

std::pair<TropScalar, std::optional<Permutation>> brute_maper(const TropMatrix& a) {
    detail::require_square(a, "brute maper");
    detail::require_top_free(a, "brute maper");
    const int n = a.rows();
    if (n > 8) throw DomainError("brute maper: oracle limited to n <= 8");

    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    TropScalar best = TropScalar::eps();
    std::optional<Permutation> best_perm;
    do {
        TropScalar w(0);
        for (int i = 0; i < n && !w.is_eps(); ++i)
            w = otimes(w, a.at(i, image[i]));
        if (!w.is_eps() && best < w) {
            best = w;
            best_perm = Permutation(image);
        }
    } while (std::next_permutation(image.begin(), image.end()));
    return {best, best_perm};
}

namespace {

// enumerate elementary cycles: depth-first from each start vertex over
// vertices >= start, closing back to the start
void cycle_dfs(const TropMatrix& a, int start, int v, const TropScalar& weight, int len,
               std::vector<char>& on_path, TropScalar& best_w, long long& best_len,
               bool& found) {
    const int n = a.rows();
    for (int t = start; t < n; ++t) {
        const TropScalar& arc = a.at(v, t);
        if (arc.is_eps()) continue;
        TropScalar w2 = otimes(weight, arc);
        if (t == start) {
            // mean comparison by cross-multiplication: w2/(len+1) vs best
            if (!found || mul_int(w2, best_len) > mul_int(best_w, len + 1)) {
                best_w = w2;
                best_len = len + 1;
                found = true;
            }
        } else if (!on_path[t]) {
            on_path[t] = 1;
            cycle_dfs(a, start, t, w2, len + 1, on_path, best_w, best_len, found);
            on_path[t] = 0;
        }
    }
}

} // namespace

TropScalar brute_cycle_mean(const TropMatrix& a) {
    detail::require_square(a, "brute cycle mean");
    detail::require_top_free(a, "brute cycle mean");
    const int n = a.rows();
    if (n > 7) throw DomainError("brute cycle mean: oracle limited to n <= 7");

    TropScalar best_w = TropScalar::eps();
    long long best_len = 1;
    bool found = false;
    std::vector<char> on_path(n, 0);
    for (int s = 0; s < n; ++s) {
        on_path[s] = 1;
        cycle_dfs(a, s, s, TropScalar(0), 0, on_path, best_w, best_len, found);
        on_path[s] = 0;
    }
    return found ? div_int(best_w, best_len) : TropScalar::eps();
}

bool brute_eigen_check(const TropMatrix& a, const TropScalar& lambda, const TropMatrix& x) {
    if (!x.is_column() || a.rows() != a.cols() || a.cols() != x.rows())
        throw DimensionError("brute eigen check: need square A and matching column x");
    if (x.all_eps()) return false;
    return mat_otimes(a, x) == scalar_mul(lambda, x);
}

} // namespace trop
