#include "trop/spectral.hpp"

#include <algorithm>

namespace trop {
namespace {

// Max-plus transitive closure A+ (nonempty walks) by Floyd-Warshall.
// Valid as a finite quantity whenever no cycle has positive weight; the
// callers guarantee that by normalizing with the maximum cycle mean first.
TropMatrix plus_closure(const TropMatrix& a) {
    const int n = a.rows();
    TropMatrix g = a;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const TropScalar& gik = g.at(i, k);
            if (gik.is_eps()) continue;
            for (int j = 0; j < n; ++j) {
                if (g.at(k, j).is_eps()) continue;
                TropScalar cand = otimes(gik, g.at(k, j));
                if (g.at(i, j) < cand) g.at(i, j) = cand;
            }
        }
    return g;
}

} // namespace

TropScalar max_cycle_mean(const TropMatrix& a) {
    detail::require_square(a, "max cycle mean");
    detail::require_top_free(a, "max cycle mean");
    const int n = a.rows();

    // Karp's dynamic program on the graph extended with a super-source that
    // reaches every vertex by a zero-weight arc: with N = n + 1 vertices,
    //   lambda = max_v min_k (D_N(v) - D_k(v)) / (N - k)
    // over v with D_N(v) finite, where D_k(v) is the maximum weight of a
    // walk of exactly k arcs from the source.  The source adds no cycles, so
    // the cycle structure is unchanged; an N-arc walk must close a cycle,
    // hence no finite D_N at all means the digraph is acyclic.
    const int N = n + 1;
    std::vector<std::vector<TropScalar>> d(N + 1, std::vector<TropScalar>(n, TropScalar::eps()));
    for (int v = 0; v < n; ++v) d[1][v] = TropScalar(0);
    for (int k = 2; k <= N; ++k) {
        const auto& prev = d[k - 1];
        for (int v = 0; v < n; ++v) {
            TropScalar best = TropScalar::eps();
            for (int u = 0; u < n; ++u) {
                if (a.at(u, v).is_eps() || prev[u].is_eps()) continue;
                best = oplus(best, otimes(prev[u], a.at(u, v)));
            }
            d[k][v] = best;
        }
    }

    TropScalar lambda = TropScalar::eps();
    for (int v = 0; v < n; ++v) {
        const TropScalar& dn = d[N][v];
        if (dn.is_eps()) continue;
        TropScalar best_v = TropScalar::top();
        for (int k = 0; k < N; ++k) {
            if (d[k][v].is_eps()) continue;
            best_v = oplus_prime(best_v, div_int(otimes(dn, neg(d[k][v])), N - k));
        }
        lambda = oplus(lambda, best_v);
    }
    return lambda;
}

std::optional<TropMatrix> kleene_star(const TropMatrix& a) {
    detail::require_square(a, "kleene star");
    detail::require_top_free(a, "kleene star");
    if (max_cycle_mean(a) > TropScalar(0)) return std::nullopt;
    return mat_oplus(identity(a.rows()), plus_closure(a));
}

EigenResult eigenpair(const TropMatrix& a) {
    detail::require_square(a, "eigenpair");
    detail::require_top_free(a, "eigenpair");
    const int n = a.rows();
    const TropScalar lambda = max_cycle_mean(a);

    EigenResult res{lambda, TropMatrix(n, 1), false};

    if (lambda.is_eps()) {
        // Acyclic digraph: some column is all eps (a vertex without incoming
        // arcs exists), and its 0/eps indicator satisfies A (x) x = eps (x) x.
        for (int j = 0; j < n; ++j) {
            bool all_eps = true;
            for (int i = 0; i < n && all_eps; ++i) all_eps = a.at(i, j).is_eps();
            if (all_eps) {
                res.eigenvector.at(j, 0) = TropScalar(0);
                res.finite_eigenvector = (n == 1);
                return res;
            }
        }
        throw Error("eigenpair: acyclic digraph without all-eps column"); // unreachable
    }

    // Normalize so every cycle weight is <= 0, close, and take a critical
    // column: a column j lying on a zero-weight (= formerly critical) cycle,
    // recognized by (A_lambda)+ having an exact 0 at (j, j).
    TropMatrix plus = plus_closure(scalar_mul(neg(lambda), a));
    int crit = -1;
    for (int j = 0; j < n && crit < 0; ++j)
        if (plus.at(j, j) == TropScalar(0)) crit = j;
    if (crit < 0) throw Error("eigenpair: no critical column found"); // unreachable

    for (int i = 0; i < n; ++i)
        res.eigenvector.at(i, 0) = (i == crit) ? TropScalar(0) : plus.at(i, crit);
    res.finite_eigenvector = true;
    for (int i = 0; i < n; ++i)
        if (!res.eigenvector.at(i, 0).is_finite()) res.finite_eigenvector = false;

    if (mat_otimes(a, res.eigenvector) != scalar_mul(lambda, res.eigenvector))
        throw Error("eigenpair: eigen equation re-verification failed"); // unreachable
    return res;
}

bool is_irreducible(const TropMatrix& a) {
    detail::require_square(a, "irreducibility");
    const int n = a.rows();
    if (n == 1) return true;

    // Strongly connected iff vertex 0 reaches every vertex along the arcs
    // and along the reversed arcs.
    std::vector<std::vector<int>> fwd(n), rev(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!a.at(i, j).is_eps()) {
                fwd[i].push_back(j);
                rev[j].push_back(i);
            }

    auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(n, 0);
        std::vector<int> dfs{0};
        seen[0] = 1;
        int reached = 0;
        while (!dfs.empty()) {
            int v = dfs.back();
            dfs.pop_back();
            ++reached;
            for (int t : adj[v])
                if (!seen[t]) {
                    seen[t] = 1;
                    dfs.push_back(t);
                }
        }
        return reached == n;
    };
    return reaches_all(fwd) && reaches_all(rev);
}

} // namespace trop
