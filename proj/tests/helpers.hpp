#pragma once

#include <initializer_list>
#include <random>

#include "trop/matrix.hpp"

namespace troptest {

inline trop::TropScalar E() { return trop::TropScalar::eps(); }
inline trop::TropScalar T() { return trop::TropScalar::top(); }

inline trop::TropMatrix M(std::initializer_list<std::initializer_list<trop::TropScalar>> rows) {
    return trop::TropMatrix::from_rows(rows);
}

inline trop::TropMatrix col(std::initializer_list<trop::TropScalar> entries) {
    trop::TropMatrix m(static_cast<int>(entries.size()), 1);
    int i = 0;
    for (const auto& v : entries) m.at(i++, 0) = v;
    return m;
}

// Deterministic instance generator; every suite fixes its own seed.  Entries
// are integers in [lo, hi] with the given eps density.
struct Gen {
    std::mt19937 rng;

    explicit Gen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    }

    trop::TropScalar entry(int lo = -10, int hi = 10, double eps_prob = 0.2) {
        if (chance(eps_prob)) return trop::TropScalar::eps();
        return trop::TropScalar(uniform(lo, hi));
    }

    trop::TropMatrix matrix(int rows, int cols, int lo = -10, int hi = 10, double eps_prob = 0.2) {
        trop::TropMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = entry(lo, hi, eps_prob);
        return m;
    }

    trop::TropMatrix finite_matrix(int rows, int cols, int lo = -10, int hi = 10) {
        return matrix(rows, cols, lo, hi, 0.0);
    }

    // generalized permutation matrix: one finite entry per row and column
    trop::TropMatrix gpm(int n, int lo = -10, int hi = 10) {
        std::vector<int> image(n);
        for (int i = 0; i < n; ++i) image[i] = i;
        std::shuffle(image.begin(), image.end(), rng);
        trop::TropMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, image[i]) = trop::TropScalar(uniform(lo, hi));
        return m;
    }

    // random matrix overlaid with a random Hamiltonian cycle of finite
    // entries, which makes the digraph strongly connected
    trop::TropMatrix irreducible(int n, int lo = -10, int hi = 10, double eps_prob = 0.2) {
        trop::TropMatrix m = matrix(n, n, lo, hi, eps_prob);
        if (n == 1) {
            m.at(0, 0) = trop::TropScalar(uniform(lo, hi));
            return m;
        }
        std::vector<int> cycle(n);
        for (int i = 0; i < n; ++i) cycle[i] = i;
        std::shuffle(cycle.begin(), cycle.end(), rng);
        for (int i = 0; i < n; ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % n];
            if (m.at(from, to).is_eps()) m.at(from, to) = trop::TropScalar(uniform(lo, hi));
        }
        return m;
    }
};

} // namespace troptest
