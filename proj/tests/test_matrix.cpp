#include <doctest.h>

#include "trop/matrix.hpp"

#include "helpers.hpp"

using trop::TropMatrix;
using trop::TropScalar;
using troptest::col;
using troptest::E;
using troptest::M;
using troptest::T;

TEST_CASE("construction rejects empty shapes") {
    CHECK_THROWS_AS(TropMatrix(0, 3), trop::DimensionError);
    CHECK_THROWS_AS(TropMatrix(2, 0), trop::DimensionError);
    CHECK_THROWS_AS(TropMatrix(-1, 1), trop::DimensionError);
}

TEST_CASE("mat_oplus") {
    auto a = M({{1, E()}, {0, 2}});
    auto b = M({{0, 3}, {E(), 2}});
    CHECK(mat_oplus(a, b) == M({{1, 3}, {0, 2}}));
    CHECK(mat_oplus(a, a) == a);
    CHECK(mat_oplus(a, TropMatrix(2, 2)) == a);
    CHECK_THROWS_AS(mat_oplus(a, TropMatrix(2, 3)), trop::DimensionError);
}

TEST_CASE("mat_otimes") {
    auto a = M({{2, 1}, {0, 3}});
    CHECK(mat_otimes(a, col({0, 1})) == col({2, 4}));
    CHECK(mat_otimes(trop::identity(2), a) == a);
    CHECK(mat_otimes(TropMatrix(2, 2), a) == TropMatrix(2, 2));
    CHECK_THROWS_AS(mat_otimes(a, TropMatrix(3, 1)), trop::DimensionError);
    CHECK_THROWS_AS(mat_otimes(M({{T()}}), M({{0}})), trop::DomainError);
}

TEST_CASE("mat_otimes_prime") {
    auto a = M({{0, T()}, {-2, -1}});
    CHECK(mat_otimes_prime(a, col({3, 4})) == col({3, 1}));
    auto b = M({{5, E()}, {7, 2}});
    CHECK(mat_otimes_prime(trop::dual_identity(2), b) == b);
    auto all_top_row = M({{T(), T()}});
    CHECK(mat_otimes_prime(all_top_row, col({1, E()})) == col({T()}));
    CHECK_THROWS_AS(mat_otimes_prime(a, TropMatrix(3, 1)), trop::DimensionError);
}

TEST_CASE("scalar_mul") {
    CHECK(scalar_mul(5, M({{0, 1}})) == M({{5, 6}}));
    auto a = M({{2, E()}, {-1, 0}});
    CHECK(scalar_mul(0, a) == a);
    CHECK(scalar_mul(E(), a) == TropMatrix(2, 2));
}

TEST_CASE("conjugate") {
    CHECK(conjugate(M({{0, 2}, {E(), 1}})) == M({{0, T()}, {-2, -1}}));
    CHECK(conjugate(M({{E()}})) == M({{T()}}));
    troptest::Gen gen(201);
    for (int t = 0; t < 50; ++t) {
        auto a = gen.matrix(gen.uniform(1, 4), gen.uniform(1, 4));
        CHECK(conjugate(conjugate(a)) == a);
    }
}

TEST_CASE("tensor layout: blocks are indexed by the second operand") {
    CHECK(tensor(M({{0, 1}}), M({{2}, {3}})) == M({{2, 3}, {3, 4}}));
    auto a = M({{4, E()}, {0, 1}});
    CHECK(tensor(a, M({{0}})) == a);
    CHECK(tensor(trop::identity(2), trop::identity(3)) == trop::identity(6));
    CHECK_THROWS_AS(tensor(M({{T()}}), M({{0}})), trop::DomainError);

    // spelled-out index check of (A (#) B)[i*m+k][j*q+l] = a_kl + b_ij
    troptest::Gen gen(202);
    auto A = gen.matrix(2, 3);
    auto B = gen.matrix(3, 2);
    auto t = tensor(A, B);
    REQUIRE(t.rows() == 6);
    REQUIRE(t.cols() == 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 3; ++l)
                    CHECK(t.at(i * 2 + k, j * 3 + l) == otimes(A.at(k, l), B.at(i, j)));
}

TEST_CASE("vec and unvec") {
    CHECK(vec(M({{1, 2}, {3, 4}})) == col({1, 3, 2, 4}));
    CHECK(vec(col({5, 6})) == col({5, 6}));
    CHECK(vec(M({{E(), 0}})) == col({E(), 0}));
    CHECK(unvec(col({1, 3, 2, 4}), 2, 2) == M({{1, 2}, {3, 4}}));
    CHECK(unvec(col({5}), 1, 1) == M({{5}}));
    CHECK(unvec(col({1, 2}), 1, 2) == M({{1, 2}}));
    CHECK_THROWS_AS(unvec(col({1, 2, 3}), 2, 2), trop::DimensionError);
    CHECK_THROWS_AS(unvec(M({{1, 2}, {3, 4}}), 2, 2), trop::DimensionError);

    troptest::Gen gen(203);
    for (int t = 0; t < 100; ++t) {
        int r = gen.uniform(1, 5), c = gen.uniform(1, 5);
        auto x = gen.matrix(r, c);
        CHECK(unvec(vec(x), r, c) == x);
    }
}

TEST_CASE("diag and identities") {
    CHECK(trop::diag({0, 0}) == trop::identity(2));
    CHECK(trop::diag({1}) == M({{1}}));
    CHECK(trop::diag({-2, -3}) == M({{-2, E()}, {E(), -3}}));
    CHECK_THROWS_AS(trop::diag({1, E()}), trop::DomainError);
    CHECK_THROWS_AS(trop::diag({T()}), trop::DomainError);
}

TEST_CASE("try_invert") {
    auto inv = try_invert(M({{E(), 2}, {3, E()}}));
    REQUIRE(inv.has_value());
    CHECK(*inv == M({{E(), -3}, {-2, E()}}));
    CHECK(try_invert(trop::identity(3)) == trop::identity(3));
    CHECK_FALSE(try_invert(M({{0, 0}, {E(), 0}})).has_value());
    CHECK_FALSE(try_invert(TropMatrix(2, 2)).has_value());
    CHECK_THROWS_AS(try_invert(TropMatrix(2, 3)), trop::DimensionError);

    troptest::Gen gen(204);
    for (int t = 0; t < 100; ++t) {
        int n = gen.uniform(1, 6);
        auto a = gen.gpm(n);
        auto ainv = try_invert(a);
        REQUIRE(ainv.has_value());
        CHECK(mat_otimes(a, *ainv) == trop::identity(n));
        CHECK(mat_otimes(*ainv, a) == trop::identity(n));
    }
}

TEST_CASE("mixed-product identity (A(#)B)(x)(C(#)D) = (A(x)C)(#)(B(x)D)") {
    troptest::Gen gen(205);
    for (int t = 0; t < 100; ++t) {
        int m = gen.uniform(1, 4), q = gen.uniform(1, 4), w = gen.uniform(1, 4);
        int r = gen.uniform(1, 4), s = gen.uniform(1, 4), z = gen.uniform(1, 4);
        auto a = gen.matrix(m, q);
        auto c = gen.matrix(q, w);
        auto b = gen.matrix(r, s);
        auto d = gen.matrix(s, z);
        CHECK(mat_otimes(tensor(a, b), tensor(c, d)) == tensor(mat_otimes(a, c), mat_otimes(b, d)));
    }
}

TEST_CASE("transpose law (A(#)B)^T = A^T(#)B^T") {
    troptest::Gen gen(206);
    for (int t = 0; t < 100; ++t) {
        auto a = gen.matrix(gen.uniform(1, 4), gen.uniform(1, 4));
        auto b = gen.matrix(gen.uniform(1, 4), gen.uniform(1, 4));
        CHECK(tensor(a, b).transpose() == tensor(a.transpose(), b.transpose()));
    }
}

TEST_CASE("tensor of invertibles inverts blockwise") {
    troptest::Gen gen(207);
    for (int t = 0; t < 50; ++t) {
        int n = gen.uniform(1, 5), m = gen.uniform(1, 5);
        auto a = gen.gpm(n);
        auto b = gen.gpm(m);
        auto ab_inv = try_invert(tensor(a, b));
        REQUIRE(ab_inv.has_value());
        auto blockwise = tensor(*try_invert(a), *try_invert(b));
        CHECK(*ab_inv == blockwise);
        CHECK(mat_otimes(tensor(a, b), blockwise) == trop::identity(n * m));
    }
}

TEST_CASE("tensor of diagonals is diagonal") {
    troptest::Gen gen(208);
    for (int t = 0; t < 50; ++t) {
        int n = gen.uniform(1, 4), m = gen.uniform(1, 4);
        std::vector<TropScalar> dn, dm;
        for (int i = 0; i < n; ++i) dn.push_back(gen.uniform(-10, 10));
        for (int i = 0; i < m; ++i) dm.push_back(gen.uniform(-10, 10));
        auto t2 = tensor(trop::diag(dn), trop::diag(dm));
        for (int i = 0; i < t2.rows(); ++i)
            for (int j = 0; j < t2.cols(); ++j)
                if (i != j) CHECK(t2.at(i, j) == E());
                else CHECK(t2.at(i, j).is_finite());
    }
}

TEST_CASE("residuation: A(x)x <= b iff x <= A#(x)'b") {
    troptest::Gen gen(209);
    auto leq = [](const TropMatrix& p, const TropMatrix& q) {
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j)
                if (!(p.at(i, j) <= q.at(i, j))) return false;
        return true;
    };
    for (int t = 0; t < 200; ++t) {
        int m = gen.uniform(1, 4), n = gen.uniform(1, 4);
        auto a = gen.matrix(m, n);
        auto b = gen.matrix(m, 1, -10, 10, 0.1);
        auto bound = mat_otimes_prime(conjugate(a), b);
        auto x = gen.matrix(n, 1, -20, 20, 0.2);
        bool lhs = leq(trop::detail::product_unchecked(a, x), b);
        bool rhs = leq(x, bound);
        CHECK(lhs == rhs);
        // the bound itself always satisfies the inequality
        CHECK(leq(trop::detail::product_unchecked(a, bound), b));
    }
}
