#include "endohecke/poly.hpp"
#include "endohecke/qlinalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace endohecke;

namespace {

Poly X(int i) { return Poly::var(i); }

Poly random_poly(std::mt19937_64& rng, int nv, int maxdeg) {
    Poly p;
    for (int d = 0; d <= maxdeg; ++d)
        for (Mono m : monomials_of_degree(nv, d))
            if (rng() % 3 == 0) p += Poly::monomial(mpq_class(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3), m);
    return p;
}

}  // namespace

TEST(Poly, Arithmetic) {
    Poly a = X(0) + X(1), b = X(0) - X(1);
    EXPECT_EQ(a * b, X(0) * X(0) - X(1) * X(1));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * a).degree(), 2);
    EXPECT_TRUE((a * a).is_homogeneous());
    EXPECT_FALSE((a + Poly(1)).is_homogeneous());
    EXPECT_EQ(Poly(0).degree(), -1);
    EXPECT_EQ((a * b).str(), "x1^2 - x2^2");
    EXPECT_EQ((X(0) * mpq_class(1, 2) - Poly(3)).str({"a"}), "1/2*a - 3");
}

TEST(Poly, MonomialCounts) {
    // C(n + k - 1, k)
    EXPECT_EQ(monomials_of_degree(3, 0).size(), 1u);
    EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
    EXPECT_EQ(monomials_of_degree(3, 3).size(), 10u);
    EXPECT_EQ(monomials_of_degree(5, 2).size(), 15u);
    EXPECT_TRUE(monomials_of_degree(2, -1).empty());
}

TEST(Poly, ExactDivisionRandom) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Poly f = random_poly(rng, 3, 3), g = random_poly(rng, 3, 2);
        if (g.is_zero()) continue;
        auto q = (f * g).divide_exact(g);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, f);
    }
    EXPECT_FALSE((X(0) * X(0) + Poly(1)).divide_exact(X(0)).has_value());
    EXPECT_THROW(X(0).divide_exact(Poly()), std::domain_error);
}

TEST(Poly, SubstitutionIsRingMap) {
    std::mt19937_64 rng(11);
    std::vector<Poly> im = {X(1) + X(2), X(0) * mpq_class(2), X(2) - Poly(1)};
    for (int t = 0; t < 20; ++t) {
        Poly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2);
        EXPECT_EQ((f * g).substitute(im), f.substitute(im) * g.substitute(im));
        EXPECT_EQ((f + g).substitute(im), f.substitute(im) + g.substitute(im));
        std::vector<mpq_class> pt = {3, -2, 5};
        std::vector<mpq_class> ipt;
        for (auto& p : im) ipt.push_back(p.eval(pt));
        EXPECT_EQ(f.substitute(im).eval(pt), f.eval(ipt));
    }
}

TEST(PMat, Products) {
    PMat A(2, 2), B(2, 2);
    A.at(0, 1) = X(0);
    B.at(1, 0) = X(1);
    PMat C = A * B;
    EXPECT_EQ(C.at(0, 0), X(0) * X(1));
    EXPECT_TRUE((B * A).at(0, 0).is_zero());
    EXPECT_EQ(PMat::identity(2) * A, A);
    EXPECT_THROW(PMat(2, 3) * PMat(2, 3), std::invalid_argument);
}

TEST(LinAlg, NullspaceAgainstDenseRank) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 7);
        QMat m(rows, std::vector<mpq_class>(cols));
        std::vector<SparseRow> sp(rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng() % 2) {
                    m[i][j] = static_cast<long>(rng() % 7) - 3;
                    if (m[i][j] != 0) sp[i][j] = m[i][j];
                }
        auto ns = nullspace(cols, sp);
        EXPECT_EQ(static_cast<int>(ns.size()), cols - rank(m));
        for (auto& v : ns)
            for (int i = 0; i < rows; ++i) {
                mpq_class s = 0;
                for (auto& [j, x] : v) s += m[i][j] * x;
                EXPECT_EQ(s, 0);
            }
    }
}

TEST(LinAlg, Inverse) {
    QMat a = {{2, 1, 0}, {1, 1, 0}, {0, 3, 1}};
    QMat b = inverse(a);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mpq_class s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            EXPECT_EQ(s, i == j ? 1 : 0);
        }
    EXPECT_THROW(inverse({{1, 2}, {2, 4}}), std::domain_error);
    auto [pr, pc] = pivots({{0, 1}, {0, 2}, {1, 0}});
    EXPECT_EQ(pr, (std::vector<int>{2, 1}));
    EXPECT_EQ(pc, (std::vector<int>{0, 1}));
}
