#include <gtest/gtest.h>

#include <random>

#include "normlab/lattice.hpp"

using namespace normlab;
using namespace normlab::lattice;

namespace {

Vec v(std::initializer_list<int64_t> xs)
{
    Vec out;
    for (auto x : xs) out.push_back(x);
    return out;
}

} // namespace

TEST(Lattice, SmallExamples)
{
    auto L = hnf(2, {v({2, 0}), v({0, 3})});
    EXPECT_EQ(L.rank(), 2u);
    EXPECT_TRUE(L.contains(v({4, -9})));
    EXPECT_FALSE(L.contains(v({1, 0})));
    auto M = hnf(3, {v({1, 1, 0}), v({0, 1, 1})});
    EXPECT_TRUE(M.contains(v({1, 0, -1})));
    EXPECT_FALSE(M.contains(v({1, 0, 0})));
    EXPECT_TRUE(M.contains(v({0, 0, 0})));
    auto Z = hnf(2, {v({6, 4}), v({4, 6})});
    /* index 20 sublattice: determinant of the HNF */
    ASSERT_EQ(Z.rank(), 2u);
    EXPECT_EQ(Z.basis()[0][0] * Z.basis()[1][1], 20);
}

TEST(Lattice, HnfShape)
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        size_t dim = 2 + rng() % 4;
        std::vector<Vec> gens;
        for (size_t k = 0; k < dim + 1; ++k) {
            Vec g(dim);
            for (auto & x : g) x = static_cast<int64_t>(rng() % 13) - 6;
            gens.push_back(g);
        }
        auto L = hnf(dim, gens);
        size_t prev = 0;
        for (size_t r = 0; r < L.rank(); ++r) {
            auto const & row = L.basis()[r];
            size_t piv = 0;
            while (piv < dim && row[piv] == 0) ++piv;
            ASSERT_LT(piv, dim);
            if (r > 0) EXPECT_GT(piv, prev);
            prev = piv;
            EXPECT_GT(row[piv], 0);
            for (size_t above = 0; above < r; ++above) {
                EXPECT_GE(L.basis()[above][piv], 0);
                EXPECT_LT(L.basis()[above][piv], row[piv]);
            }
        }
        /* integer combinations of generators are members */
        for (int s = 0; s < 20; ++s) {
            Vec x(dim, 0);
            for (auto const & g : gens) {
                int64_t c = static_cast<int64_t>(rng() % 11) - 5;
                for (size_t i = 0; i < dim; ++i) x[i] += c * g[i];
            }
            EXPECT_TRUE(L.contains(x));
        }
    }
}

TEST(Lattice, NonMembersDetected)
{
    /* 2Z^3 plus (1,1,1): a vector with mixed parities is outside */
    auto L = hnf(3, {v({2, 0, 0}), v({0, 2, 0}), v({0, 0, 2}), v({1, 1, 1})});
    EXPECT_TRUE(L.contains(v({3, 1, -1})));
    EXPECT_FALSE(L.contains(v({1, 0, 0})));
    EXPECT_FALSE(L.contains(v({1, 1, 0})));
}
