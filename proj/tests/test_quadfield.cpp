#include <gtest/gtest.h>

#include <random>

#include "normlab/error.hpp"
#include "normlab/quadfield.hpp"

using namespace normlab;
using namespace normlab::quadfield;

namespace {

/* smallest y > 0 with x^2 - d y^2 = +-1 (or +-4 with halves for d = 1 mod 4) */
struct Pell {
    int64_t x, y, den, norm;
};

/* den = 0 when nothing turns up with y <= ymax */
Pell pell_search(int64_t d, int64_t ymax)
{
    int64_t k = d % 4 == 1 ? 4 : 1;
    for (int64_t y = 1;; ++y) {
        for (int64_t s : {-1, 1}) {
            __int128 t = static_cast<__int128>(d) * y * y + s * k;
            if (t <= 0) continue;
            int64_t x = static_cast<int64_t>(arith::isqrt(static_cast<int64_t>(t)));
            if (static_cast<__int128>(x) * x != t) continue;
            if (k == 4 && x % 2 == 0 && y % 2 == 0) return {x / 2, y / 2, 1, s};
            return {x, y, k == 4 ? 2 : 1, s};
        }
        if (y > ymax) return {0, 0, 0, 0};
    }
}

} // namespace

TEST(QuadField, MakeField)
{
    EXPECT_EQ(make_field(79).disc, 316);
    EXPECT_EQ(make_field(5).disc, 5);
    EXPECT_EQ(make_field(5).basis, BasisKind::HalfInteger);
    try {
        make_field(12);
        FAIL();
    } catch (Error const & e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonSquarefree);
    }
    try {
        make_field(1);
        FAIL();
    } catch (Error const & e) {
        EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
}

TEST(QuadField, Splitting)
{
    auto F = make_field(79);
    EXPECT_EQ(splitting_type(F, 37), SplittingType::Inert);
    EXPECT_EQ(splitting_type(F, 3), SplittingType::Split);
    EXPECT_EQ(splitting_type(F, 79), SplittingType::Ramified);
    EXPECT_EQ(splitting_type(F, 2), SplittingType::Ramified);
    try {
        splitting_type(F, 9);
        FAIL();
    } catch (Error const & e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
    }
}

TEST(QuadField, UnitExamples)
{
    auto e79 = fundamental_unit(make_field(79));
    EXPECT_EQ(e79.value, QuadInteger(79, 80, 9));
    EXPECT_EQ(e79.unit_norm, 1);
    auto e10 = fundamental_unit(make_field(10));
    EXPECT_EQ(e10.value, QuadInteger(10, 3, 1));
    EXPECT_EQ(e10.unit_norm, -1);
    auto e2 = fundamental_unit(make_field(2));
    EXPECT_EQ(e2.value, QuadInteger(2, 1, 1));
    EXPECT_EQ(e2.unit_norm, -1);
    auto e5 = fundamental_unit(make_field(5));
    EXPECT_EQ(e5.value, QuadInteger(5, 1, 1, 2));
}

TEST(QuadField, UnitMatchesPellBruteForceUpTo500)
{
    for (int64_t d = 2; d <= 500; ++d) {
        if (!arith::is_squarefree(d)) continue;
        auto F = make_field(d);
        auto u = fundamental_unit(F);
        int64_t const ymax = 3000000;
        auto p = pell_search(d, ymax);
        if (p.den == 0) {
            /* the search came up empty, so the true unit is beyond ymax */
            EXPECT_GT(u.value.basis_coords().second, ymax / 2) << d;
            EXPECT_TRUE(u.value.is_unit());
            continue;
        }
        EXPECT_EQ(u.value, QuadInteger(d, p.x, p.y, static_cast<int>(p.den))) << d;
        EXPECT_EQ(u.unit_norm, p.norm) << d;
        /* eps * conj(eps) = Norm(eps), exactly */
        EXPECT_EQ(u.value * u.value.conjugate(), QuadInteger::from_int(F, u.unit_norm)) << d;
        EXPECT_TRUE(u.value.greater_than_one());
    }
}

TEST(QuadField, ReductionExamples)
{
    auto F = make_field(79);
    auto eps = fundamental_unit(F).value;
    auto r37 = reduce_mod_prime(F, eps, 37);
    EXPECT_EQ(r37.c0(), 6);
    EXPECT_EQ(r37.c1(), 9);
    EXPECT_TRUE(r37.inert());
    auto r7 = reduce_mod_prime(F, eps, 7, 3);
    EXPECT_EQ(r7.c0(), 2);
    EXPECT_EQ(r7.c1(), 0);
    EXPECT_TRUE(reduce_mod_prime(F, QuadInteger::from_int(F, 1), 37).is_one());
    try {
        reduce_mod_prime(F, eps, 79);
        FAIL();
    } catch (Error const & e) {
        EXPECT_EQ(e.kind(), ErrorKind::RamifiedPrime);
    }
    try {
        reduce_mod_prime(F, eps, 2);
        FAIL();
    } catch (Error const & e) {
        EXPECT_EQ(e.kind(), ErrorKind::EvenPrime);
    }
}

TEST(QuadField, ReductionIsMultiplicative)
{
    std::mt19937_64 rng(1);
    for (int64_t d : {5, 13, 79, 229, 10}) {
        auto F = make_field(d);
        for (int64_t q : arith::primes_up_to(60)) {
            if (q == 2 || F.disc % q == 0) continue;
            std::vector<std::optional<int64_t>> roots{std::nullopt};
            if (splitting_type(F, q) == SplittingType::Split) {
                auto [r1, r2] = roots_of_d(F, q);
                roots = {r1, r2};
            }
            for (auto root : roots)
                for (int t = 0; t < 20; ++t) {
                    auto x = QuadInteger::from_basis(F, static_cast<int64_t>(rng() % 201) - 100,
                                                     static_cast<int64_t>(rng() % 201) - 100);
                    auto y = QuadInteger::from_basis(F, static_cast<int64_t>(rng() % 201) - 100,
                                                     static_cast<int64_t>(rng() % 201) - 100);
                    EXPECT_EQ(reduce_mod_prime(F, x * y, q, root),
                              reduce_mod_prime(F, x, q, root) * reduce_mod_prime(F, y, q, root));
                }
        }
    }
}

TEST(QuadField, SplittingDensities)
{
    auto F = make_field(79);
    int split = 0, inert = 0, ram = 0;
    for (int64_t ell : arith::primes_up_to(10000)) {
        switch (splitting_type(F, ell)) {
        case SplittingType::Split: ++split; break;
        case SplittingType::Inert: ++inert; break;
        case SplittingType::Ramified: ++ram; break;
        }
    }
    double total = split + inert + ram;
    EXPECT_NEAR(split / total, 0.5, 0.05);
    EXPECT_NEAR(inert / total, 0.5, 0.05);
    EXPECT_EQ(ram, 2);
}

TEST(QuadField, ArithmeticBasics)
{
    auto F = make_field(13);
    auto w = QuadInteger::from_basis(F, 0, 1); /* (1 + sqrt 13)/2 */
    EXPECT_EQ(w * w, w + QuadInteger::from_int(F, 3));
    EXPECT_EQ(w.norm(), -3);
    EXPECT_EQ(w.trace(), 1);
    EXPECT_EQ((w * w).exact_div(w), w);
    EXPECT_THROW(QuadInteger::from_int(F, 1).exact_div(QuadInteger::from_int(F, 2)), std::domain_error);
    auto [x, y] = (w * w).basis_coords();
    EXPECT_EQ(x, 3);
    EXPECT_EQ(y, 1);
}
