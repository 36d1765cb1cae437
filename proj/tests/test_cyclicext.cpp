#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "normlab/cyclicext.hpp"
#include "normlab/error.hpp"

using namespace normlab;
using namespace normlab::cyclicext;

namespace {

/* eta_i as real numbers: sum over x in g^i H of cos(2 pi x / q) */
std::vector<double> numeric_periods(CyclicExtensionDescriptor const & D)
{
    std::vector<double> eta(D.degree(), 0.0);
    for (int64_t x = 1; x < D.q(); ++x)
        eta[D.coset_label(x)] += std::cos(2 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(D.q()));
    return eta;
}

/* the same labels, computed without the descriptor */
int64_t label_by_log(int64_t x, int64_t g, int64_t q, int64_t m)
{
    int64_t y = 1;
    for (int64_t t = 0; t < q - 1; ++t) {
        if (y == x) return t % m;
        y = y * g % q;
    }
    return -1;
}

double eval(poly::IntPoly const & f, double x)
{
    double acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i].convert_to<double>();
    return acc;
}

BigInt qpow(int64_t q, int64_t e)
{
    BigInt r = 1;
    for (int64_t i = 0; i < e; ++i) r *= q;
    return r;
}

} // namespace

TEST(CyclicExt, Examples)
{
    EXPECT_EQ(poly::to_string(period_polynomial(7, 3, 1).period_poly()), poly::to_string(poly::from_ints({-1, -2, 1, 1})));
    EXPECT_EQ(period_polynomial(37, 3, 1).period_poly(), poly::from_ints({11, -12, 1, 1}));
    EXPECT_EQ(period_polynomial(13, 3, 1).period_poly(), poly::from_ints({1, -4, 1, 1}));
    EXPECT_EQ(period_polynomial(37, 3, 1).poly_disc(), 1369);
    EXPECT_EQ(poly::degree(period_polynomial(19, 3, 2).period_poly()), 9);
    EXPECT_EQ(period_polynomial(11, 5, 1).period_poly(), poly::from_ints({1, 3, -3, -4, 1, 1}));
}

TEST(CyclicExt, Errors)
{
    auto kind = [](auto f) {
        try {
            f();
        } catch (Error const & e) {
            return e.kind();
        }
        return ErrorKind::OutOfRange;
    };
    EXPECT_EQ(kind([] { period_polynomial(11, 3, 1); }), ErrorKind::ConductorInvalid);
    EXPECT_EQ(kind([] { period_polynomial(15, 3, 1); }), ErrorKind::NotPrime);
    EXPECT_EQ(kind([] { period_polynomial(7, 4, 1); }), ErrorKind::NotPrime);
    auto D = period_polynomial(37, 3, 1);
    EXPECT_EQ(kind([&] { relative_discriminant(D, quadfield::make_field(37)); }), ErrorKind::WildOrRamifiedConductor);
}

TEST(CyclicExt, StructureConstantsMatchCyclotomicExpansion)
{
    for (auto [q, p, n] : std::vector<std::array<int64_t, 3>>{{7, 3, 1}, {13, 3, 1}, {31, 5, 1}, {37, 3, 1}, {19, 3, 2}, {61, 5, 1}}) {
        auto D = period_polynomial(q, p, n);
        int64_t m = D.degree();
        auto eta = numeric_periods(D);
        double sum = 0;
        for (double e : eta) sum += e;
        EXPECT_NEAR(sum, -1.0, 1e-9);
        for (int64_t x = 1; x < q; ++x) EXPECT_EQ(D.coset_label(x), label_by_log(x, D.generator(), q, m));
        for (int64_t i = 0; i < m; ++i)
            for (int64_t j = 0; j < m; ++j) {
                double rhs = 0;
                for (int64_t k = 0; k < m; ++k) rhs += static_cast<double>(D.structure_constant(i, j, k)) * eta[k];
                EXPECT_NEAR(eta[i] * eta[j], rhs, 1e-8) << q << " " << i << " " << j;
            }
        /* the period polynomial vanishes at every period */
        for (double e : eta) EXPECT_NEAR(eval(D.period_poly(), e), 0.0, 1e-6);
    }
}

TEST(CyclicExt, DiscriminantIdentities)
{
    for (int64_t p : {3, 5})
        for (int64_t n : {1, 2}) {
            int64_t m = arith::ipow(p, static_cast<int>(n));
            for (int64_t q : arith::primes_up_to(n == 1 ? 400 : 1000)) {
                if ((q - 1) % m != 0) continue;
                auto D = period_polynomial(q, p, n);
                BigInt expect = qpow(q, m - 1);
                EXPECT_EQ(D.basis_discriminant(), expect) << q;
                EXPECT_EQ(D.poly_disc(), expect * D.power_index() * D.power_index()) << q;
                EXPECT_GE(D.power_index(), 1);
            }
        }
}

TEST(CyclicExt, TraceAndGalois)
{
    auto D = period_polynomial(31, 5, 1);
    std::vector<BigInt> one(5, BigInt(-1));
    EXPECT_EQ(trace(one), 5);
    std::vector<BigInt> x{3, -1, 4, 1, -5}, y{2, 7, -1, 8, 2};
    auto xy = D.multiply(x, y, BigInt(0));
    /* sigma is a ring automorphism */
    for (int64_t s = 0; s < 5; ++s)
        EXPECT_EQ(D.galois_shift(xy, s), D.multiply(D.galois_shift(x, s), D.galois_shift(y, s), BigInt(0)));
    /* 1 is the multiplicative identity */
    EXPECT_EQ(D.multiply(x, one, BigInt(0)), x);
}

TEST(CyclicExt, InertDensity)
{
    for (auto [q, p] : std::vector<std::pair<int64_t, int64_t>>{{7, 3}, {37, 3}, {11, 5}}) {
        auto D = period_polynomial(q, p, 1);
        int inert = 0, total = 0;
        for (int64_t ell : arith::primes_up_to(20000)) {
            if (ell == q) continue;
            auto r = splitting_in_K(D, ell);
            ++total;
            if (r.inert) ++inert;
            /* residue degree agrees with the root count of the period polynomial */
            if (ell < 500 && ell != p && D.poly_disc() % ell != 0) {
                EXPECT_EQ(poly::root_count_mod(D.period_poly(), ell), r.degree == 1 ? D.degree() : 0) << ell;
            }
        }
        EXPECT_NEAR(static_cast<double>(inert) / total, static_cast<double>(p - 1) / p, 0.05);
    }
}

TEST(CyclicExt, PropernessFor79)
{
    auto F = quadfield::make_field(79);
    auto D = period_polynomial(7, 3, 1);
    auto r = properness_report(F, D, 3);
    EXPECT_TRUE(r.inert_class_prime);
    EXPECT_FALSE(r.tower.exists);
    EXPECT_FALSE(r.disc_primes_inert_in_N); /* 7 splits in Q(sqrt 79) */
    auto D37 = period_polynomial(37, 3, 1);
    auto r37 = properness_report(F, D37, 3);
    EXPECT_TRUE(r37.disc_primes_inert_in_N);
    EXPECT_EQ(relative_discriminant(D37, F).norm, qpow(37, 4));
}
