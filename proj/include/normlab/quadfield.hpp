#ifndef NORMLAB_QUADFIELD_HPP
#define NORMLAB_QUADFIELD_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "normlab/arith.hpp"

namespace normlab::quadfield {

/* Whether (1 + sqrt d)/2 is integral, i.e. d = 1 mod 4. */
enum class BasisKind { RootD, HalfInteger };

/* Real quadratic field Q(sqrt d), d squarefree and > 1. */
struct QuadraticField {
    int64_t d = 0;
    int64_t disc = 0;
    BasisKind basis = BasisKind::RootD;

    bool operator==(QuadraticField const &) const = default;
};

QuadraticField make_field(int64_t d);

/*
 * Element (a + b sqrt d)/den of O_N, den in {1, 2}. Values are kept
 * normalized: den = 2 only if a and b are both odd.
 */
class QuadInteger
{
    BigInt a_, b_;
    int den_ = 1;
    int64_t d_ = 0;

    void normalize();

    public:
    QuadInteger() = default;
    QuadInteger(int64_t d, BigInt a, BigInt b = 0, int den = 1);

    static QuadInteger from_int(QuadraticField const & F, BigInt v);
    /* x + y * w with w = sqrt d or (1 + sqrt d)/2 depending on the basis. */
    static QuadInteger from_basis(QuadraticField const & F, BigInt const & x,
                                  BigInt const & y);

    BigInt const & a() const { return a_; }
    BigInt const & b() const { return b_; }
    int den() const { return den_; }
    int64_t d() const { return d_; }

    /* Coordinates (x, y) on the integral basis {1, w}. */
    std::pair<BigInt, BigInt> basis_coords() const;
    /* max(|x|, |y|) over basis coordinates. */
    BigInt height() const;

    QuadInteger conjugate() const;
    BigInt norm() const;
    BigInt trace() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return den_ == 1 && a_ == 1 && b_ == 0; }
    bool is_unit() const;
    /* Sign under the embedding sqrt d > 0. */
    int sign() const;
    bool greater_than_one() const;

    QuadInteger operator-() const;
    QuadInteger & operator+=(QuadInteger const & o);
    QuadInteger & operator-=(QuadInteger const & o);
    QuadInteger & operator*=(QuadInteger const & o);
    friend QuadInteger operator+(QuadInteger x, QuadInteger const & y) { return x += y; }
    friend QuadInteger operator-(QuadInteger x, QuadInteger const & y) { return x -= y; }
    friend QuadInteger operator*(QuadInteger x, QuadInteger const & y) { return x *= y; }
    friend QuadInteger operator*(QuadInteger x, int64_t k)
    {
        x.a_ *= k;
        x.b_ *= k;
        x.normalize();
        return x;
    }
    bool operator==(QuadInteger const & o) const
    {
        return a_ == o.a_ && b_ == o.b_ && den_ == o.den_;
    }
    /* Exact division; throws std::domain_error when o does not divide. */
    QuadInteger exact_div(QuadInteger const & o) const;

    QuadInteger pow(uint64_t k) const;
    std::string str() const;
};

std::ostream & operator<<(std::ostream & os, QuadInteger const & x);

struct FundamentalUnit {
    QuadInteger value;
    int unit_norm = 1;
};

enum class SplittingType { Split, Inert, Ramified };
std::string_view to_string(SplittingType t);

SplittingType splitting_type(QuadraticField const & F, int64_t ell);

/* Smallest unit > 1, from the integer continued-fraction expansion of
 * sqrt d, or of (1 + sqrt d)/2 when d = 1 mod 4. */
FundamentalUnit fundamental_unit(QuadraticField const & F);

/* Partial quotients of one period of the expansion used above. */
std::vector<int64_t> unit_cf_period(QuadraticField const & F);

/*
 * Image of an element of O_N in the residue field of a prime above an odd
 * unramified q. For inert q the field is F_q[w]/(w^2 - d); for split q it
 * is F_q with sqrt d sent to `root` (one of the two square roots).
 */
class ResidueFieldElement
{
    int64_t q_ = 0;
    int64_t c0_ = 0, c1_ = 0;
    int64_t omega_sq_ = 0; /* d mod q; used only when inert */
    std::optional<int64_t> root_;

    public:
    ResidueFieldElement() = default;
    ResidueFieldElement(int64_t q, int64_t c0, int64_t c1, int64_t omega_sq,
                        std::optional<int64_t> root);

    int64_t q() const { return q_; }
    int64_t c0() const { return c0_; }
    int64_t c1() const { return c1_; }
    bool inert() const { return !root_.has_value(); }
    std::optional<int64_t> root() const { return root_; }
    /* Order of the multiplicative group of the residue field. */
    int64_t group_order() const { return inert() ? q_ * q_ - 1 : q_ - 1; }

    bool is_one() const { return c0_ == 1 % q_ && c1_ == 0; }
    bool is_zero() const { return c0_ == 0 && c1_ == 0; }
    ResidueFieldElement one() const;
    ResidueFieldElement operator*(ResidueFieldElement const & o) const;
    ResidueFieldElement pow(uint64_t k) const;
    /* Multiplicative order; element must be nonzero. */
    int64_t order() const;
    bool operator==(ResidueFieldElement const & o) const
    {
        return q_ == o.q_ && c0_ == o.c0_ && c1_ == o.c1_;
    }
    std::string str() const;
};

/* Square roots of d mod q, smaller first (q split in N). */
std::pair<int64_t, int64_t> roots_of_d(QuadraticField const & F, int64_t q);

ResidueFieldElement reduce_mod_prime(QuadraticField const & F, QuadInteger const & x,
                                     int64_t q,
                                     std::optional<int64_t> which_root = std::nullopt);

} // namespace normlab::quadfield

#endif /* NORMLAB_QUADFIELD_HPP */
