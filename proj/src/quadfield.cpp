#include "normlab/quadfield.hpp"
#include "normlab/error.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace normlab::quadfield {

QuadraticField make_field(int64_t d)
{
    if (d <= 1) throw Error(ErrorKind::OutOfRange, "d = " + std::to_string(d) + " must exceed 1");
    if (!arith::is_squarefree(d))
        throw Error(ErrorKind::NonSquarefree, "d = " + std::to_string(d));
    QuadraticField F;
    F.d = d;
    if (d % 4 == 1) {
        F.disc = d;
        F.basis = BasisKind::HalfInteger;
    } else {
        F.disc = 4 * d;
        F.basis = BasisKind::RootD;
    }
    return F;
}

/* ---- QuadInteger ---- */

QuadInteger::QuadInteger(int64_t d, BigInt a, BigInt b, int den)
    : a_(std::move(a)), b_(std::move(b)), den_(den), d_(d)
{
    normalize();
}

void QuadInteger::normalize()
{
    while (den_ > 1 && (a_ & 1) == 0 && (b_ & 1) == 0) {
        a_ >>= 1;
        b_ >>= 1;
        den_ >>= 1;
    }
    if (den_ == 1) return;
    if (den_ != 2 || ((d_ % 4) + 4) % 4 != 1 || ((a_ - b_) & 1) != 0)
        throw std::domain_error("QuadInteger: not an algebraic integer");
}

QuadInteger QuadInteger::from_int(QuadraticField const & F, BigInt v)
{
    return QuadInteger(F.d, std::move(v), 0, 1);
}

QuadInteger QuadInteger::from_basis(QuadraticField const & F, BigInt const & x,
                                    BigInt const & y)
{
    if (F.basis == BasisKind::RootD) return QuadInteger(F.d, x, y, 1);
    return QuadInteger(F.d, 2 * x + y, y, 2);
}

std::pair<BigInt, BigInt> QuadInteger::basis_coords() const
{
    if (d_ % 4 != 1) return {a_, b_};
    BigInt A = den_ == 2 ? a_ : 2 * a_;
    BigInt B = den_ == 2 ? b_ : 2 * b_;
    return {(A - B) / 2, B};
}

BigInt QuadInteger::height() const
{
    auto [x, y] = basis_coords();
    BigInt ax = abs(x), ay = abs(y);
    return ax > ay ? ax : ay;
}

QuadInteger QuadInteger::conjugate() const
{
    return QuadInteger(d_, a_, -b_, den_);
}

BigInt QuadInteger::norm() const
{
    return (a_ * a_ - d_ * b_ * b_) / (den_ * den_);
}

BigInt QuadInteger::trace() const
{
    return 2 * a_ / den_;
}

bool QuadInteger::is_unit() const
{
    BigInt n = norm();
    return n == 1 || n == -1;
}

int QuadInteger::sign() const
{
    int sa = a_.sign(), sb = b_.sign();
    if (sa >= 0 && sb >= 0) return (sa || sb) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    BigInt lhs = a_ * a_, rhs = d_ * b_ * b_;
    int cmp = lhs > rhs ? 1 : -1; /* never equal: d is not a square */
    return sa > 0 ? cmp : -cmp;
}

bool QuadInteger::greater_than_one() const
{
    return QuadInteger(d_, a_ - den_, b_, 1).sign() > 0;
}

QuadInteger QuadInteger::operator-() const
{
    return QuadInteger(d_, -a_, -b_, den_);
}

QuadInteger & QuadInteger::operator+=(QuadInteger const & o)
{
    if (d_ == 0) d_ = o.d_;
    if (den_ == o.den_) {
        a_ += o.a_;
        b_ += o.b_;
    } else if (den_ == 1) {
        a_ = 2 * a_ + o.a_;
        b_ = 2 * b_ + o.b_;
        den_ = 2;
    } else {
        a_ += 2 * o.a_;
        b_ += 2 * o.b_;
    }
    normalize();
    return *this;
}

QuadInteger & QuadInteger::operator-=(QuadInteger const & o)
{
    return *this += -o;
}

QuadInteger & QuadInteger::operator*=(QuadInteger const & o)
{
    if (d_ == 0) d_ = o.d_;
    BigInt na = a_ * o.a_ + d_ * b_ * o.b_;
    BigInt nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    den_ *= o.den_;
    normalize();
    return *this;
}

QuadInteger QuadInteger::exact_div(QuadInteger const & o) const
{
    BigInt n = o.norm();
    if (n == 0) throw std::domain_error("QuadInteger: division by zero");
    QuadInteger num = *this * o.conjugate();
    /* num / n, with num = (a + b sqrt d)/den */
    BigInt A = num.a_, B = num.b_;
    int den = num.den_;
    if (A % n != 0 || B % n != 0) {
        /* allow the half-integral case: (2A/n + 2B/n sqrt d)/(2 den) */
        if ((2 * A) % n != 0 || (2 * B) % n != 0 || den != 1)
            throw std::domain_error("QuadInteger: inexact division");
        return QuadInteger(d_, 2 * A / n, 2 * B / n, 2);
    }
    return QuadInteger(d_, A / n, B / n, den);
}

QuadInteger QuadInteger::pow(uint64_t k) const
{
    QuadInteger result(d_, 1, 0, 1);
    QuadInteger base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

std::string QuadInteger::str() const
{
    std::ostringstream os;
    bool paren = den_ != 1;
    if (paren) os << '(';
    if (b_ == 0) {
        os << a_;
    } else {
        if (a_ != 0) os << a_ << (b_ < 0 ? " - " : " + ");
        else if (b_ < 0) os << '-';
        BigInt ab = abs(b_);
        if (ab != 1) os << ab << '*';
        os << "sqrt(" << d_ << ')';
    }
    if (paren) os << ")/" << den_;
    return os.str();
}

std::ostream & operator<<(std::ostream & os, QuadInteger const & x)
{
    return os << x.str();
}

/* ---- splitting ---- */

std::string_view to_string(SplittingType t)
{
    switch (t) {
    case SplittingType::Split: return "split";
    case SplittingType::Inert: return "inert";
    case SplittingType::Ramified: return "ramified";
    }
    return "?";
}

SplittingType splitting_type(QuadraticField const & F, int64_t ell)
{
    if (ell < 2 || !arith::is_prime(static_cast<uint64_t>(ell)))
        throw Error(ErrorKind::NotPrime, std::to_string(ell));
    switch (arith::kronecker(F.disc, ell)) {
    case 1: return SplittingType::Split;
    case -1: return SplittingType::Inert;
    default: return SplittingType::Ramified;
    }
}

/* ---- fundamental unit ---- */

namespace {

/* Integer PQa expansion of (P0 + sqrt D)/Q0 with Q0 | D - P0^2. Returns the
 * partial quotients a_0, ..., a_l where l is the period length; the period
 * starts at index 1 for both expansions used here. */
std::vector<int64_t> pqa_expansion(int64_t D, int64_t P0, int64_t Q0)
{
    int64_t const s = arith::isqrt(D);
    std::vector<int64_t> quotients;
    std::map<std::pair<int64_t, int64_t>, size_t> seen;
    int64_t P = P0, Q = Q0;
    for (size_t i = 0;; ++i) {
        if (i >= 1) {
            auto [it, fresh] = seen.emplace(std::make_pair(P, Q), i);
            if (!fresh) {
                if (it->second != 1)
                    throw std::logic_error("pqa_expansion: period does not start at index 1");
                return quotients;
            }
        }
        int64_t a = (P + s) / Q; /* Q > 0 throughout for these expansions */
        quotients.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

std::vector<int64_t> unit_expansion(QuadraticField const & F)
{
    if (F.basis == BasisKind::HalfInteger) return pqa_expansion(F.d, 1, 2);
    return pqa_expansion(F.d, 0, 1);
}

} // namespace

std::vector<int64_t> unit_cf_period(QuadraticField const & F)
{
    auto q = unit_expansion(F);
    return {q.begin() + 1, q.end()};
}

FundamentalUnit fundamental_unit(QuadraticField const & F)
{
    auto quotients = unit_expansion(F);
    size_t const l = quotients.size() - 1;
    /* convergents p_{l-1}/q_{l-1} */
    BigInt p_prev = 1, p = quotients[0];
    BigInt q_prev = 0, q = 1;
    for (size_t i = 1; i < l; ++i) {
        BigInt pn = quotients[i] * p + p_prev;
        BigInt qn = quotients[i] * q + q_prev;
        p_prev = std::move(p);
        p = std::move(pn);
        q_prev = std::move(q);
        q = std::move(qn);
    }
    /* epsilon = p - q * conj(w) */
    QuadInteger eps = F.basis == BasisKind::RootD ? QuadInteger(F.d, p, q, 1)
                                                  : QuadInteger(F.d, 2 * p - q, q, 2);
    BigInt n = eps.norm();
    if (n != 1 && n != -1) throw std::logic_error("fundamental_unit: not a unit");
    return {eps, n == 1 ? 1 : -1};
}

/* ---- residue fields ---- */

ResidueFieldElement::ResidueFieldElement(int64_t q, int64_t c0, int64_t c1, int64_t omega_sq,
                                         std::optional<int64_t> root)
    : q_(q), c0_(arith::mod(c0, q)), c1_(arith::mod(c1, q)), omega_sq_(arith::mod(omega_sq, q)),
      root_(root)
{}

ResidueFieldElement ResidueFieldElement::one() const
{
    return ResidueFieldElement(q_, 1, 0, omega_sq_, root_);
}

ResidueFieldElement ResidueFieldElement::operator*(ResidueFieldElement const & o) const
{
    if (q_ != o.q_ || root_ != o.root_ || omega_sq_ != o.omega_sq_)
        throw std::invalid_argument("residue field mismatch");
    using arith::mul_mod;
    uint64_t const q = q_;
    int64_t n0 = (mul_mod(c0_, o.c0_, q) + mul_mod(mul_mod(c1_, o.c1_, q), omega_sq_, q)) % q;
    int64_t n1 = (mul_mod(c0_, o.c1_, q) + mul_mod(c1_, o.c0_, q)) % q;
    return ResidueFieldElement(q_, n0, n1, omega_sq_, root_);
}

ResidueFieldElement ResidueFieldElement::pow(uint64_t k) const
{
    ResidueFieldElement result = one();
    ResidueFieldElement base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

int64_t ResidueFieldElement::order() const
{
    if (is_zero()) throw std::domain_error("order of zero");
    int64_t n = group_order();
    int64_t ord = n;
    for (auto const & [r, e] : arith::factor(n)) {
        for (int i = 0; i < e; ++i) {
            if (pow(ord / r).is_one()) ord /= r;
            else break;
        }
    }
    return ord;
}

std::string ResidueFieldElement::str() const
{
    if (!inert()) return std::to_string(c0_);
    return std::to_string(c0_) + " + " + std::to_string(c1_) + "*w";
}

std::pair<int64_t, int64_t> roots_of_d(QuadraticField const & F, int64_t q)
{
    auto r = arith::sqrt_mod(F.d, q);
    if (!r) throw Error(ErrorKind::InertPrime, std::to_string(q) + " is inert");
    int64_t r1 = *r, r2 = arith::mod(-*r, q);
    return r1 <= r2 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

ResidueFieldElement reduce_mod_prime(QuadraticField const & F, QuadInteger const & x, int64_t q,
                                     std::optional<int64_t> which_root)
{
    if (q == 2) throw Error(ErrorKind::EvenPrime, "q = 2");
    if (q < 2 || !arith::is_prime(static_cast<uint64_t>(q)))
        throw Error(ErrorKind::NotPrime, std::to_string(q));
    if (F.d % q == 0) throw Error(ErrorKind::RamifiedPrime, std::to_string(q) + " divides d");
    int64_t const inv_den = arith::inv_mod(x.den(), q);
    int64_t const a = arith::mul_mod(arith::mod(x.a(), q), inv_den, q);
    int64_t const b = arith::mul_mod(arith::mod(x.b(), q), inv_den, q);
    if (splitting_type(F, q) == SplittingType::Inert)
        return ResidueFieldElement(q, a, b, F.d, std::nullopt);
    int64_t root = which_root ? arith::mod(*which_root, q) : roots_of_d(F, q).first;
    if (arith::mul_mod(root, root, q) != static_cast<uint64_t>(arith::mod(F.d, q)))
        throw std::invalid_argument("reduce_mod_prime: not a square root of d");
    int64_t v = (a + static_cast<int64_t>(arith::mul_mod(b, root, q))) % q;
    return ResidueFieldElement(q, v, 0, F.d, root);
}

} // namespace normlab::quadfield
