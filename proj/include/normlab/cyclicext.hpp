#ifndef NORMLAB_CYCLICEXT_HPP
#define NORMLAB_CYCLICEXT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normlab/polynomial.hpp"
#include "normlab/quadfield.hpp"

namespace normlab::cyclicext {

/*
 * The cyclic field K of degree p^n and prime conductor q, spanned by the
 * Gaussian periods eta_i = sum_{h in H} zeta^(g^i h) where H is the index
 * p^n subgroup of (Z/q)^x and g a primitive root. The periods form an
 * integral basis of O_K; the generator of Gal(K/Q) is eta_i -> eta_{i+1}.
 */
class CyclicExtensionDescriptor
{
    int64_t p_ = 0, n_ = 0, q_ = 0, degree_ = 0;
    int64_t generator_ = 0;
    std::vector<int32_t> coset_; /* coset_[x] = i with x in g^i H; -1 at 0 */
    std::vector<int64_t> eta0_row_; /* eta_0 * eta_j = sum_k eta0_row_[j*m + k] eta_k */
    poly::IntPoly period_poly_;
    BigInt poly_disc_, power_index_;

    friend CyclicExtensionDescriptor period_polynomial(int64_t q, int64_t p, int64_t n);

    public:
    int64_t p() const { return p_; }
    int64_t n() const { return n_; }
    int64_t q() const { return q_; }
    int64_t degree() const { return degree_; }
    int64_t subgroup_order() const { return (q_ - 1) / degree_; }
    int64_t generator() const { return generator_; }
    poly::IntPoly const & period_poly() const { return period_poly_; }
    /* disc of the minimal polynomial of eta_0; equals q^(m-1) only when
     * Z[eta_0] is all of O_K */
    BigInt const & poly_disc() const { return poly_disc_; }
    BigInt const & power_index() const { return power_index_; }
    /* det(Tr(eta_i eta_j)) = disc(K) = q^(m-1) */
    BigInt basis_discriminant() const;

    /* Index i of the coset g^i H containing x (x not divisible by q). */
    int64_t coset_label(int64_t x) const;
    /* Elements of the subgroup H, ascending. */
    std::vector<int64_t> subgroup() const;

    /* Coefficient of eta_k in eta_i * eta_j. */
    int64_t structure_constant(int64_t i, int64_t j, int64_t k) const
    {
        int64_t const m = degree_;
        int64_t jj = ((j - i) % m + m) % m, kk = ((k - i) % m + m) % m;
        return eta0_row_[jj * m + kk];
    }

    /* Product of two elements given on the period basis, over any ring R
     * with R * R, R * int64_t and R += R. */
    template <class R>
    std::vector<R> multiply(std::vector<R> const & x, std::vector<R> const & y, R const & zero) const
    {
        int64_t const m = degree_;
        std::vector<R> out(m, zero);
        for (int64_t i = 0; i < m; ++i) {
            if (x[i] == zero) continue;
            for (int64_t j = 0; j < m; ++j) {
                if (y[j] == zero) continue;
                R xy = x[i] * y[j];
                for (int64_t k = 0; k < m; ++k) {
                    int64_t t = structure_constant(i, j, k);
                    if (t != 0) out[k] += xy * t;
                }
            }
        }
        return out;
    }

    /* sigma^s on period coordinates: eta_i -> eta_{i+s}. */
    template <class R>
    std::vector<R> galois_shift(std::vector<R> const & x, int64_t s) const
    {
        int64_t const m = degree_;
        std::vector<R> out(x.size());
        for (int64_t i = 0; i < m; ++i) out[((i + s) % m + m) % m] = x[i];
        return out;
    }
};

/* Throws NotPrime / ConductorInvalid. The basis discriminant is checked
 * against q^(p^n - 1) before returning. */
CyclicExtensionDescriptor period_polynomial(int64_t q, int64_t p, int64_t n);

/* Trace to Q of an element of O_K on the period basis. */
BigInt trace(std::vector<BigInt> const & x);

struct ResidueDegree {
    bool ramified = false;
    int64_t degree = 0; /* residue degree f of ell in K; 0 when ramified */
    bool inert = false;
};

ResidueDegree splitting_in_K(CyclicExtensionDescriptor const & desc, int64_t ell);

struct TowerCertificate {
    bool exists = false;
    int64_t k = 0;          /* L has degree p^k over Q */
    int64_t top_degree = 0; /* p^k */
    int64_t relative_degree = 0; /* [L:M] */
    std::string witness;
};

TowerCertificate tower_certificate(int64_t q, int64_t p, int64_t n);

struct PrimeIdealPower {
    int64_t q = 0;
    quadfield::SplittingType type_in_N = quadfield::SplittingType::Inert;
    std::optional<int64_t> root; /* sqrt d mod q selecting the prime when q splits */
    int64_t residue_degree_in_N = 0;
    int64_t exponent = 0;
};

struct RelativeDiscriminant {
    std::vector<PrimeIdealPower> factors;
    int64_t norm_exponent = 0; /* Norm_{N/Q}(delta) = q^norm_exponent */
    BigInt norm;
};

/* delta(M/N) = (q O_N)^(p^n - 1). Throws WildOrRamifiedConductor. */
RelativeDiscriminant relative_discriminant(CyclicExtensionDescriptor const & desc,
                                           quadfield::QuadraticField const & F);

struct PropernessReport {
    bool galois_over_Q = true;
    bool inert_class_prime = false;
    TowerCertificate tower;
    bool disc_primes_inert_in_N = false;
    bool overall = false;
};

/* Conditions (a), (b), (c) for M = NK relative to the prime of N above ell. */
PropernessReport properness_report(quadfield::QuadraticField const & F,
                                   CyclicExtensionDescriptor const & desc, int64_t ell);

} // namespace normlab::cyclicext

#endif /* NORMLAB_CYCLICEXT_HPP */
