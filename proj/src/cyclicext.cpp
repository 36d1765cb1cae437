#include "normlab/cyclicext.hpp"
#include "normlab/error.hpp"
#include "normlab/formclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace normlab::cyclicext {

int64_t CyclicExtensionDescriptor::coset_label(int64_t x) const
{
    x = arith::mod(x, q_);
    if (x == 0) throw std::domain_error("coset_label: multiple of q");
    return coset_[x];
}

std::vector<int64_t> CyclicExtensionDescriptor::subgroup() const
{
    std::vector<int64_t> out;
    for (int64_t x = 1; x < q_; ++x)
        if (coset_[x] == 0) out.push_back(x);
    return out;
}

CyclicExtensionDescriptor period_polynomial(int64_t q, int64_t p, int64_t n)
{
    if (q < 2 || !arith::is_prime(q)) throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q));
    if (p < 3 || !arith::is_prime(p)) throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p) + " (odd prime required)");
    if (n < 1) throw Error(ErrorKind::ConductorInvalid, "n must be positive");
    int64_t const m = arith::ipow(p, static_cast<int>(n));
    if ((q - 1) % m != 0)
        throw Error(ErrorKind::ConductorInvalid,
                    std::to_string(q) + " is not 1 mod " + std::to_string(m));

    CyclicExtensionDescriptor D;
    D.p_ = p;
    D.n_ = n;
    D.q_ = q;
    D.degree_ = m;
    D.generator_ = arith::primitive_root(q);
    D.coset_.assign(q, -1);
    int64_t x = 1;
    for (int64_t t = 0; t < q - 1; ++t) {
        D.coset_[x] = static_cast<int32_t>(t % m);
        x = x * D.generator_ % q;
    }

    /* eta_0 * eta_j by counting the exponents h1 + g^j h2 over H x H */
    auto const H = D.subgroup();
    int64_t const f = static_cast<int64_t>(H.size());
    D.eta0_row_.assign(m * m, 0);
    int64_t gj = 1;
    for (int64_t j = 0; j < m; ++j) {
        std::vector<int64_t> count(m, 0);
        int64_t zeros = 0;
        for (int64_t h1 : H) {
            for (int64_t h2 : H) {
                int64_t e = (h1 + gj * h2) % q;
                if (e == 0) ++zeros;
                else ++count[D.coset_[e]];
            }
        }
        for (int64_t k = 0; k < m; ++k) {
            if (count[k] % f != 0) throw std::logic_error("period table: uneven coset count");
            /* a zero exponent contributes 1 = -(eta_0 + ... + eta_{m-1}) */
            D.eta0_row_[j * m + k] = count[k] / f - zeros;
        }
        gj = gj * D.generator_ % q;
    }

    /* power sums of the periods, then Newton's identities */
    std::vector<BigInt> eta0(m, 0);
    eta0[0] = 1;
    std::vector<BigInt> power = eta0;
    std::vector<BigInt> S(m + 1, 0);
    for (int64_t k = 1; k <= m; ++k) {
        if (k > 1) power = D.multiply(power, eta0, BigInt(0));
        S[k] = trace(power);
    }
    std::vector<BigInt> e(m + 1, 0);
    e[0] = 1;
    for (int64_t k = 1; k <= m; ++k) {
        BigInt acc = 0;
        for (int64_t i = 1; i <= k; ++i) {
            BigInt term = e[k - i] * S[i];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        if (acc % k != 0) throw std::logic_error("Newton identities: inexact division");
        e[k] = acc / k;
    }
    D.period_poly_.assign(m + 1, 0);
    for (int64_t k = 0; k <= m; ++k) D.period_poly_[m - k] = (k % 2 ? -e[k] : e[k]);

    BigInt expected = 1;
    for (int64_t i = 0; i < m - 1; ++i) expected *= q;
    if (D.basis_discriminant() != expected)
        throw std::logic_error("period basis discriminant is not q^(p^n - 1)");

    /* [O_K : Z[eta_0]] from the coordinates of 1, eta_0, ..., eta_0^(m-1) */
    std::vector<std::vector<BigInt>> P(m, std::vector<BigInt>(m, 0));
    std::vector<BigInt> pw(m, BigInt(-1));
    for (int64_t k = 0; k < m; ++k) {
        for (int64_t i = 0; i < m; ++i) P[i][k] = pw[i];
        pw = D.multiply(pw, eta0, BigInt(0));
    }
    D.power_index_ = abs(poly::determinant(P));
    D.poly_disc_ = poly::discriminant(D.period_poly_);
    if (D.poly_disc_ != expected * D.power_index_ * D.power_index_)
        throw std::logic_error("disc(period poly) != disc(K) [O_K : Z[eta]]^2");
    return D;
}

BigInt CyclicExtensionDescriptor::basis_discriminant() const
{
    /* det Tr(eta_i eta_j); Tr(eta_k) = -1 */
    int64_t const m = degree_;
    std::vector<std::vector<BigInt>> G(m, std::vector<BigInt>(m, 0));
    for (int64_t i = 0; i < m; ++i)
        for (int64_t j = 0; j < m; ++j) {
            int64_t s = 0;
            for (int64_t k = 0; k < m; ++k) s -= structure_constant(i, j, k);
            G[i][j] = s;
        }
    return poly::determinant(G);
}

BigInt trace(std::vector<BigInt> const & x)
{
    /* Tr(eta_i) = -1 for every period */
    BigInt s = 0;
    for (auto const & c : x) s -= c;
    return s;
}

ResidueDegree splitting_in_K(CyclicExtensionDescriptor const & desc, int64_t ell)
{
    ResidueDegree r;
    if (arith::mod(ell, desc.q()) == 0) {
        r.ramified = true;
        return r;
    }
    int64_t const m = desc.degree();
    int64_t const t = desc.coset_label(ell);
    r.degree = m / arith::gcd(t, m);
    r.inert = r.degree == m;
    return r;
}

TowerCertificate tower_certificate(int64_t q, int64_t p, int64_t n)
{
    TowerCertificate t;
    int64_t const m = arith::ipow(p, static_cast<int>(n));
    int64_t const top = m * m;
    t.exists = (q - 1) % top == 0;
    if (t.exists) {
        t.k = 2 * n;
        t.top_degree = top;
        t.relative_degree = m;
        t.witness = "degree-" + std::to_string(top) + " subfield of Q(zeta_" + std::to_string(q) + ")";
    }
    return t;
}

RelativeDiscriminant relative_discriminant(CyclicExtensionDescriptor const & desc,
                                           quadfield::QuadraticField const & F)
{
    int64_t const q = desc.q();
    if (F.disc % q == 0 || q == desc.p())
        throw Error(ErrorKind::WildOrRamifiedConductor,
                    "q = " + std::to_string(q) + " for d = " + std::to_string(F.d));
    int64_t const exponent = desc.degree() - 1;
    RelativeDiscriminant out;
    auto const type = quadfield::splitting_type(F, q);
    if (type == quadfield::SplittingType::Inert) {
        out.factors.push_back({q, type, std::nullopt, 2, exponent});
    } else {
        auto [r1, r2] = quadfield::roots_of_d(F, q);
        out.factors.push_back({q, type, r1, 1, exponent});
        out.factors.push_back({q, type, r2, 1, exponent});
    }
    out.norm_exponent = 2 * exponent;
    out.norm = 1;
    for (int64_t i = 0; i < out.norm_exponent; ++i) out.norm *= q;
    return out;
}

PropernessReport properness_report(quadfield::QuadraticField const & F,
                                   CyclicExtensionDescriptor const & desc, int64_t ell)
{
    /* the class prime must exist as a prime ideal of N of degree one */
    (void)formclass::prime_form(F, ell);
    PropernessReport r;
    r.galois_over_Q = true;
    auto const sp = splitting_in_K(desc, ell);
    r.inert_class_prime = !sp.ramified && sp.inert;
    r.tower = tower_certificate(desc.q(), desc.p(), desc.n());
    auto const delta = relative_discriminant(desc, F);
    /* Norm(delta) is a power of q, so (c) asks for q itself to be inert */
    r.disc_primes_inert_in_N = std::all_of(delta.factors.begin(), delta.factors.end(), [](auto const & P) {
        return P.type_in_N == quadfield::SplittingType::Inert;
    });
    r.overall = r.galois_over_Q && r.inert_class_prime && r.tower.exists && r.disc_primes_inert_in_N;
    return r;
}

} // namespace normlab::cyclicext
