#include "normlab/normtest.hpp"
#include "normlab/error.hpp"

namespace normlab::normtest {

using quadfield::SplittingType;

std::string PrimeAbove::label() const
{
    if (!root) return "(" + std::to_string(q) + ")";
    return "(" + std::to_string(q) + ", sqrt d - " + std::to_string(*root) + ")";
}

std::vector<PrimeAbove> primes_above(quadfield::QuadraticField const & F, int64_t q)
{
    auto const type = quadfield::splitting_type(F, q);
    if (type == SplittingType::Ramified)
        throw Error(ErrorKind::RamifiedInN, std::to_string(q) + " ramifies in N");
    if (type == SplittingType::Inert) return {PrimeAbove{q, std::nullopt}};
    auto [r1, r2] = quadfield::roots_of_d(F, q);
    return {PrimeAbove{q, r1}, PrimeAbove{q, r2}};
}

LocalNormVerdict local_norm_test(quadfield::QuadraticField const & F,
                                 quadfield::QuadInteger const & u,
                                 cyclicext::CyclicExtensionDescriptor const & desc,
                                 PrimeAbove const & prime)
{
    int64_t const q = prime.q;
    if (q == 2 || q == desc.p())
        throw Error(ErrorKind::WildPrime, "q = " + std::to_string(q));
    if (F.disc % q == 0)
        throw Error(ErrorKind::RamifiedInN, std::to_string(q) + " ramifies in N");
    if (q != desc.q()) throw std::invalid_argument("local_norm_test: prime not above the conductor");
    if (!u.is_unit()) throw Error(ErrorKind::NotUnit, u.str());

    auto const type = quadfield::splitting_type(F, q);
    if ((type == SplittingType::Inert) != !prime.root.has_value())
        throw std::invalid_argument("local_norm_test: prime label does not match the splitting of q");

    LocalNormVerdict v;
    v.prime = prime;
    v.residue_degree = prime.root ? 1 : 2;
    v.reduced = quadfield::reduce_mod_prime(F, u, q, prime.root);
    v.exponent_used = (v.reduced.group_order()) / desc.degree();
    v.power_value = v.reduced.pow(static_cast<uint64_t>(v.exponent_used));
    v.is_norm = v.power_value.is_one();
    v.local_order = v.power_value.order();
    return v;
}

NormIndexReport norm_index(quadfield::QuadraticField const & F,
                           cyclicext::CyclicExtensionDescriptor const & desc)
{
    auto const eps = quadfield::fundamental_unit(F);
    NormIndexReport r;
    r.d = F.d;
    r.q = desc.q();
    r.p = desc.p();
    r.n = desc.n();
    r.unit_norm = eps.unit_norm;
    for (auto const & P : primes_above(F, desc.q())) {
        r.verdicts.push_back(local_norm_test(F, eps.value, desc, P));
        r.index = arith::lcm(r.index, r.verdicts.back().local_order);
    }
    r.ratio_p_part = arith::p_part(r.index, r.p);
    r.t = 0;
    if (eps.unit_norm == -1) r.c = 1;
    r.caveat = true;
    return r;
}

int64_t cohomological_ratio(NormIndexReport const & r)
{
    return arith::p_part(r.index, r.p);
}

std::vector<int64_t> ratio_candidates(NormIndexReport const & r)
{
    if (r.c) return {2 * r.index / *r.c};
    return {2 * r.index, r.index};
}

ClassOrderComparison verify_class_order(quadfield::QuadraticField const & F, int64_t ell,
                                        int64_t p, int64_t n, int64_t qmax)
{
    ClassOrderComparison out;
    out.d = F.d;
    out.ell = ell;
    out.p = p;
    out.n = n;
    out.qmax = qmax;
    auto const pf = formclass::prime_form(F, ell);
    out.form = pf.form;
    out.order = formclass::wide_order(pf.cls);
    out.order_p_part = arith::p_part(out.order, p);

    int64_t const m = arith::ipow(p, static_cast<int>(n));
    for (int64_t q : arith::primes_up_to(qmax)) {
        if ((q - 1) % m != 0 || q == p || F.disc % q == 0 || q == ell) continue;
        auto const desc = cyclicext::period_polynomial(q, p, n);
        auto const prop = cyclicext::properness_report(F, desc, ell);
        if (!prop.overall) continue;
        ConductorRecord rec;
        rec.q = q;
        rec.properness = prop;
        rec.index = norm_index(F, desc);
        rec.agrees = rec.index.index == out.order_p_part;
        if (!rec.agrees) out.discrepancies.push_back(q);
        out.records.push_back(std::move(rec));
    }
    if (out.records.empty())
        throw Error(ErrorKind::NoAdmissibleConductor,
                    "no proper conductor q <= " + std::to_string(qmax) + " for d = " +
                        std::to_string(F.d) + ", ell = " + std::to_string(ell));
    out.agreement = out.discrepancies.empty();
    return out;
}

std::vector<cyclicext::CyclicExtensionDescriptor> tower_conductors(int64_t p, int64_t n, int64_t qmax)
{
    int64_t const top = arith::ipow(p, static_cast<int>(2 * n));
    std::vector<cyclicext::CyclicExtensionDescriptor> out;
    for (int64_t q : arith::primes_up_to(qmax))
        if ((q - 1) % top == 0) out.push_back(cyclicext::period_polynomial(q, p, n));
    return out;
}

DivisibilityVerdict detect_p_divisibility(quadfield::QuadraticField const & F, int64_t p, int64_t qmax)
{
    return detect_p_divisibility(F, p, qmax, tower_conductors(p, 1, qmax));
}

DivisibilityVerdict detect_p_divisibility(quadfield::QuadraticField const & F, int64_t p, int64_t qmax,
                                          std::vector<cyclicext::CyclicExtensionDescriptor> const & conductors)
{
    DivisibilityVerdict v;
    v.d = F.d;
    v.p = p;
    v.qmax = qmax;
    for (auto const & desc : conductors) {
        int64_t const q = desc.q();
        if (desc.p() != p || q > qmax) continue;
        if (!cyclicext::tower_certificate(q, p, desc.n()).exists) continue;
        /* condition (c): q inert in N */
        if (F.disc % q == 0 || quadfield::splitting_type(F, q) != SplittingType::Inert) continue;
        v.tested.push_back(q);
        auto const r = norm_index(F, desc);
        if (r.index > 1) {
            v.witness = q;
            v.witness_index = r.index;
            break;
        }
    }
    return v;
}

} // namespace normlab::normtest
