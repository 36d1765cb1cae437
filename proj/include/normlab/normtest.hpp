#ifndef NORMLAB_NORMTEST_HPP
#define NORMLAB_NORMTEST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normlab/cyclicext.hpp"
#include "normlab/formclass.hpp"
#include "normlab/quadfield.hpp"

namespace normlab::normtest {

/* Prime of N above q: for split q, the square root of d it sends sqrt d to. */
struct PrimeAbove {
    int64_t q = 0;
    std::optional<int64_t> root;

    std::string label() const;
};

struct LocalNormVerdict {
    PrimeAbove prime;
    int64_t residue_degree = 0;
    int64_t exponent_used = 0; /* (q^f - 1) / p^n */
    quadfield::ResidueFieldElement reduced;
    quadfield::ResidueFieldElement power_value;
    bool is_norm = false;
    int64_t local_order = 1; /* order of u in (residue group) / (p^n-th powers) */
};

/*
 * Tame local norm test at a prime of N above q for the cyclic extension of
 * degree p^n cut out by desc. Throws WildPrime, RamifiedInN, NotUnit.
 */
LocalNormVerdict local_norm_test(quadfield::QuadraticField const & F,
                                 quadfield::QuadInteger const & u,
                                 cyclicext::CyclicExtensionDescriptor const & desc,
                                 PrimeAbove const & prime);

/* All primes of N above q: one if q is inert, two (smaller root first) if split. */
std::vector<PrimeAbove> primes_above(quadfield::QuadraticField const & F, int64_t q);

struct NormIndexReport {
    int64_t d = 0, q = 0, p = 0, n = 0;
    int unit_norm = 1;
    std::vector<LocalNormVerdict> verdicts;
    int64_t index = 1;         /* lcm of local orders */
    int64_t ratio_p_part = 1;  /* p-part of the H^1 ratio */
    int t = 0;                 /* ramified real places of N in M */
    std::optional<int> c;      /* [Z^x : Norm(O_M^x)]; set only when Norm(eps) = -1 */
    bool caveat = true;        /* index is for norms of field elements, not of units */
};

NormIndexReport norm_index(quadfield::QuadraticField const & F,
                           cyclicext::CyclicExtensionDescriptor const & desc);

/* p-part of |H^1(M/N)| / |H^1(M/Q)|. */
int64_t cohomological_ratio(NormIndexReport const & r);

/* (2/c) * index for each admissible value of c; a single value when c is known. */
std::vector<int64_t> ratio_candidates(NormIndexReport const & r);

struct ConductorRecord {
    int64_t q = 0;
    cyclicext::PropernessReport properness;
    NormIndexReport index;
    bool agrees = false;
};

struct ClassOrderComparison {
    int64_t d = 0, ell = 0, p = 0, n = 0, qmax = 0;
    formclass::BinaryQuadraticForm form;
    int64_t order = 0;        /* wide order of the class above ell */
    int64_t order_p_part = 0;
    std::vector<ConductorRecord> records; /* proper conductors, increasing q */
    std::vector<int64_t> discrepancies;   /* q with index != p-part of the order */
    bool agreement = false;
};

/* Throws NoAdmissibleConductor when no proper q <= qmax exists. */
ClassOrderComparison verify_class_order(quadfield::QuadraticField const & F, int64_t ell,
                                        int64_t p, int64_t n, int64_t qmax);

struct DivisibilityVerdict {
    int64_t d = 0, p = 0, qmax = 0;
    std::vector<int64_t> tested;     /* conductors passing (c) and the tower, increasing */
    std::optional<int64_t> witness;  /* first q with index > 1 */
    int64_t witness_index = 1;
};

/* Conductor descriptors for q <= qmax, q = 1 mod p^(2n), increasing. Sharing
 * them avoids recomputing period tables across many fields. */
std::vector<cyclicext::CyclicExtensionDescriptor> tower_conductors(int64_t p, int64_t n, int64_t qmax);

DivisibilityVerdict detect_p_divisibility(quadfield::QuadraticField const & F, int64_t p, int64_t qmax);
DivisibilityVerdict detect_p_divisibility(quadfield::QuadraticField const & F, int64_t p, int64_t qmax,
                                          std::vector<cyclicext::CyclicExtensionDescriptor> const & conductors);

} // namespace normlab::normtest

#endif /* NORMLAB_NORMTEST_HPP */
