#ifndef NORMLAB_ORACLE_HPP
#define NORMLAB_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "normlab/arith.hpp"

/*
 * Slow reference computations that share no code with the form-composition
 * and PQa unit paths. Used to cross-check them.
 */
namespace normlab::oracle {

/*
 * Wide class number of the real quadratic order of discriminant D by
 * enumerating primitive ideals [a, (b + sqrt D)/2] with a <= sqrt(D)/2 and
 * grouping them by the purely periodic part of the continued fraction of
 * (b + sqrt D)/(2a): two such numbers are GL2(Z)-equivalent exactly when
 * their periods agree up to rotation.
 */
int64_t minkowski_class_number(int64_t disc);

/* Period of the continued fraction of (P + sqrt D)/Q, rotated to its
 * lexicographic minimum. Requires Q | D - P^2 and D not a square. */
std::vector<int64_t> canonical_period(int64_t P, int64_t Q, int64_t D);

struct PellSolution {
    BigInt x, y; /* unit (x + y sqrt d)/den */
    int den = 1;
    int norm = 1;
};

/* Smallest unit > 1 of O_N by trying y = 1, 2, ... up to ymax. */
std::optional<PellSolution> pell_bruteforce(int64_t d, int64_t ymax);

} // namespace normlab::oracle

#endif /* NORMLAB_ORACLE_HPP */
