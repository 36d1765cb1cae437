#ifndef NORMLAB_ARITH_HPP
#define NORMLAB_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace normlab {

using BigInt = boost::multiprecision::cpp_int;

std::string to_string(BigInt const & x);

/* Elementary number theory on machine integers. Moduli are assumed to be
 * below 2^32 so that products fit in 64 bits; callers in this project never
 * go past a few million. */
namespace arith {

int64_t gcd(int64_t a, int64_t b);
int64_t lcm(int64_t a, int64_t b);

struct ExtGcd {
    int64_t g, x, y; /* a*x + b*y = g, g >= 0 */
};
ExtGcd ext_gcd(int64_t a, int64_t b);

/* Nonnegative residue of a mod m (m > 0). */
int64_t mod(int64_t a, int64_t m);
int64_t mod(BigInt const & a, int64_t m);

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);
/* Inverse of a mod m; throws std::domain_error when gcd(a, m) != 1. */
int64_t inv_mod(int64_t a, int64_t m);

bool is_prime(uint64_t n);
/* All primes <= limit, ascending. */
std::vector<int64_t> primes_up_to(int64_t limit);

/* Prime factorization as (prime, exponent) pairs, ascending primes. */
std::vector<std::pair<int64_t, int>> factor(int64_t n);
bool is_squarefree(int64_t n);

int64_t isqrt(int64_t n);
bool is_square(int64_t n);

/* Kronecker symbol (a | n) for n >= 1. */
int kronecker(int64_t a, int64_t n);

/* Square root of a mod an odd prime p, if a is a residue. */
std::optional<int64_t> sqrt_mod(int64_t a, int64_t p);

int64_t primitive_root(int64_t p);
/* Multiplicative order of a mod m, a coprime to m. */
int64_t mult_order(int64_t a, int64_t m);

/* Largest power of p dividing n (n > 0). */
int64_t p_part(int64_t n, int64_t p);
/* Exact integer power, no overflow check. */
int64_t ipow(int64_t base, int exp);

} // namespace arith
} // namespace normlab

#endif /* NORMLAB_ARITH_HPP */
