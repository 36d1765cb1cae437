#ifndef NORMLAB_POLYNOMIAL_HPP
#define NORMLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "normlab/arith.hpp"

namespace normlab::poly {

/* Integer polynomial, coefficients from the constant term upward. */
using IntPoly = std::vector<BigInt>;

IntPoly from_ints(std::vector<int64_t> const & low_to_high);
int degree(IntPoly const & f);
IntPoly derivative(IntPoly const & f);
std::string to_string(IntPoly const & f);

/* Fraction-free (Bareiss) determinant. */
BigInt determinant(std::vector<std::vector<BigInt>> m);
/* Via the Sylvester matrix. */
BigInt resultant(IntPoly const & f, IntPoly const & g);
/* (-1)^(n(n-1)/2) Res(f, f') / lc(f) */
BigInt discriminant(IntPoly const & f);

int64_t eval_mod(IntPoly const & f, int64_t x, int64_t ell);
/* Number of distinct roots of f in F_ell, by exhaustion. */
int root_count_mod(IntPoly const & f, int64_t ell);

} // namespace normlab::poly

#endif /* NORMLAB_POLYNOMIAL_HPP */
