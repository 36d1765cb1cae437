#ifndef NORMLAB_COMPOSE_HPP
#define NORMLAB_COMPOSE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normlab/cyclicext.hpp"
#include "normlab/formclass.hpp"
#include "normlab/quadfield.hpp"

namespace normlab::compose {

using quadfield::QuadInteger;

/* sum coords[i] * eta_i with coords in O_N. */
struct RelativeElement {
    std::vector<QuadInteger> coords;

    bool operator==(RelativeElement const &) const = default;
    std::string str() const;
};

/* O_M = O_N (x) Z[eta] needs gcd(disc K, disc N) = 1, i.e. q does not divide
 * disc N. Throws WildOrRamifiedConductor otherwise. */
void check_product_basis(cyclicext::CyclicExtensionDescriptor const & desc,
                         quadfield::QuadraticField const & F);

RelativeElement scalar(cyclicext::CyclicExtensionDescriptor const & desc, QuadInteger const & u);
RelativeElement period(cyclicext::CyclicExtensionDescriptor const & desc,
                       quadfield::QuadraticField const & F, int64_t i);
/* Value as an element of O_N when it lies there. */
std::optional<QuadInteger> as_scalar(RelativeElement const & x);

RelativeElement multiply(cyclicext::CyclicExtensionDescriptor const & desc,
                         quadfield::QuadraticField const & F,
                         RelativeElement const & x, RelativeElement const & y);
RelativeElement galois_apply(cyclicext::CyclicExtensionDescriptor const & desc, int64_t i,
                             RelativeElement const & x);

/* Product of the p^n conjugates; lies in O_N. */
QuadInteger relative_norm(cyclicext::CyclicExtensionDescriptor const & desc,
                          quadfield::QuadraticField const & F, RelativeElement const & x);
/* Tr_{M/N}; Tr(eta_i) = -1. */
QuadInteger relative_trace(quadfield::QuadraticField const & F, RelativeElement const & x);

/* Monic characteristic polynomial over O_N, constant term first. */
struct RelativeCharPoly {
    std::vector<QuadInteger> coeffs;

    std::string str() const;
};

RelativeCharPoly charpoly_over_N(cyclicext::CyclicExtensionDescriptor const & desc,
                                 quadfield::QuadraticField const & F, RelativeElement const & x);

struct NormSearchResult {
    int64_t bound = 0;
    uint64_t examined = 0;
    std::optional<RelativeElement> witness;
};

/*
 * Lexicographic scan of all elements whose O_N coordinates have basis
 * coordinates in [-B, B], first index most significant. The first element
 * of norm `target` wins. With workers > 1 the range of the first coordinate
 * is split into chunks and the smallest hit is kept.
 */
NormSearchResult search_norm_element(cyclicext::CyclicExtensionDescriptor const & desc,
                                     quadfield::QuadraticField const & F,
                                     QuadInteger const & target, int64_t bound,
                                     unsigned workers = 1);

struct FamilyFPolynomial {
    std::vector<QuadInteger> coeffs; /* charpoly with the constant term removed */
    QuadInteger certified_constant;  /* eps^(p^n) */
    formclass::FormClass cls;
    int64_t q = 0, p = 0, n = 0;
    RelativeElement alpha;
    bool alpha_is_unit = false;

    std::string str() const;
};

/* Throws WrongNorm unless Norm(alpha) = -eps^(p^n). */
FamilyFPolynomial family_polynomial(cyclicext::CyclicExtensionDescriptor const & desc,
                                    quadfield::QuadraticField const & F,
                                    RelativeElement const & alpha,
                                    formclass::FormClass const & cls);

struct CompositionReport {
    int64_t degree = 0;
    int64_t order_P = 0, order_Q = 0, order_product = 0;
    formclass::FormClass product;
    bool constant_identity = false;     /* c(P) c(Q) = eps^(2 p^n) = c(W)^2 */
    bool class_correspondence = false;  /* [P][Q] = [W] */
    bool passed = false;
};

/* Throws OrderViolation when [P], [Q] or [P][Q] does not have order p^n. */
CompositionReport composition_check(quadfield::QuadraticField const & F, FamilyFPolynomial const & P,
                                    FamilyFPolynomial const & Q, FamilyFPolynomial const & W);

} // namespace normlab::compose

#endif /* NORMLAB_COMPOSE_HPP */
