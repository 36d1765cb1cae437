#ifndef NORMLAB_FORMCLASS_HPP
#define NORMLAB_FORMCLASS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "normlab/quadfield.hpp"

namespace normlab::formclass {

/* a x^2 + b x y + c y^2 with positive non-square discriminant. */
struct BinaryQuadraticForm {
    int64_t a = 0, b = 0, c = 0;

    int64_t disc() const { return b * b - 4 * a * c; }
    auto operator<=>(BinaryQuadraticForm const &) const = default;
};

std::ostream & operator<<(std::ostream & os, BinaryQuadraticForm const & f);
std::string to_string(BinaryQuadraticForm const & f);

/* |sqrt(D) - 2|a|| < b < sqrt(D) */
bool is_reduced(BinaryQuadraticForm const & f);

/* One reduction step (a, b, c) -> (c, b', a'), properly equivalent. */
BinaryQuadraticForm rho(BinaryQuadraticForm const & f);

/* Iterates rho until the form is reduced. */
BinaryQuadraticForm reduce(BinaryQuadraticForm const & f);

/*
 * SL2(Z)-class of a form, identified by the lexicographically least form on
 * its cycle of reduced forms.
 */
struct FormClass {
    BinaryQuadraticForm canonical;
    int cycle_length = 0;

    int64_t disc() const { return canonical.disc(); }
    bool operator==(FormClass const & o) const { return canonical == o.canonical; }
    bool operator<(FormClass const & o) const { return canonical < o.canonical; }
};

/* The whole rho-cycle of a reduced form, starting at that form. */
std::vector<BinaryQuadraticForm> reduced_cycle(BinaryQuadraticForm const & reduced);

/* Throws Imprimitive / SquareDiscriminant. */
FormClass reduction_cycle(BinaryQuadraticForm const & f);

/* Dirichlet composition of two forms of equal discriminant, unreduced. */
BinaryQuadraticForm compose_forms(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g);

FormClass compose(FormClass const & x, FormClass const & y);
FormClass inverse(FormClass const & x);
FormClass power(FormClass const & x, int64_t k);

BinaryQuadraticForm principal_form(int64_t disc);
FormClass principal_class(int64_t disc);
/* Class of (-1, b0, (D - b0^2)/4); trivial exactly when Norm(eps) = -1. */
FormClass minus_one_class(int64_t disc);

/* Narrow order of a class. */
int64_t order(FormClass const & x);
/* Order in the wide group (narrow modulo minus_one_class). */
int64_t wide_order(FormClass const & x);
/* Canonical representative of the wide class of x. */
FormClass wide_canonical(FormClass const & x);

/* Every reduced form of discriminant D. */
std::vector<BinaryQuadraticForm> reduced_forms(int64_t disc);
/* All narrow classes of discriminant D, sorted by canonical form. */
std::vector<FormClass> narrow_classes(int64_t disc);

enum class Flavor { Narrow, Wide };
std::string_view to_string(Flavor f);

struct ClassGroupStructure {
    Flavor flavor = Flavor::Wide;
    int64_t h = 1;
    std::vector<int64_t> elementary_divisors; /* d1 | d2 | ..., all > 1 */
    std::vector<FormClass> generators;        /* one per divisor, same order */
};

/*
 * Finite class group with its full multiplication table. Elements are
 * narrow classes, or for the wide flavor the wide_canonical
 * representatives.
 */
class ClassGroup
{
    int64_t disc_;
    Flavor flavor_;
    std::vector<FormClass> elements_;
    std::map<BinaryQuadraticForm, size_t> index_;
    std::vector<std::vector<uint32_t>> table_;
    size_t identity_ = 0;

    public:
    ClassGroup(int64_t disc, Flavor flavor);

    int64_t disc() const { return disc_; }
    Flavor flavor() const { return flavor_; }
    size_t size() const { return elements_.size(); }
    size_t identity() const { return identity_; }
    FormClass const & element(size_t i) const { return elements_[i]; }
    /* Accepts any class of the discriminant (narrow classes are mapped to
     * their wide image for the wide flavor). */
    size_t index_of(FormClass const & x) const;
    size_t mul(size_t i, size_t j) const { return table_[i][j]; }
    size_t pow(size_t i, int64_t k) const;
    int64_t order(size_t i) const;
    /* Elements of the subgroup generated by gens. */
    std::vector<size_t> subgroup(std::vector<size_t> const & gens) const;
    ClassGroupStructure structure() const;
};

ClassGroupStructure class_group(quadfield::QuadraticField const & F, Flavor flavor);

/* The form (l, b, c) with b^2 = D (mod 4l), 0 <= b < 2l minimal. */
struct PrimeForm {
    BinaryQuadraticForm form;
    FormClass cls;
};
PrimeForm prime_form(quadfield::QuadraticField const & F, int64_t ell);

struct PolyaReport {
    std::vector<int64_t> ramified_primes;
    std::vector<int64_t> ramification_indices; /* all 2 */
    int64_t polya_order = 1;
    int64_t h1_order = 1;
};

/* |Po(N)| inside the wide class group; |H^1| = 2^s / |Po(N)|. */
PolyaReport polya_report(quadfield::QuadraticField const & F);

} // namespace normlab::formclass

#endif /* NORMLAB_FORMCLASS_HPP */
