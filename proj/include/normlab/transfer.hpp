#ifndef NORMLAB_TRANSFER_HPP
#define NORMLAB_TRANSFER_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "normlab/lattice.hpp"

namespace normlab::transfer {

using Elem = uint32_t;
/* Subsets of G as sorted element lists. */
using Subset = std::vector<Elem>;

/* Finite group given by its full multiplication table. */
class FiniteGroup
{
    std::vector<std::vector<Elem>> table_;
    std::vector<Elem> inverse_;
    Elem identity_ = 0;
    std::vector<int64_t> invariants_; /* abelian invariants, when built that way */
    std::vector<std::string> labels_;

    public:
    static constexpr size_t default_order_cap = 64;

    /* Validates closure, associativity, identity and inverses; throws InvalidGroup. */
    explicit FiniteGroup(std::vector<std::vector<Elem>> table, size_t order_cap = default_order_cap);

    size_t order() const { return table_.size(); }
    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const { return table_[a][b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem pow(Elem a, int64_t k) const;
    int64_t element_order(Elem a) const;
    bool is_abelian() const;
    std::vector<std::vector<Elem>> const & table() const { return table_; }

    std::vector<int64_t> const & invariants() const { return invariants_; }
    void set_invariants(std::vector<int64_t> inv) { invariants_ = std::move(inv); }
    std::string label(Elem a) const;
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
};

/* One row per element, space-separated indices; '#' starts a comment. */
FiniteGroup parse_table(std::istream & in, size_t order_cap = FiniteGroup::default_order_cap);
std::string format_table(FiniteGroup const & G);

FiniteGroup cyclic_group(int64_t n);
/* Z/n1 x Z/n2 x ..., elements in mixed radix with the last factor fastest. */
FiniteGroup abelian_group(std::vector<int64_t> const & factors);
FiniteGroup symmetric_group(int n);
/* Every abelian group of the given order up to isomorphism, as invariant
 * factor lists d1 | d2 | ... (empty list for the trivial group). */
std::vector<std::vector<int64_t>> abelian_invariants_of_order(int64_t n);

Subset closure(FiniteGroup const & G, Subset const & gens);
bool is_subgroup(FiniteGroup const & G, Subset const & H);
bool is_normal(FiniteGroup const & G, Subset const & H);
Subset commutator_subgroup(FiniteGroup const & G, Subset const & H);
inline Subset derived_subgroup(FiniteGroup const & G)
{
    Subset all(G.order());
    for (Elem i = 0; i < G.order(); ++i) all[i] = i;
    return commutator_subgroup(G, all);
}
bool contains(Subset const & H, Elem x);
bool is_contained(Subset const & A, Subset const & B);
/* All subgroups, sorted by (order, elements). */
std::vector<Subset> all_subgroups(FiniteGroup const & G);

/* Left-coset representatives of H: the least element of each coset g H,
 * ordered by that element. */
std::vector<Elem> coset_representatives(FiniteGroup const & G, Subset const & H);

/* Least element of x H' for x in H. */
Elem reduce_mod(FiniteGroup const & G, Subset const & Hprime, Elem x);

/* prod_i phi(g g_i)^(-1) g g_i in H, before reduction mod H'. */
Elem transfer_element(FiniteGroup const & G, Subset const & H, std::vector<Elem> const & reps, Elem g);
/* Ver(g) mod H' with the standard representatives. Throws NotSubgroup. */
Elem transfer(FiniteGroup const & G, Subset const & H, Elem g);

struct TransferResult {
    std::vector<Elem> coset_reps;   /* representatives of G/H */
    std::vector<Elem> images;       /* Ver(rep) mod H', same order */
    bool well_defined_on_quotient = false;
    bool vanishes = false;
    bool hypothesis = false;        /* |H| divides [G:H] */
    bool consistent_with_lemma = false; /* !hypothesis || vanishes */
};

/* Throws NotSubgroup, NotNormal, CommutatorNotContained. */
TransferResult restricted_transfer(FiniteGroup const & G, Subset const & H);

/* Integer vector indexed by group elements. */
struct GroupRingElement {
    std::vector<int64_t> coeffs;

    int64_t augmentation() const;
    bool operator==(GroupRingElement const &) const = default;
};

GroupRingElement ring_zero(FiniteGroup const & G);
GroupRingElement ring_basis(FiniteGroup const & G, Elem g);
/* g - 1 */
GroupRingElement delta(FiniteGroup const & G, Elem g);
GroupRingElement operator+(GroupRingElement const & a, GroupRingElement const & b);
GroupRingElement operator-(GroupRingElement const & a, GroupRingElement const & b);
GroupRingElement ring_mul(FiniteGroup const & G, GroupRingElement const & a, GroupRingElement const & b);

enum class LatticeKind { IG2, IGIH, IHplusIGIH };
std::string to_string(LatticeKind k);

lattice::Lattice augmentation_lattice(FiniteGroup const & G, Subset const & H, LatticeKind kind);
bool augmentation_membership(FiniteGroup const & G, Subset const & H, GroupRingElement const & x,
                             LatticeKind kind);
bool in_lattice(lattice::Lattice const & L, GroupRingElement const & x);

struct DiagramReport {
    bool hypothesis = false;
    std::vector<Elem> violations; /* g with S(g - 1) != Ver(g) - 1 mod I_G I_H */
    bool commutes = false;
};

/* Throws NotSubgroup, NotNormal, CommutatorNotContained. */
DiagramReport diagram_check(FiniteGroup const & G, Subset const & H);

} // namespace normlab::transfer

#endif /* NORMLAB_TRANSFER_HPP */
