#ifndef NORMLAB_LATTICE_HPP
#define NORMLAB_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "normlab/arith.hpp"

namespace normlab::lattice {

using Vec = std::vector<BigInt>;

/*
 * Integer row lattice kept in Hermite normal form: rows have strictly
 * increasing pivot columns, positive pivots, and entries above each pivot
 * reduced into [0, pivot).
 */
class Lattice
{
    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;

    void reduce_above(size_t r);

    public:
    explicit Lattice(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }
    std::vector<Vec> const & basis() const { return rows_; }

    void add(Vec v);
    bool contains(Vec v) const;
};

Lattice hnf(size_t dim, std::vector<Vec> const & generators);

} // namespace normlab::lattice

#endif /* NORMLAB_LATTICE_HPP */
