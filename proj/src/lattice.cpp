#include "normlab/lattice.hpp"

#include <stdexcept>

namespace normlab::lattice {

namespace {

bool is_zero(Vec const & v)
{
    for (auto const & x : v)
        if (x != 0) return false;
    return true;
}

/* floor division for BigInt */
BigInt fdiv(BigInt const & a, BigInt const & b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct BigExt {
    BigInt g, x, y;
};

BigExt ext_gcd(BigInt a, BigInt b)
{
    BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

} // namespace

void Lattice::reduce_above(size_t r)
{
    size_t const c = pivots_[r];
    for (size_t i = 0; i < r; ++i) {
        BigInt f = fdiv(rows_[i][c], rows_[r][c]);
        if (f == 0) continue;
        for (size_t k = c; k < dim_; ++k) rows_[i][k] -= f * rows_[r][k];
    }
}

void Lattice::add(Vec v)
{
    if (v.size() != dim_) throw std::invalid_argument("Lattice::add: dimension mismatch");
    size_t r = 0;
    for (size_t c = 0; c < dim_ && !is_zero(v); ++c) {
        if (v[c] == 0) continue;
        while (r < rows_.size() && pivots_[r] < c) ++r;
        if (r == rows_.size() || pivots_[r] > c) {
            /* new pivot column */
            if (v[c] < 0)
                for (auto & x : v) x = -x;
            rows_.insert(rows_.begin() + r, v);
            pivots_.insert(pivots_.begin() + r, c);
            for (size_t k = r + 1; k < rows_.size(); ++k) reduce_above(k);
            reduce_above(r);
            return;
        }
        /* combine with the existing pivot row: unimodular 2x2 step */
        Vec & w = rows_[r];
        auto [g, x, y] = ext_gcd(w[c], v[c]);
        BigInt const a = w[c] / g, b = v[c] / g;
        Vec nw(dim_), nv(dim_);
        for (size_t k = c; k < dim_; ++k) {
            nw[k] = x * w[k] + y * v[k];
            nv[k] = a * v[k] - b * w[k];
        }
        w = std::move(nw);
        v = std::move(nv);
        reduce_above(r);
    }
}

bool Lattice::contains(Vec v) const
{
    if (v.size() != dim_) throw std::invalid_argument("Lattice::contains: dimension mismatch");
    size_t r = 0;
    for (size_t c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        while (r < rows_.size() && pivots_[r] < c) ++r;
        if (r == rows_.size() || pivots_[r] != c) return false;
        if (v[c] % rows_[r][c] != 0) return false;
        BigInt f = v[c] / rows_[r][c];
        for (size_t k = c; k < dim_; ++k) v[k] -= f * rows_[r][k];
    }
    return true;
}

Lattice hnf(size_t dim, std::vector<Vec> const & generators)
{
    Lattice L(dim);
    for (auto const & g : generators) L.add(g);
    return L;
}

} // namespace normlab::lattice
