#include "normlab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace normlab::poly {

IntPoly from_ints(std::vector<int64_t> const & low_to_high)
{
    return IntPoly(low_to_high.begin(), low_to_high.end());
}

int degree(IntPoly const & f)
{
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

IntPoly derivative(IntPoly const & f)
{
    IntPoly out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<int64_t>(i));
    return out;
}

std::string to_string(IntPoly const & f)
{
    std::ostringstream os;
    bool first = true;
    for (int i = degree(f); i >= 0; --i) {
        BigInt c = f[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        BigInt ac = abs(c);
        if (ac != 1 || i == 0) {
            os << ac;
            if (i > 0) os << '*';
        }
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

BigInt determinant(std::vector<std::vector<BigInt>> m)
{
    size_t const n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt resultant(IntPoly const & f, IntPoly const & g)
{
    int const n = degree(f), m = degree(g);
    if (n < 0 || m < 0) return 0;
    if (n == 0 && m == 0) return 1;
    size_t const N = n + m;
    std::vector<std::vector<BigInt>> S(N, std::vector<BigInt>(N, 0));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) S[r][r + i] = f[n - i];
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S[m + r][r + i] = g[m - i];
    return determinant(std::move(S));
}

BigInt discriminant(IntPoly const & f)
{
    int const n = degree(f);
    if (n < 1) throw std::invalid_argument("discriminant of a constant");
    BigInt r = resultant(f, derivative(f));
    if ((static_cast<int64_t>(n) * (n - 1) / 2) % 2) r = -r;
    return r / f[n];
}

int64_t eval_mod(IntPoly const & f, int64_t x, int64_t ell)
{
    int64_t acc = 0;
    for (int i = degree(f); i >= 0; --i)
        acc = arith::mod(acc * x + arith::mod(f[i], ell), ell);
    return acc;
}

int root_count_mod(IntPoly const & f, int64_t ell)
{
    int count = 0;
    for (int64_t x = 0; x < ell; ++x)
        if (eval_mod(f, x, ell) == 0) ++count;
    return count;
}

} // namespace normlab::poly
