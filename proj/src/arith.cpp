#include "normlab/arith.hpp"
#include "normlab/error.hpp"

#include <cmath>
#include <stdexcept>

namespace normlab {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonSquarefree: return "NonSquarefree";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::RamifiedPrime: return "RamifiedPrime";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::Imprimitive: return "Imprimitive";
    case ErrorKind::SquareDiscriminant: return "SquareDiscriminant";
    case ErrorKind::DiscriminantMismatch: return "DiscriminantMismatch";
    case ErrorKind::InertPrime: return "InertPrime";
    case ErrorKind::ConductorInvalid: return "ConductorInvalid";
    case ErrorKind::WildOrRamifiedConductor: return "WildOrRamifiedConductor";
    case ErrorKind::WildPrime: return "WildPrime";
    case ErrorKind::RamifiedInN: return "RamifiedInN";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::NoAdmissibleConductor: return "NoAdmissibleConductor";
    case ErrorKind::WrongNorm: return "WrongNorm";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::CommutatorNotContained: return "CommutatorNotContained";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

std::string to_string(BigInt const & x)
{
    return x.str();
}

namespace arith {

int64_t gcd(int64_t a, int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm(int64_t a, int64_t b)
{
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * (b < 0 ? -b : b) * (a < 0 ? -1 : 1);
}

ExtGcd ext_gcd(int64_t a, int64_t b)
{
    int64_t old_r = a, r = b;
    int64_t old_s = 1, s = 0;
    int64_t old_t = 0, t = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

int64_t mod(int64_t a, int64_t m)
{
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t mod(BigInt const & a, int64_t m)
{
    BigInt r = a % m;
    if (r < 0) r += m;
    return static_cast<int64_t>(r);
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m)
{
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m)
{
    if (m == 1) return 0;
    uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

int64_t inv_mod(int64_t a, int64_t m)
{
    auto e = ext_gcd(mod(a, m), m);
    if (e.g != 1) throw std::domain_error("inv_mod: not invertible");
    return mod(e.x, m);
}

bool is_prime(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    /* deterministic witness set for 64-bit n */
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<int64_t> primes_up_to(int64_t limit)
{
    std::vector<int64_t> out;
    if (limit < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(limit) + 1, true);
    for (int64_t i = 2; i <= limit; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (int64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
}

std::vector<std::pair<int64_t, int>> factor(int64_t n)
{
    std::vector<std::pair<int64_t, int>> out;
    if (n < 0) n = -n;
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(int64_t n)
{
    for (auto const & [p, e] : factor(n))
        if (e > 1) return false;
    return true;
}

int64_t isqrt(int64_t n)
{
    if (n < 0) throw std::domain_error("isqrt of negative");
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(int64_t n)
{
    if (n < 0) return false;
    int64_t r = isqrt(n);
    return r * r == n;
}

int kronecker(int64_t a, int64_t n)
{
    if (n <= 0) throw std::domain_error("kronecker: n must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        int64_t a8 = mod(a, 8);
        if (a8 % 2 == 0) return 0;
        if (a8 == 3 || a8 == 5) result = -result;
    }
    /* Jacobi symbol (a | n), n odd */
    a = mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::optional<int64_t> sqrt_mod(int64_t a, int64_t p)
{
    a = mod(a, p);
    if (a == 0) return 0;
    if (p == 2) return a;
    if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    /* Tonelli-Shanks */
    int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    int64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != static_cast<uint64_t>(p - 1)) ++z;
    uint64_t c = pow_mod(z, q, p);
    uint64_t r = pow_mod(a, (q + 1) / 2, p);
    uint64_t t = pow_mod(a, q, p);
    int m = s;
    while (t != 1) {
        int i = 0;
        uint64_t tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        uint64_t b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        r = mul_mod(r, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    return static_cast<int64_t>(r);
}

int64_t primitive_root(int64_t p)
{
    if (p == 2) return 1;
    auto fac = factor(p - 1);
    for (int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto const & [r, e] : fac) {
            if (pow_mod(g, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::domain_error("primitive_root: none found");
}

int64_t mult_order(int64_t a, int64_t m)
{
    a = mod(a, m);
    if (gcd(a, m) != 1) throw std::domain_error("mult_order: not a unit");
    int64_t k = 1;
    uint64_t x = a;
    while (x != 1 % static_cast<uint64_t>(m)) {
        x = mul_mod(x, a, m);
        ++k;
    }
    return k;
}

int64_t p_part(int64_t n, int64_t p)
{
    if (n < 0) n = -n;
    int64_t r = 1;
    while (n != 0 && n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

int64_t ipow(int64_t base, int exp)
{
    int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace arith
} // namespace normlab
