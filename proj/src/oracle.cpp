#include "normlab/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace normlab::oracle {

namespace {

int64_t floor_div(int64_t a, int64_t b)
{
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

std::vector<int64_t> canonical_period(int64_t P, int64_t Q, int64_t D)
{
    if (Q == 0 || (D - P * P) % Q != 0) throw std::invalid_argument("canonical_period: Q must divide D - P^2");
    int64_t const s = arith::isqrt(D);
    if (s * s == D) throw std::invalid_argument("canonical_period: square D");
    std::map<std::pair<int64_t, int64_t>, size_t> seen;
    std::vector<int64_t> quotients;
    while (true) {
        auto [it, fresh] = seen.emplace(std::make_pair(P, Q), quotients.size());
        if (!fresh) {
            std::vector<int64_t> period(quotients.begin() + static_cast<long>(it->second), quotients.end());
            /* least rotation */
            std::vector<int64_t> best = period;
            for (size_t r = 1; r < period.size(); ++r) {
                std::vector<int64_t> rot(period.begin() + static_cast<long>(r), period.end());
                rot.insert(rot.end(), period.begin(), period.begin() + static_cast<long>(r));
                best = std::min(best, rot);
            }
            return best;
        }
        /* a = floor((P + sqrt D)/Q) */
        int64_t a = Q > 0 ? floor_div(P + s, Q) : -floor_div(P + s, -Q) - 1;
        quotients.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

int64_t minkowski_class_number(int64_t disc)
{
    int64_t const bound = arith::isqrt(disc / 4); /* a <= sqrt(D)/2 */
    std::set<std::vector<int64_t>> classes;
    for (int64_t a = 1; a <= std::max<int64_t>(bound, 1); ++a) {
        for (int64_t b = 0; b < 2 * a; ++b) {
            if ((b * b - disc) % (4 * a) != 0) continue;
            int64_t c = (b * b - disc) / (4 * a);
            if (std::gcd(std::gcd(a, b), c) != 1) continue; /* primitive ideals only */
            classes.insert(canonical_period(b, 2 * a, disc));
        }
    }
    return static_cast<int64_t>(classes.size());
}

std::optional<PellSolution> pell_bruteforce(int64_t d, int64_t ymax)
{
    /* for d = 1 mod 4 solve x^2 - d y^2 = +-4, giving (x + y sqrt d)/2 */
    int64_t const k = (d % 4 == 1) ? 4 : 1;
    for (int64_t y = 1; y <= ymax; ++y) {
        BigInt dy2 = BigInt(d) * y * y;
        for (int sign : {-1, 1}) {
            BigInt t = dy2 + sign * k;
            if (t <= 0) continue;
            BigInt x = sqrt(t);
            if (x * x != t) continue;
            PellSolution sol;
            sol.norm = sign;
            if (k == 4) {
                if (x % 2 == 0 && y % 2 == 0) {
                    sol.x = x / 2;
                    sol.y = y / 2;
                    sol.den = 1;
                } else {
                    sol.x = x;
                    sol.y = y;
                    sol.den = 2;
                }
            } else {
                sol.x = x;
                sol.y = y;
            }
            return sol;
        }
    }
    return std::nullopt;
}

} // namespace normlab::oracle
