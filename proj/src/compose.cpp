#include "normlab/compose.hpp"
#include "normlab/error.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace normlab::compose {

namespace {

QuadInteger zero_of(quadfield::QuadraticField const & F) { return QuadInteger(F.d, 0); }

std::string poly_str(std::vector<QuadInteger> const & c)
{
    std::ostringstream os;
    bool first = true;
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) os << "(" << c[k] << ")";
        else if (c[k].is_one()) os << (k == 1 ? "x" : "x^" + std::to_string(k));
        else os << "(" << c[k] << ")*" << (k == 1 ? "x" : "x^" + std::to_string(k));
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string RelativeElement::str() const
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords.size(); ++i) os << (i ? ", " : "") << coords[i];
    os << "]";
    return os.str();
}

void check_product_basis(cyclicext::CyclicExtensionDescriptor const & desc,
                         quadfield::QuadraticField const & F)
{
    if (F.disc % desc.q() == 0)
        throw Error(ErrorKind::WildOrRamifiedConductor,
                    "q = " + std::to_string(desc.q()) + " divides disc N = " + std::to_string(F.disc));
}

RelativeElement scalar(cyclicext::CyclicExtensionDescriptor const & desc, QuadInteger const & u)
{
    return RelativeElement{std::vector<QuadInteger>(desc.degree(), -u)};
}

RelativeElement period(cyclicext::CyclicExtensionDescriptor const & desc,
                       quadfield::QuadraticField const & F, int64_t i)
{
    RelativeElement x{std::vector<QuadInteger>(desc.degree(), zero_of(F))};
    x.coords[arith::mod(i, desc.degree())] = QuadInteger::from_int(F, 1);
    return x;
}

std::optional<QuadInteger> as_scalar(RelativeElement const & x)
{
    if (x.coords.empty()) return std::nullopt;
    for (auto const & c : x.coords)
        if (!(c == x.coords[0])) return std::nullopt;
    return -x.coords[0];
}

RelativeElement multiply(cyclicext::CyclicExtensionDescriptor const & desc,
                         quadfield::QuadraticField const & F,
                         RelativeElement const & x, RelativeElement const & y)
{
    return RelativeElement{desc.multiply(x.coords, y.coords, zero_of(F))};
}

RelativeElement galois_apply(cyclicext::CyclicExtensionDescriptor const & desc, int64_t i,
                             RelativeElement const & x)
{
    return RelativeElement{desc.galois_shift(x.coords, i)};
}

QuadInteger relative_norm(cyclicext::CyclicExtensionDescriptor const & desc,
                          quadfield::QuadraticField const & F, RelativeElement const & x)
{
    RelativeElement prod = x;
    for (int64_t i = 1; i < desc.degree(); ++i) prod = multiply(desc, F, prod, galois_apply(desc, i, x));
    auto v = as_scalar(prod);
    if (!v) throw std::logic_error("relative_norm: product of conjugates is not in O_N");
    return *v;
}

QuadInteger relative_trace(quadfield::QuadraticField const & F, RelativeElement const & x)
{
    QuadInteger s = zero_of(F);
    for (auto const & c : x.coords) s -= c;
    return s;
}

std::string RelativeCharPoly::str() const { return poly_str(coeffs); }

RelativeCharPoly charpoly_over_N(cyclicext::CyclicExtensionDescriptor const & desc,
                                 quadfield::QuadraticField const & F, RelativeElement const & x)
{
    int64_t const m = desc.degree();
    std::vector<QuadInteger> S(m + 1, zero_of(F));
    RelativeElement pw = x;
    for (int64_t k = 1; k <= m; ++k) {
        if (k > 1) pw = multiply(desc, F, pw, x);
        S[k] = relative_trace(F, pw);
    }
    /* Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} S_i */
    std::vector<QuadInteger> e(m + 1, zero_of(F));
    e[0] = QuadInteger::from_int(F, 1);
    for (int64_t k = 1; k <= m; ++k) {
        QuadInteger acc = zero_of(F);
        for (int64_t i = 1; i <= k; ++i) {
            QuadInteger term = e[k - i] * S[i];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        e[k] = acc.exact_div(QuadInteger::from_int(F, k));
    }
    RelativeCharPoly out;
    out.coeffs.assign(m + 1, zero_of(F));
    for (int64_t k = 0; k <= m; ++k) out.coeffs[m - k] = (k % 2) ? -e[k] : e[k];

    QuadInteger const N = relative_norm(desc, F, x);
    QuadInteger const expect = (m % 2) ? -N : N;
    if (!(out.coeffs[0] == expect))
        throw std::logic_error("charpoly_over_N: constant term is not (-1)^m Norm");
    return out;
}

NormSearchResult search_norm_element(cyclicext::CyclicExtensionDescriptor const & desc,
                                     quadfield::QuadraticField const & F,
                                     QuadInteger const & target, int64_t bound,
                                     unsigned workers)
{
    if (bound < 0) throw Error(ErrorKind::InvalidConfig, "search bound must be nonnegative");
    check_product_basis(desc, F);
    int64_t const m = desc.degree();
    int64_t const side = 2 * bound + 1;
    std::vector<QuadInteger> values;
    for (int64_t x = -bound; x <= bound; ++x)
        for (int64_t y = -bound; y <= bound; ++y) values.push_back(QuadInteger::from_basis(F, x, y));
    uint64_t const per_coord = static_cast<uint64_t>(side * side);
    long double total = 1;
    for (int64_t i = 0; i < m; ++i) total *= per_coord;
    if (total > 1e12L) throw Error(ErrorKind::InvalidConfig, "search space too large");

    /* scan first coordinate indices in [lo, hi); returns the first hit */
    auto scan = [&](uint64_t lo, uint64_t hi, uint64_t & examined) -> std::optional<RelativeElement> {
        std::vector<uint64_t> idx(m, 0);
        RelativeElement a{std::vector<QuadInteger>(m, zero_of(F))};
        for (uint64_t t0 = lo; t0 < hi; ++t0) {
            idx.assign(m, 0);
            idx[0] = t0;
            while (true) {
                for (int64_t i = 0; i < m; ++i) a.coords[i] = values[idx[i]];
                ++examined;
                bool nonzero = std::any_of(a.coords.begin(), a.coords.end(),
                                           [](QuadInteger const & c) { return !c.is_zero(); });
                if (nonzero && relative_norm(desc, F, a) == target) return a;
                int64_t i = m - 1;
                while (i > 0 && ++idx[i] == per_coord) idx[i--] = 0;
                if (i == 0) break;
            }
        }
        return std::nullopt;
    };

    NormSearchResult res;
    res.bound = bound;
    unsigned const w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(per_coord)));
    if (w == 1) {
        res.witness = scan(0, per_coord, res.examined);
        return res;
    }
    std::vector<std::future<std::pair<std::optional<RelativeElement>, uint64_t>>> parts;
    for (unsigned k = 0; k < w; ++k) {
        uint64_t lo = per_coord * k / w, hi = per_coord * (k + 1) / w;
        parts.push_back(std::async(std::launch::async, [&, lo, hi] {
            uint64_t ex = 0;
            auto hit = scan(lo, hi, ex);
            return std::make_pair(hit, ex);
        }));
    }
    for (auto & f : parts) {
        auto [hit, ex] = f.get();
        if (!res.witness && hit) {
            res.witness = hit;
            res.examined += ex;
        } else if (!res.witness) {
            res.examined += ex;
        }
    }
    return res;
}

std::string FamilyFPolynomial::str() const { return poly_str(coeffs); }

FamilyFPolynomial family_polynomial(cyclicext::CyclicExtensionDescriptor const & desc,
                                    quadfield::QuadraticField const & F,
                                    RelativeElement const & alpha,
                                    formclass::FormClass const & cls)
{
    check_product_basis(desc, F);
    int64_t const m = desc.degree();
    auto const eps = quadfield::fundamental_unit(F).value;
    QuadInteger const eps_m = eps.pow(static_cast<uint64_t>(m));
    QuadInteger const N = relative_norm(desc, F, alpha);
    if (!(N == -eps_m))
        throw Error(ErrorKind::WrongNorm, "Norm(alpha) = " + N.str() + ", expected -(" + eps_m.str() + ")");
    auto cp = charpoly_over_N(desc, F, alpha);
    FamilyFPolynomial out;
    out.certified_constant = cp.coeffs[0];
    if (!(out.certified_constant == eps_m))
        throw std::logic_error("family_polynomial: constant term is not eps^(p^n)");
    out.coeffs = cp.coeffs;
    out.coeffs[0] = zero_of(F);
    out.cls = cls;
    out.q = desc.q();
    out.p = desc.p();
    out.n = desc.n();
    out.alpha = alpha;
    /* an integral element is a unit iff its norm to N is */
    out.alpha_is_unit = N.is_unit();
    return out;
}

CompositionReport composition_check(quadfield::QuadraticField const & F, FamilyFPolynomial const & P,
                                    FamilyFPolynomial const & Q, FamilyFPolynomial const & W)
{
    CompositionReport r;
    r.degree = arith::ipow(P.p, static_cast<int>(P.n));
    r.order_P = formclass::wide_order(P.cls);
    r.order_Q = formclass::wide_order(Q.cls);
    r.product = formclass::compose(P.cls, Q.cls);
    r.order_product = formclass::wide_order(r.product);
    if (r.order_P != r.degree || r.order_Q != r.degree || r.order_product != r.degree)
        throw Error(ErrorKind::OrderViolation,
                    "orders " + std::to_string(r.order_P) + ", " + std::to_string(r.order_Q) + " -> " +
                        std::to_string(r.order_product) + ", expected " + std::to_string(r.degree));
    auto const eps = quadfield::fundamental_unit(F).value;
    QuadInteger const eps_2m = eps.pow(static_cast<uint64_t>(2 * r.degree));
    r.constant_identity = (P.certified_constant * Q.certified_constant == eps_2m) &&
                          (W.certified_constant * W.certified_constant == eps_2m);
    r.class_correspondence = formclass::wide_canonical(r.product) == formclass::wide_canonical(W.cls);
    r.passed = r.constant_identity && r.class_correspondence;
    return r;
}

} // namespace normlab::compose
