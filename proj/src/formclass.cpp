#include "normlab/formclass.hpp"
#include "normlab/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace normlab::formclass {

using i128 = __int128;

namespace {

/* m < sqrt(D) for non-square D */
bool below_root(int64_t m, int64_t D)
{
    return m < 0 || m * m < D;
}

/* m > sqrt(D) for non-square D */
bool above_root(int64_t m, int64_t D)
{
    return m > 0 && m * m > D;
}

int64_t iabs(int64_t x)
{
    return x < 0 ? -x : x;
}

void check_form(BinaryQuadraticForm const & f)
{
    int64_t D = f.disc();
    if (D <= 0 || arith::is_square(D))
        throw Error(ErrorKind::SquareDiscriminant, to_string(f) + " has discriminant " + std::to_string(D));
    if (arith::gcd(arith::gcd(f.a, f.b), f.c) != 1)
        throw Error(ErrorKind::Imprimitive, to_string(f));
}

} // namespace

std::ostream & operator<<(std::ostream & os, BinaryQuadraticForm const & f)
{
    return os << '(' << f.a << ", " << f.b << ", " << f.c << ')';
}

std::string to_string(BinaryQuadraticForm const & f)
{
    std::ostringstream os;
    os << f;
    return os.str();
}

bool is_reduced(BinaryQuadraticForm const & f)
{
    int64_t const D = f.disc();
    int64_t const a2 = 2 * iabs(f.a);
    return f.b > 0 && below_root(f.b, D) && below_root(a2 - f.b, D) && above_root(a2 + f.b, D);
}

BinaryQuadraticForm rho(BinaryQuadraticForm const & f)
{
    int64_t const D = f.disc();
    int64_t const c = f.c;
    int64_t const two_c = 2 * iabs(c);
    int64_t b;
    if (below_root(iabs(c), D)) {
        /* unique b = -f.b (mod 2|c|) in (sqrt D - 2|c|, sqrt D) */
        int64_t const s = arith::isqrt(D);
        b = s - arith::mod(s + f.b, two_c);
    } else {
        /* unique b = -f.b (mod 2|c|) in (-|c|, |c|] */
        b = arith::mod(-f.b, two_c);
        if (b > iabs(c)) b -= two_c;
    }
    return {c, b, (b * b - D) / (4 * c)};
}

BinaryQuadraticForm reduce(BinaryQuadraticForm const & f)
{
    BinaryQuadraticForm g = f;
    for (int guard = 0; !is_reduced(g); ++guard) {
        if (guard > 100000) throw std::logic_error("reduce: no convergence for " + to_string(f));
        g = rho(g);
    }
    return g;
}

std::vector<BinaryQuadraticForm> reduced_cycle(BinaryQuadraticForm const & reduced)
{
    std::vector<BinaryQuadraticForm> cycle{reduced};
    for (BinaryQuadraticForm g = rho(reduced); g != reduced; g = rho(g)) {
        cycle.push_back(g);
        if (cycle.size() > 10000000) throw std::logic_error("reduced_cycle: runaway");
    }
    return cycle;
}

FormClass reduction_cycle(BinaryQuadraticForm const & f)
{
    check_form(f);
    auto cycle = reduced_cycle(reduce(f));
    return {*std::min_element(cycle.begin(), cycle.end()), static_cast<int>(cycle.size())};
}

BinaryQuadraticForm compose_forms(BinaryQuadraticForm const & f, BinaryQuadraticForm const & g)
{
    int64_t const D = f.disc();
    if (g.disc() != D)
        throw Error(ErrorKind::DiscriminantMismatch,
                    to_string(f) + " vs " + to_string(g));
    int64_t const s = (f.b + g.b) / 2;
    auto e1 = arith::ext_gcd(f.a, g.a);
    auto e2 = arith::ext_gcd(e1.g, s);
    int64_t const n = e2.g;
    i128 const u = static_cast<i128>(e2.x) * e1.x;
    i128 const v = static_cast<i128>(e2.x) * e1.y;
    i128 const w = e2.y;
    int64_t const A = f.a / n * (g.a / n);
    i128 const num = u * f.a * g.b + v * g.a * f.b
                     + w * ((static_cast<i128>(f.b) * g.b + D) / 2);
    if (num % n != 0) throw std::logic_error("compose_forms: inexact middle coefficient");
    i128 const two_a = 2 * static_cast<i128>(A < 0 ? -A : A);
    i128 B = (num / n) % two_a;
    if (B < 0) B += two_a;
    if (B > (A < 0 ? -A : A)) B -= two_a;
    i128 const cnum = B * B - D;
    if (cnum % (4 * static_cast<i128>(A)) != 0)
        throw std::logic_error("compose_forms: inexact last coefficient");
    return {A, static_cast<int64_t>(B), static_cast<int64_t>(cnum / (4 * static_cast<i128>(A)))};
}

FormClass compose(FormClass const & x, FormClass const & y)
{
    return reduction_cycle(compose_forms(x.canonical, y.canonical));
}

FormClass inverse(FormClass const & x)
{
    auto const & f = x.canonical;
    return reduction_cycle({f.a, -f.b, f.c});
}

FormClass power(FormClass const & x, int64_t k)
{
    FormClass base = k < 0 ? inverse(x) : x;
    if (k < 0) k = -k;
    FormClass result = principal_class(x.disc());
    while (k) {
        if (k & 1) result = compose(result, base);
        k >>= 1;
        if (k) base = compose(base, base);
    }
    return result;
}

BinaryQuadraticForm principal_form(int64_t disc)
{
    int64_t b = arith::isqrt(disc);
    if (b * b == disc) --b;
    if ((b - disc) % 2 != 0) --b;
    return {1, b, (b * b - disc) / 4};
}

FormClass principal_class(int64_t disc)
{
    return reduction_cycle(principal_form(disc));
}

FormClass minus_one_class(int64_t disc)
{
    auto p = principal_form(disc);
    return reduction_cycle({-1, p.b, -p.c});
}

int64_t order(FormClass const & x)
{
    FormClass const one = principal_class(x.disc());
    FormClass y = x;
    int64_t k = 1;
    while (!(y == one)) {
        y = compose(y, x);
        ++k;
    }
    return k;
}

int64_t wide_order(FormClass const & x)
{
    FormClass const one = principal_class(x.disc());
    FormClass const J = minus_one_class(x.disc());
    FormClass y = x;
    int64_t k = 1;
    while (!(y == one) && !(y == J)) {
        y = compose(y, x);
        ++k;
    }
    return k;
}

FormClass wide_canonical(FormClass const & x)
{
    FormClass other = compose(x, minus_one_class(x.disc()));
    return other < x ? other : x;
}

std::vector<BinaryQuadraticForm> reduced_forms(int64_t disc)
{
    std::vector<BinaryQuadraticForm> out;
    int64_t const s = arith::isqrt(disc);
    for (int64_t b = (disc % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        if (b * b >= disc) break;
        int64_t const N = (disc - b * b) / 4; /* = -ac */
        for (int64_t m = 1; m * m <= N; ++m) {
            if (N % m) continue;
            for (int64_t a_abs : {m, N / m}) {
                for (int64_t a : {a_abs, -a_abs}) {
                    BinaryQuadraticForm f{a, b, -N / a};
                    if (!is_reduced(f)) continue;
                    if (arith::gcd(arith::gcd(f.a, f.b), f.c) != 1) continue;
                    out.push_back(f);
                }
                if (m == N / m) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FormClass> narrow_classes(int64_t disc)
{
    if (disc <= 0 || arith::is_square(disc))
        throw Error(ErrorKind::SquareDiscriminant, std::to_string(disc));
    auto forms = reduced_forms(disc);
    std::set<BinaryQuadraticForm> seen;
    std::vector<FormClass> out;
    for (auto const & f : forms) {
        if (seen.count(f)) continue;
        auto cycle = reduced_cycle(f);
        seen.insert(cycle.begin(), cycle.end());
        out.push_back({*std::min_element(cycle.begin(), cycle.end()), static_cast<int>(cycle.size())});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(Flavor f)
{
    return f == Flavor::Narrow ? "narrow" : "wide";
}

/* ---- ClassGroup ---- */

ClassGroup::ClassGroup(int64_t disc, Flavor flavor)
    : disc_(disc), flavor_(flavor)
{
    auto narrow = narrow_classes(disc);
    if (flavor == Flavor::Narrow) {
        elements_ = narrow;
        for (size_t i = 0; i < narrow.size(); ++i) index_[narrow[i].canonical] = i;
    } else {
        FormClass const J = minus_one_class(disc);
        std::map<BinaryQuadraticForm, size_t> wide_index;
        for (auto const & x : narrow) {
            FormClass other = compose(x, J);
            FormClass const & rep = other < x ? other : x;
            auto [it, fresh] = wide_index.emplace(rep.canonical, elements_.size());
            if (fresh) elements_.push_back(rep);
            index_[x.canonical] = it->second;
        }
    }
    identity_ = index_of(principal_class(disc));
    size_t const n = elements_.size();
    table_.assign(n, std::vector<uint32_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            table_[i][j] = table_[j][i] =
                static_cast<uint32_t>(index_of(compose(elements_[i], elements_[j])));
}

size_t ClassGroup::index_of(FormClass const & x) const
{
    if (x.disc() != disc_)
        throw Error(ErrorKind::DiscriminantMismatch,
                    std::to_string(x.disc()) + " vs " + std::to_string(disc_));
    auto it = index_.find(x.canonical);
    if (it == index_.end()) throw std::logic_error("ClassGroup: unknown class " + to_string(x.canonical));
    return it->second;
}

size_t ClassGroup::pow(size_t i, int64_t k) const
{
    size_t r = identity_;
    for (int64_t t = 0; t < k; ++t) r = mul(r, i);
    return r;
}

int64_t ClassGroup::order(size_t i) const
{
    int64_t k = 1;
    for (size_t y = i; y != identity_; y = mul(y, i)) ++k;
    return k;
}

std::vector<size_t> ClassGroup::subgroup(std::vector<size_t> const & gens) const
{
    std::vector<bool> in(size(), false);
    std::vector<size_t> members{identity_};
    in[identity_] = true;
    for (size_t k = 0; k < members.size(); ++k) {
        for (size_t g : gens) {
            size_t y = mul(members[k], g);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

ClassGroupStructure ClassGroup::structure() const
{
    /*
     * Greedy direct-sum decomposition: repeatedly pick an element whose order
     * modulo the current subgroup H is maximal and equals its actual order.
     * Such an element spans a complement summand of H.
     */
    ClassGroupStructure out;
    out.flavor = flavor_;
    out.h = static_cast<int64_t>(size());
    std::vector<bool> inH(size(), false);
    inH[identity_] = true;
    std::vector<size_t> H{identity_};
    std::vector<int64_t> divisors;
    std::vector<size_t> gens;
    while (H.size() < size()) {
        int64_t best = 0;
        size_t best_x = identity_;
        int64_t best_rel = 0;
        for (size_t x = 0; x < size(); ++x) {
            int64_t rel = 1;
            for (size_t y = x; !inH[y]; y = mul(y, x)) ++rel;
            if (rel < best_rel) continue;
            if (rel > best_rel) {
                best_rel = rel;
                best = 0;
            }
            if (best == 0 && order(x) == rel) {
                best = rel;
                best_x = x;
            }
        }
        if (best == 0) throw std::logic_error("ClassGroup::structure: no complement found");
        divisors.push_back(best);
        gens.push_back(best_x);
        std::vector<size_t> next;
        size_t xp = identity_;
        for (int64_t k = 0; k < best; ++k, xp = mul(xp, best_x))
            for (size_t h : H) next.push_back(mul(h, xp));
        H = std::move(next);
        std::fill(inH.begin(), inH.end(), false);
        for (size_t h : H) inH[h] = true;
    }
    std::reverse(divisors.begin(), divisors.end());
    std::reverse(gens.begin(), gens.end());
    out.elementary_divisors = divisors;
    for (size_t g : gens) out.generators.push_back(elements_[g]);
    return out;
}

ClassGroupStructure class_group(quadfield::QuadraticField const & F, Flavor flavor)
{
    return ClassGroup(F.disc, flavor).structure();
}

PrimeForm prime_form(quadfield::QuadraticField const & F, int64_t ell)
{
    if (quadfield::splitting_type(F, ell) == quadfield::SplittingType::Inert)
        throw Error(ErrorKind::InertPrime, std::to_string(ell) + " is inert in Q(sqrt " + std::to_string(F.d) + ")");
    int64_t const D = F.disc;
    for (int64_t b = 0; b < 2 * ell; ++b) {
        if (arith::mod(b * b - D, 4 * ell) != 0) continue;
        BinaryQuadraticForm f{ell, b, (b * b - D) / (4 * ell)};
        return {f, reduction_cycle(f)};
    }
    throw Error(ErrorKind::InertPrime, std::to_string(ell));
}

PolyaReport polya_report(quadfield::QuadraticField const & F)
{
    PolyaReport r;
    ClassGroup G(F.disc, Flavor::Wide);
    std::vector<size_t> gens;
    for (auto const & [p, e] : arith::factor(F.disc)) {
        r.ramified_primes.push_back(p);
        r.ramification_indices.push_back(2);
        gens.push_back(G.index_of(prime_form(F, p).cls));
    }
    r.polya_order = static_cast<int64_t>(G.subgroup(gens).size());
    int64_t const two_s = int64_t{1} << r.ramified_primes.size();
    if (two_s % r.polya_order != 0) throw std::logic_error("polya_report: |Po| does not divide 2^s");
    r.h1_order = two_s / r.polya_order;
    return r;
}

} // namespace normlab::formclass
