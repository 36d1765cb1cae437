#include "normlab/transfer.hpp"
#include "normlab/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace normlab::transfer {

namespace {

[[noreturn]] void invalid(std::string const & what) { throw Error(ErrorKind::InvalidGroup, what); }

void require_subgroup(FiniteGroup const & G, Subset const & H)
{
    if (!is_subgroup(G, H)) throw Error(ErrorKind::NotSubgroup, "H is not a subgroup of G");
}

void require_quotient_setting(FiniteGroup const & G, Subset const & H)
{
    require_subgroup(G, H);
    if (!is_normal(G, H)) throw Error(ErrorKind::NotNormal, "H is not normal in G");
    if (!is_contained(derived_subgroup(G), H))
        throw Error(ErrorKind::CommutatorNotContained, "G' is not contained in H");
}

std::vector<Elem> coset_map(FiniteGroup const & G, Subset const & H, std::vector<Elem> const & reps)
{
    std::vector<Elem> phi(G.order(), static_cast<Elem>(-1));
    for (Elem r : reps)
        for (Elem h : H) {
            Elem x = G.mul(r, h);
            if (phi[x] != static_cast<Elem>(-1)) throw std::invalid_argument("coset representatives overlap");
            phi[x] = r;
        }
    for (Elem x = 0; x < G.order(); ++x)
        if (phi[x] == static_cast<Elem>(-1)) throw std::invalid_argument("coset representatives incomplete");
    return phi;
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> table, size_t order_cap)
    : table_(std::move(table))
{
    size_t const n = table_.size();
    if (n == 0) invalid("empty table");
    if (n > order_cap) invalid("order " + std::to_string(n) + " exceeds the cap " + std::to_string(order_cap));
    for (auto const & row : table_) {
        if (row.size() != n) invalid("table is not square");
        for (Elem x : row)
            if (x >= n) invalid("entry out of range");
    }
    bool found = false;
    for (Elem e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) invalid("no identity element");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) invalid("not associative");
    inverse_.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        auto it = std::find(table_[a].begin(), table_[a].end(), identity_);
        if (it == table_[a].end()) invalid("element without inverse");
        Elem b = static_cast<Elem>(it - table_[a].begin());
        if (table_[b][a] != identity_) invalid("one-sided inverse");
        inverse_[a] = b;
    }
}

Elem FiniteGroup::pow(Elem a, int64_t k) const
{
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Elem r = identity_;
    for (int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int64_t FiniteGroup::element_order(Elem a) const
{
    int64_t k = 1;
    for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const
{
    for (Elem a = 0; a < order(); ++a)
        for (Elem b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::string FiniteGroup::label(Elem a) const
{
    if (a < labels_.size()) return labels_[a];
    return std::to_string(a);
}

FiniteGroup parse_table(std::istream & in, size_t order_cap)
{
    std::vector<std::vector<Elem>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<Elem> row;
        std::string tok;
        while (ls >> tok) {
            size_t used = 0;
            long long v = -1;
            try {
                v = std::stoll(tok, &used);
            } catch (std::exception const &) {
                used = 0;
            }
            if (used != tok.size() || v < 0) invalid("bad table entry '" + tok + "'");
            row.push_back(static_cast<Elem>(v));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return FiniteGroup(std::move(rows), order_cap);
}

std::string format_table(FiniteGroup const & G)
{
    std::ostringstream os;
    for (auto const & row : G.table()) {
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    }
    return os.str();
}

FiniteGroup cyclic_group(int64_t n) { return abelian_group({n}); }

FiniteGroup abelian_group(std::vector<int64_t> const & factors)
{
    int64_t n = 1;
    for (int64_t f : factors) {
        if (f < 1) invalid("factor must be positive");
        n *= f;
    }
    size_t const k = factors.size();
    auto digits = [&](int64_t x) {
        std::vector<int64_t> d(k);
        for (size_t i = k; i-- > 0;) {
            d[i] = x % factors[i];
            x /= factors[i];
        }
        return d;
    };
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    std::vector<std::string> labels;
    for (int64_t a = 0; a < n; ++a) {
        auto da = digits(a);
        std::string s = "(";
        for (size_t i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(da[i]);
        labels.push_back(s + ")");
        for (int64_t b = 0; b < n; ++b) {
            auto db = digits(b);
            int64_t c = 0;
            for (size_t i = 0; i < k; ++i) c = c * factors[i] + (da[i] + db[i]) % factors[i];
            table[a][b] = static_cast<Elem>(c);
        }
    }
    FiniteGroup G(std::move(table), std::max<size_t>(FiniteGroup::default_order_cap, n));
    G.set_invariants(factors);
    G.set_labels(std::move(labels));
    return G;
}

FiniteGroup symmetric_group(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    size_t const N = perms.size();
    std::vector<std::vector<Elem>> table(N, std::vector<Elem>(N));
    std::vector<std::string> labels;
    for (size_t a = 0; a < N; ++a) {
        std::string s;
        for (int x : perms[a]) s += std::to_string(x + 1);
        labels.push_back(s);
        for (size_t b = 0; b < N; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            table[a][b] = static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    FiniteGroup G(std::move(table), std::max<size_t>(FiniteGroup::default_order_cap, N));
    G.set_labels(std::move(labels));
    return G;
}

std::vector<std::vector<int64_t>> abelian_invariants_of_order(int64_t n)
{
    /* partitions of each prime exponent, combined into invariant factors */
    std::vector<std::vector<std::vector<int64_t>>> per_prime; /* prime-power lists, descending */
    for (auto [p, k] : arith::factor(n)) {
        std::vector<std::vector<int64_t>> parts;
        std::vector<int> cur;
        auto rec = [&](auto && self, int left, int maxpart) -> void {
            if (left == 0) {
                std::vector<int64_t> pp;
                for (int e : cur) pp.push_back(arith::ipow(p, e));
                parts.push_back(pp);
                return;
            }
            for (int e = std::min(left, maxpart); e >= 1; --e) {
                cur.push_back(e);
                self(self, left - e, e);
                cur.pop_back();
            }
        };
        rec(rec, k, k);
        per_prime.push_back(parts);
    }
    std::vector<std::vector<int64_t>> out;
    std::vector<size_t> choice(per_prime.size(), 0);
    while (true) {
        size_t len = 0;
        for (size_t i = 0; i < per_prime.size(); ++i) len = std::max(len, per_prime[i][choice[i]].size());
        std::vector<int64_t> inv(len, 1);
        for (size_t i = 0; i < per_prime.size(); ++i) {
            auto const & pp = per_prime[i][choice[i]];
            for (size_t j = 0; j < pp.size(); ++j) inv[len - 1 - j] *= pp[j];
        }
        out.push_back(inv);
        size_t i = 0;
        while (i < choice.size() && ++choice[i] == per_prime[i].size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subset closure(FiniteGroup const & G, Subset const & gens)
{
    std::vector<char> in(G.order(), 0);
    std::deque<Elem> todo{G.identity()};
    in[G.identity()] = 1;
    while (!todo.empty()) {
        Elem a = todo.front();
        todo.pop_front();
        for (Elem g : gens) {
            Elem b = G.mul(a, g);
            if (!in[b]) {
                in[b] = 1;
                todo.push_back(b);
            }
        }
    }
    Subset out;
    for (Elem x = 0; x < G.order(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

bool contains(Subset const & H, Elem x) { return std::binary_search(H.begin(), H.end(), x); }

bool is_contained(Subset const & A, Subset const & B)
{
    return std::includes(B.begin(), B.end(), A.begin(), A.end());
}

bool is_subgroup(FiniteGroup const & G, Subset const & H)
{
    if (H.empty() || !std::is_sorted(H.begin(), H.end())) return false;
    if (std::adjacent_find(H.begin(), H.end()) != H.end()) return false;
    for (Elem x : H)
        if (x >= G.order()) return false;
    if (!contains(H, G.identity())) return false;
    for (Elem a : H)
        for (Elem b : H)
            if (!contains(H, G.mul(a, b))) return false;
    return true;
}

bool is_normal(FiniteGroup const & G, Subset const & H)
{
    for (Elem g = 0; g < G.order(); ++g)
        for (Elem h : H)
            if (!contains(H, G.mul(G.mul(g, h), G.inv(g)))) return false;
    return true;
}

Subset commutator_subgroup(FiniteGroup const & G, Subset const & H)
{
    std::set<Elem> comms;
    for (Elem a : H)
        for (Elem b : H) comms.insert(G.mul(G.mul(a, b), G.inv(G.mul(b, a))));
    return closure(G, Subset(comms.begin(), comms.end()));
}

std::vector<Subset> all_subgroups(FiniteGroup const & G)
{
    std::set<Subset> seen;
    std::deque<Subset> todo;
    Subset triv{G.identity()};
    seen.insert(triv);
    todo.push_back(triv);
    while (!todo.empty()) {
        Subset S = todo.front();
        todo.pop_front();
        for (Elem g = 0; g < G.order(); ++g) {
            if (contains(S, g)) continue;
            Subset gens = S;
            gens.push_back(g);
            Subset T = closure(G, gens);
            if (seen.insert(T).second) todo.push_back(T);
        }
    }
    std::vector<Subset> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](Subset const & a, Subset const & b) {
        return a.size() < b.size();
    });
    return out;
}

std::vector<Elem> coset_representatives(FiniteGroup const & G, Subset const & H)
{
    std::vector<char> seen(G.order(), 0);
    std::vector<Elem> reps;
    for (Elem g = 0; g < G.order(); ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (Elem h : H) seen[G.mul(g, h)] = 1;
    }
    return reps;
}

Elem reduce_mod(FiniteGroup const & G, Subset const & Hprime, Elem x)
{
    Elem best = x;
    for (Elem k : Hprime) best = std::min(best, G.mul(x, k));
    return best;
}

Elem transfer_element(FiniteGroup const & G, Subset const & H, std::vector<Elem> const & reps, Elem g)
{
    auto const phi = coset_map(G, H, reps);
    Elem prod = G.identity();
    for (Elem gi : reps) {
        Elem x = G.mul(g, gi);
        prod = G.mul(prod, G.mul(G.inv(phi[x]), x));
    }
    return prod;
}

Elem transfer(FiniteGroup const & G, Subset const & H, Elem g)
{
    require_subgroup(G, H);
    auto const Hp = commutator_subgroup(G, H);
    return reduce_mod(G, Hp, transfer_element(G, H, coset_representatives(G, H), g));
}

TransferResult restricted_transfer(FiniteGroup const & G, Subset const & H)
{
    require_quotient_setting(G, H);
    auto const Hp = commutator_subgroup(G, H);
    auto const reps = coset_representatives(G, H);
    Elem const trivial = reduce_mod(G, Hp, G.identity());
    TransferResult r;
    r.well_defined_on_quotient = true;
    for (Elem h : H)
        if (reduce_mod(G, Hp, transfer_element(G, H, reps, h)) != trivial) r.well_defined_on_quotient = false;
    r.coset_reps = reps;
    r.vanishes = true;
    for (Elem g : reps) {
        Elem v = reduce_mod(G, Hp, transfer_element(G, H, reps, g));
        r.images.push_back(v);
        if (v != trivial) r.vanishes = false;
    }
    r.hypothesis = (G.order() / H.size()) % H.size() == 0;
    r.consistent_with_lemma = !r.hypothesis || r.vanishes;
    return r;
}

int64_t GroupRingElement::augmentation() const
{
    return std::accumulate(coeffs.begin(), coeffs.end(), int64_t{0});
}

GroupRingElement ring_zero(FiniteGroup const & G) { return {std::vector<int64_t>(G.order(), 0)}; }

GroupRingElement ring_basis(FiniteGroup const & G, Elem g)
{
    auto x = ring_zero(G);
    x.coeffs[g] = 1;
    return x;
}

GroupRingElement delta(FiniteGroup const & G, Elem g)
{
    auto x = ring_basis(G, g);
    x.coeffs[G.identity()] -= 1;
    return x;
}

GroupRingElement operator+(GroupRingElement const & a, GroupRingElement const & b)
{
    GroupRingElement c = a;
    for (size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
    return c;
}

GroupRingElement operator-(GroupRingElement const & a, GroupRingElement const & b)
{
    GroupRingElement c = a;
    for (size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] -= b.coeffs[i];
    return c;
}

GroupRingElement ring_mul(FiniteGroup const & G, GroupRingElement const & a, GroupRingElement const & b)
{
    auto c = ring_zero(G);
    for (Elem i = 0; i < G.order(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (Elem j = 0; j < G.order(); ++j)
            if (b.coeffs[j] != 0) c.coeffs[G.mul(i, j)] += a.coeffs[i] * b.coeffs[j];
    }
    return c;
}

std::string to_string(LatticeKind k)
{
    switch (k) {
    case LatticeKind::IG2: return "I_G^2";
    case LatticeKind::IGIH: return "I_G I_H";
    case LatticeKind::IHplusIGIH: return "I_H + I_G I_H";
    }
    return "?";
}

namespace {

lattice::Vec to_vec(GroupRingElement const & x)
{
    return lattice::Vec(x.coeffs.begin(), x.coeffs.end());
}

} // namespace

lattice::Lattice augmentation_lattice(FiniteGroup const & G, Subset const & H, LatticeKind kind)
{
    require_subgroup(G, H);
    lattice::Lattice L(G.order());
    Elem const e = G.identity();
    /* products (g - 1)(x - 1), x ranging over G or over H */
    Subset all(G.order());
    std::iota(all.begin(), all.end(), Elem{0});
    Subset const & second = kind == LatticeKind::IG2 ? all : H;
    for (Elem g = 0; g < G.order(); ++g) {
        if (g == e) continue;
        auto dg = delta(G, g);
        for (Elem h : second)
            if (h != e) L.add(to_vec(ring_mul(G, dg, delta(G, h))));
    }
    if (kind == LatticeKind::IHplusIGIH)
        for (Elem h : H)
            if (h != e) L.add(to_vec(delta(G, h)));
    return L;
}

bool in_lattice(lattice::Lattice const & L, GroupRingElement const & x) { return L.contains(to_vec(x)); }

bool augmentation_membership(FiniteGroup const & G, Subset const & H, GroupRingElement const & x,
                             LatticeKind kind)
{
    return in_lattice(augmentation_lattice(G, H, kind), x);
}

DiagramReport diagram_check(FiniteGroup const & G, Subset const & H)
{
    require_quotient_setting(G, H);
    DiagramReport r;
    r.hypothesis = (G.order() / H.size()) % H.size() == 0;
    auto const L = augmentation_lattice(G, H, LatticeKind::IGIH);
    auto const reps = coset_representatives(G, H);
    auto N = ring_zero(G);
    for (Elem gi : reps) N.coeffs[gi] += 1;
    for (Elem g = 0; g < G.order(); ++g) {
        auto lhs = ring_mul(G, delta(G, g), N);
        auto rhs = delta(G, transfer_element(G, H, reps, g));
        if (!in_lattice(L, lhs - rhs)) r.violations.push_back(g);
    }
    r.commutes = r.violations.empty();
    return r;
}

} // namespace normlab::transfer
