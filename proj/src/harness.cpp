#include "normlab/harness.hpp"
#include "normlab/cyclicext.hpp"
#include "normlab/error.hpp"
#include "normlab/formclass.hpp"
#include "normlab/normtest.hpp"
#include "normlab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace normlab::harness {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string s)
{
    auto const ws = " \t\r\n";
    s.erase(0, s.find_first_not_of(ws));
    auto e = s.find_last_not_of(ws);
    s.erase(e == std::string::npos ? 0 : e + 1);
    return s;
}

int64_t parse_int(std::string const & key, std::string const & v)
{
    size_t used = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &used);
    } catch (std::exception const &) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw Error(ErrorKind::InvalidConfig, key + ": not an integer: '" + v + "'");
    return x;
}

bool parse_bool(std::string const & key, std::string const & v)
{
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw Error(ErrorKind::InvalidConfig, key + ": not a boolean: '" + v + "'");
}

std::string str(int64_t x) { return std::to_string(x); }

std::string join(std::vector<int64_t> const & v, char const * sep = ",")
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

} // namespace

void apply_config_text(RunConfig & cfg, std::string const & text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "dmin") cfg.dmin = parse_int(key, val);
        else if (key == "dmax") cfg.dmax = parse_int(key, val);
        else if (key == "qmax") cfg.qmax = parse_int(key, val);
        else if (key == "bound") cfg.bound = parse_int(key, val);
        else if (key == "workers") cfg.workers = static_cast<unsigned>(parse_int(key, val));
        else if (key == "group_cap") cfg.group_cap = parse_int(key, val);
        else if (key == "out") cfg.out = val;
        else if (key == "csv") cfg.csv = val;
        else if (key == "timing") cfg.timing = parse_bool(key, val);
        else if (key == "oracle") cfg.oracle = parse_bool(key, val);
        else if (key == "primes") {
            cfg.primes.clear();
            std::istringstream ps(val);
            std::string tok;
            while (std::getline(ps, tok, ',')) cfg.primes.push_back(parse_int(key, trim(tok)));
        } else
            throw Error(ErrorKind::InvalidConfig, "unknown key '" + key + "'");
    }
}

void apply_config_file(RunConfig & cfg, std::string const & path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot read config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    apply_config_text(cfg, ss.str());
}

void validate(RunConfig const & cfg)
{
    if (cfg.dmin < 2) throw Error(ErrorKind::InvalidConfig, "dmin must be >= 2");
    if (cfg.dmax < cfg.dmin) throw Error(ErrorKind::InvalidConfig, "dmax must be >= dmin");
    if (cfg.qmax < 2) throw Error(ErrorKind::InvalidConfig, "qmax must be >= 2");
    if (cfg.bound < 1) throw Error(ErrorKind::InvalidConfig, "bound must be positive");
    if (cfg.workers < 1) throw Error(ErrorKind::InvalidConfig, "workers must be positive");
    if (cfg.group_cap < 1) throw Error(ErrorKind::InvalidConfig, "group_cap must be positive");
    for (int64_t p : cfg.primes)
        if (p < 3 || !arith::is_prime(static_cast<uint64_t>(p)))
            throw Error(ErrorKind::InvalidConfig, "primes must be odd primes, got " + std::to_string(p));
}

namespace {

using Conductors = std::map<int64_t, std::vector<cyclicext::CyclicExtensionDescriptor>>;

ScanRecord scan_one(int64_t d, RunConfig const & cfg, Conductors const & conductors)
{
    auto const t0 = std::chrono::steady_clock::now();
    auto const F = quadfield::make_field(d);
    ScanRecord r;
    r.d = d;
    r.disc = F.disc;
    formclass::ClassGroup narrow(F.disc, formclass::Flavor::Narrow);
    formclass::ClassGroup wide(F.disc, formclass::Flavor::Wide);
    r.h_plus = static_cast<int64_t>(narrow.size());
    auto const st = wide.structure();
    r.h = st.h;
    r.divisors = st.elementary_divisors;
    auto const eps = quadfield::fundamental_unit(F);
    std::tie(r.eps_x, r.eps_y) = eps.value.basis_coords();
    r.eps_norm = eps.unit_norm;
    for (int64_t p : cfg.primes) {
        PerPrimeResult pp;
        pp.p = p;
        pp.p_divides_h = r.h % p == 0;
        auto const v = normtest::detect_p_divisibility(F, p, cfg.qmax, conductors.at(p));
        pp.witness = v.witness;
        pp.index = v.witness_index;
        pp.tested = v.tested;
        r.per_p.push_back(pp);
    }
    if (cfg.oracle) r.oracle_h = oracle::minkowski_class_number(F.disc);
    if (cfg.timing)
        r.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0)
                          .count();
    return r;
}

} // namespace

void scan(RunConfig const & cfg, std::function<void(ScanRecord const &)> const & sink)
{
    validate(cfg);
    Conductors conductors;
    for (int64_t p : cfg.primes) conductors[p] = normtest::tower_conductors(p, 1, cfg.qmax);

    std::vector<int64_t> ds;
    for (int64_t d = cfg.dmin; d <= cfg.dmax; ++d)
        if (arith::is_squarefree(d)) ds.push_back(d);

    /* blocks keep memory bounded; inside a block workers pull indices */
    size_t const block = 512;
    for (size_t start = 0; start < ds.size(); start += block) {
        size_t const end = std::min(ds.size(), start + block);
        std::vector<ScanRecord> out(end - start);
        std::atomic<size_t> next{start};
        std::exception_ptr failure;
        std::mutex fail_mu;
        auto work = [&] {
            for (size_t i = next++; i < end; i = next++) {
                try {
                    out[i - start] = scan_one(ds[i], cfg, conductors);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fail_mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        unsigned const w = std::min<unsigned>(cfg.workers, static_cast<unsigned>(end - start));
        std::vector<std::thread> pool;
        for (unsigned k = 1; k < w; ++k) pool.emplace_back(work);
        work();
        for (auto & t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
        for (auto const & r : out) sink(r);
    }
}

std::vector<ScanRecord> scan(RunConfig const & cfg)
{
    std::vector<ScanRecord> out;
    scan(cfg, [&](ScanRecord const & r) { out.push_back(r); });
    return out;
}

std::string to_json_line(ScanRecord const & r)
{
    json j;
    j["d"] = r.d;
    j["disc"] = r.disc;
    j["h"] = r.h;
    j["h_plus"] = r.h_plus;
    j["divisors"] = r.divisors;
    j["eps"] = json{{"x", normlab::to_string(r.eps_x)}, {"y", normlab::to_string(r.eps_y)}, {"norm", r.eps_norm}};
    j["per_p"] = json::array();
    for (auto const & pp : r.per_p) {
        json pj;
        pj["p"] = pp.p;
        pj["p_divides_h"] = pp.p_divides_h;
        pj["verdict"] = pp.witness ? "witness" : "none";
        pj["witness_q"] = pp.witness ? json(*pp.witness) : json(nullptr);
        pj["index"] = pp.index;
        pj["tested"] = pp.tested;
        j["per_p"].push_back(pj);
    }
    if (r.oracle_h) j["oracle_h"] = *r.oracle_h;
    if (r.timing_us) j["timing_us"] = *r.timing_us;
    return j.dump();
}

ScanRecord from_json_line(std::string const & line)
{
    ScanRecord r;
    try {
        auto j = json::parse(line);
        r.d = j.at("d").get<int64_t>();
        r.disc = j.at("disc").get<int64_t>();
        r.h = j.at("h").get<int64_t>();
        r.h_plus = j.at("h_plus").get<int64_t>();
        r.divisors = j.at("divisors").get<std::vector<int64_t>>();
        r.eps_x = BigInt(j.at("eps").at("x").get<std::string>());
        r.eps_y = BigInt(j.at("eps").at("y").get<std::string>());
        r.eps_norm = j.at("eps").at("norm").get<int>();
        for (auto const & pj : j.at("per_p")) {
            PerPrimeResult pp;
            pp.p = pj.at("p").get<int64_t>();
            pp.p_divides_h = pj.at("p_divides_h").get<bool>();
            if (!pj.at("witness_q").is_null()) pp.witness = pj.at("witness_q").get<int64_t>();
            pp.index = pj.at("index").get<int64_t>();
            pp.tested = pj.at("tested").get<std::vector<int64_t>>();
            r.per_p.push_back(pp);
        }
        if (j.contains("oracle_h")) r.oracle_h = j.at("oracle_h").get<int64_t>();
        if (j.contains("timing_us")) r.timing_us = j.at("timing_us").get<int64_t>();
    } catch (std::exception const & e) {
        throw Error(ErrorKind::IoError, std::string("bad record: ") + e.what());
    }
    return r;
}

std::vector<ScanRecord> read_records(std::istream & in)
{
    std::vector<ScanRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        out.push_back(from_json_line(line));
    }
    return out;
}

std::string csv_header(std::vector<int64_t> const & primes)
{
    std::string s = "d,disc,h,h_plus,divisors,eps_x,eps_y,eps_norm";
    for (int64_t p : primes) {
        auto P = std::to_string(p);
        s += ",p" + P + "_divides_h,p" + P + "_witness_q,p" + P + "_index";
    }
    return s;
}

std::string csv_row(ScanRecord const & r, std::vector<int64_t> const & primes)
{
    std::ostringstream os;
    os << r.d << "," << r.disc << "," << r.h << "," << r.h_plus << "," << join(r.divisors, " ") << ","
       << r.eps_x << "," << r.eps_y << "," << r.eps_norm;
    for (int64_t p : primes) {
        auto it = std::find_if(r.per_p.begin(), r.per_p.end(), [p](PerPrimeResult const & x) { return x.p == p; });
        if (it == r.per_p.end()) {
            os << ",,,";
            continue;
        }
        os << "," << (it->p_divides_h ? 1 : 0) << "," << (it->witness ? std::to_string(*it->witness) : "") << ","
           << it->index;
    }
    return os.str();
}

std::vector<ScanRecord> first_by_disc(std::vector<ScanRecord> records, size_t count)
{
    if (records.size() < count)
        throw Error(ErrorKind::InvalidConfig, "only " + std::to_string(records.size()) + " records, need " +
                                                  std::to_string(count));
    int64_t dmin = records.front().d, dmax = records.front().d;
    for (auto const & r : records) {
        dmin = std::min(dmin, r.d);
        dmax = std::max(dmax, r.d);
    }
    std::stable_sort(records.begin(), records.end(),
                     [](ScanRecord const & a, ScanRecord const & b) { return a.disc < b.disc; });
    records.resize(count);
    /* a discriminant D comes from some d <= D, so the scan must cover [2, D] */
    if (dmin > 2 || records.back().disc > dmax)
        throw Error(ErrorKind::InvalidConfig, "scan over d in [" + std::to_string(dmin) + ", " +
                                                  std::to_string(dmax) + "] does not contain every discriminant up to " +
                                                  std::to_string(records.back().disc));
    return records;
}

std::optional<double> cohen_lenstra_reference(int64_t p)
{
    switch (p) {
    case 3: return 0.12574;
    case 5: return 0.03772;
    case 7: return 0.01796;
    case 9: return 0.01572;
    default: return std::nullopt;
    }
}

FrequencyReport stats(std::vector<ScanRecord> const & records, int64_t p)
{
    if (records.empty()) throw Error(ErrorKind::EmptyInput, "no records");
    FrequencyReport f;
    f.p = p;
    f.count = records.size();
    for (auto const & r : records)
        if (r.h % p == 0) ++f.hits;
    f.fraction = static_cast<double>(f.hits) / static_cast<double>(f.count);
    f.reference = cohen_lenstra_reference(p);
    if (f.reference) f.deviation = std::fabs(f.fraction - *f.reference);
    return f;
}

std::string to_string(FrequencyReport const & f)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "p=%lld count=%zu hits=%zu fraction=%.5f", static_cast<long long>(f.p), f.count,
                  f.hits, f.fraction);
    std::string s = buf;
    if (f.reference) {
        std::snprintf(buf, sizeof buf, " reference=%.5f deviation=%.5f", *f.reference, *f.deviation);
        s += buf;
    }
    return s;
}

bool same_split_pattern(poly::IntPoly const & f, poly::IntPoly const & g, int64_t bound, int64_t * where)
{
    BigInt const df = poly::discriminant(f), dg = poly::discriminant(g);
    for (int64_t ell : arith::primes_up_to(bound - 1)) {
        if (arith::mod(df, ell) == 0 || arith::mod(dg, ell) == 0) continue;
        if (arith::mod(f.back(), ell) == 0 || arith::mod(g.back(), ell) == 0) continue;
        if (poly::root_count_mod(f, ell) != poly::root_count_mod(g, ell)) {
            if (where) *where = ell;
            return false;
        }
    }
    return true;
}

namespace {

std::string verdict_detail(normtest::NormIndexReport const & r)
{
    std::string s;
    for (auto const & v : r.verdicts) {
        if (!s.empty()) s += "; ";
        s += v.prime.label() + ": eps -> " + v.reduced.str() + ", ^" + std::to_string(v.exponent_used) + " = " +
             v.power_value.str() + ", local order " + std::to_string(v.local_order);
    }
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

report::Report verify_example_79()
{
    auto const t0 = std::chrono::steady_clock::now();
    report::Report rep("Example: Q(sqrt 79) with the cubic field of conductor 37");
    auto const F = quadfield::make_field(79);
    try {
        auto const cg = formclass::class_group(F, formclass::Flavor::Wide);
        rep.check("class-number", "h(Q(sqrt 79))", "3", str(cg.h));
    } catch (std::exception const & e) {
        rep.error("class-number", "h(Q(sqrt 79))", e.what());
    }
    try {
        auto const eps = quadfield::fundamental_unit(F);
        auto const pell = oracle::pell_bruteforce(79, 1000);
        std::string expected = "none";
        if (pell)
            expected = quadfield::QuadInteger(79, pell->x, pell->y, pell->den).str() + " (norm " +
                       std::to_string(pell->norm) + ")";
        rep.check("fundamental-unit", "eps against the Pell brute force", expected,
                  eps.value.str() + " (norm " + std::to_string(eps.unit_norm) + ")");
    } catch (std::exception const & e) {
        rep.error("fundamental-unit", "eps against the Pell brute force", e.what());
    }
    try {
        auto const desc = cyclicext::period_polynomial(37, 3, 1);
        auto const ref = poly::from_ints({-11, 21, -10, 1});
        int64_t where = 0;
        bool same = same_split_pattern(desc.period_poly(), ref, 1000, &where);
        rep.check_true("conductor-37-field",
                       "period cubic " + poly::to_string(desc.period_poly()) + " defines the field of x^3 - 10x^2 + 21x - 11",
                       same, same ? "split patterns agree below 1000" : "patterns differ at " + str(where));
        rep.check("conductor-37-disc", "disc of the conductor-37 period cubic", "1369",
                  normlab::to_string(desc.poly_disc()));
        auto const prop = cyclicext::properness_report(F, desc, 3);
        rep.check_true("properness", "q = 37 is proper for the prime above 3", prop.overall,
                       std::string("inert class prime ") + (prop.inert_class_prime ? "yes" : "no") + ", tower " +
                           (prop.tower.exists ? "yes" : "no") + ", 37 inert in N " +
                           (prop.disc_primes_inert_in_N ? "yes" : "no"));
        auto const idx = normtest::norm_index(F, desc);
        rep.check("norm-index", "norm index of eps at the primes above 37", "3", str(idx.index),
                  verdict_detail(idx) +
                      ". At an inert q the image of a unit lies in the norm-one subgroup of order dividing "
                      "2(q+1), which is prime to 3, so the local test cannot detect a non-norm here.");
        auto const pf = formclass::prime_form(F, 3);
        int64_t const order = formclass::wide_order(pf.cls);
        rep.check("class-order", "order of the class of " + formclass::to_string(pf.form), "3", str(order));
        rep.check("order-equals-index", "order of the class above 3 equals the norm index at q = 37", str(order),
                  str(idx.index));
    } catch (std::exception const & e) {
        rep.error("conductor-37", "descriptor, properness and index at q = 37", e.what());
    }
    double const secs = seconds_since(t0);
    rep.check_true("runtime", "completes within 5 s", secs < 5.0, std::to_string(secs) + " s");
    return rep;
}

report::Report reproduce_appendix_a()
{
    auto const t0 = std::chrono::steady_clock::now();
    report::Report rep("Appendix program: Q(sqrt 79) with x^3 - 18x^2 + 101x - 167");
    auto const F = quadfield::make_field(79);
    auto const cubic = poly::from_ints({-167, 101, -18, 1});
    try {
        rep.check("cubic-disc", "disc(x^3 - 18x^2 + 101x - 167)", "49", normlab::to_string(poly::discriminant(cubic)));
        auto const desc = cyclicext::period_polynomial(7, 3, 1);
        int64_t where = 0;
        bool same = same_split_pattern(cubic, desc.period_poly(), 1000, &where);
        rep.check_true("conductor-7-field", "the cubic defines the conductor-7 field " + poly::to_string(desc.period_poly()),
                       same, same ? "split patterns agree below 1000" : "patterns differ at " + str(where));
        auto const idx = normtest::norm_index(F, desc);
        rep.check("index-at-7", "norm index of eps at the two primes above 7", "3", str(idx.index),
                  verdict_detail(idx));
        auto const cg = formclass::class_group(F, formclass::Flavor::Wide);
        rep.check("index-equals-h", "printed pair: index and class number", str(cg.h), str(idx.index));
        auto const prop = cyclicext::properness_report(F, desc, 3);
        rep.check_true("condition-c-flag", "condition (c) fails for q = 7 because 7 splits in N",
                       !prop.disc_primes_inert_in_N,
                       std::string("7 is ") + std::string(quadfield::to_string(quadfield::splitting_type(F, 7))) +
                           " in N; overall properness " + (prop.overall ? "true" : "false"),
                       "the appendix conductor lies outside the properness hypotheses");
    } catch (std::exception const & e) {
        rep.error("appendix", "appendix reproduction", e.what());
    }
    double const secs = seconds_since(t0);
    rep.check_true("runtime", "completes within 5 s", secs < 5.0, std::to_string(secs) + " s");
    return rep;
}

report::Report verify_thm14(int64_t d, int64_t ell, int64_t p, int64_t n, int64_t qmax)
{
    report::Report rep("Class order against norm index: d = " + str(d) + ", ell = " + str(ell) + ", p^n = " +
                       str(p) + "^" + str(n));
    try {
        auto const F = quadfield::make_field(d);
        auto const cmp = normtest::verify_class_order(F, ell, p, n, qmax);
        rep.info("class-order", "order of " + formclass::to_string(cmp.form) + " in Cl(N)", str(cmp.order),
                 "p-part " + str(cmp.order_p_part));
        for (auto const & rec : cmp.records)
            rep.check("q=" + str(rec.q), "norm index at proper conductor " + str(rec.q), str(cmp.order_p_part),
                      str(rec.index.index), verdict_detail(rec.index));
    } catch (Error const & e) {
        rep.error("setup", "proper conductors up to " + str(qmax), e.what());
    }
    return rep;
}

report::Report detect(int64_t d, int64_t p, int64_t qmax)
{
    report::Report rep("p-divisibility search: d = " + str(d) + ", p = " + str(p) + ", q <= " + str(qmax));
    auto const F = quadfield::make_field(d);
    auto const v = normtest::detect_p_divisibility(F, p, qmax);
    auto const h = formclass::class_group(F, formclass::Flavor::Wide).h;
    rep.info("tested", "conductors passing (c) and the tower", v.tested.empty() ? "none" : join(v.tested));
    if (v.witness) {
        rep.check_true("soundness", "witness q = " + str(*v.witness) + " implies p | h", h % p == 0,
                       "h = " + str(h) + ", index " + str(v.witness_index));
    } else {
        rep.info("witness", "no conductor with norm index > 1", "none",
                 h % p == 0 ? "p divides h = " + str(h) + " without a witness" : "h = " + str(h));
    }
    return rep;
}

} // namespace normlab::harness
