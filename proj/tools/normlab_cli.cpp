#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "normlab/compose.hpp"
#include "normlab/cyclicext.hpp"
#include "normlab/error.hpp"
#include "normlab/formclass.hpp"
#include "normlab/harness.hpp"
#include "normlab/normtest.hpp"
#include "normlab/quadfield.hpp"
#include "normlab/transfer.hpp"

using namespace normlab;

namespace {

constexpr int exit_pass = 0, exit_discrepancy = 1, exit_usage = 2;

int emit(report::Report const & r, bool as_json)
{
    std::cout << (as_json ? r.json() + "\n" : r.text());
    return r.passed() ? exit_pass : exit_discrepancy;
}

std::string join(std::vector<int64_t> const & v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return "[" + s + "]";
}

int cmd_field(int64_t d)
{
    auto F = quadfield::make_field(d);
    auto eps = quadfield::fundamental_unit(F);
    std::cout << "d = " << F.d << "\n"
              << "disc = " << F.disc << "\n"
              << "integral basis = {1, " << (F.basis == quadfield::BasisKind::HalfInteger ? "(1 + sqrt d)/2" : "sqrt d")
              << "}\n"
              << "eps = " << eps.value << ", norm " << eps.unit_norm << "\n"
              << "h = " << formclass::class_group(F, formclass::Flavor::Wide).h
              << ", h+ = " << formclass::class_group(F, formclass::Flavor::Narrow).h << "\n";
    std::cout << "splitting of primes < 50:";
    for (int64_t ell : arith::primes_up_to(50))
        std::cout << " " << ell << ":" << quadfield::to_string(quadfield::splitting_type(F, ell));
    std::cout << "\n";
    return exit_pass;
}

int cmd_unit(int64_t d)
{
    auto F = quadfield::make_field(d);
    auto eps = quadfield::fundamental_unit(F);
    auto [x, y] = eps.value.basis_coords();
    std::cout << "eps = " << eps.value << "\n"
              << "basis coordinates = (" << x << ", " << y << ")\n"
              << "norm = " << eps.unit_norm << "\n"
              << "period = " << join(quadfield::unit_cf_period(F)) << "\n";
    return exit_pass;
}

int cmd_classgroup(int64_t d, bool narrow)
{
    auto F = quadfield::make_field(d);
    auto st = formclass::class_group(F, narrow ? formclass::Flavor::Narrow : formclass::Flavor::Wide);
    std::cout << formclass::to_string(st.flavor) << " class group of disc " << F.disc << "\n"
              << "h = " << st.h << "\n"
              << "elementary divisors = " << join(st.elementary_divisors) << "\n";
    for (size_t i = 0; i < st.generators.size(); ++i)
        std::cout << "generator " << i << " = " << st.generators[i].canonical << " (order "
                  << st.elementary_divisors[i] << ")\n";
    auto pr = formclass::polya_report(F);
    std::cout << "ramified primes = " << join(pr.ramified_primes) << "\n"
              << "|Po(N)| = " << pr.polya_order << ", |H^1| = " << pr.h1_order << "\n";
    return exit_pass;
}

int cmd_ext(int64_t q, int64_t p, int64_t n)
{
    auto D = cyclicext::period_polynomial(q, p, n);
    std::cout << "degree = " << D.degree() << "\n"
              << "period polynomial = " << poly::to_string(D.period_poly()) << "\n"
              << "disc(period polynomial) = " << D.poly_disc() << "\n"
              << "disc(period basis) = " << D.basis_discriminant() << "\n"
              << "[O_K : Z[eta]] = " << D.power_index() << "\n";
    auto t = cyclicext::tower_certificate(q, p, n);
    std::cout << "tower = " << (t.exists ? t.witness : "none") << "\n";
    return exit_pass;
}

int cmd_normindex(int64_t d, int64_t q, int64_t p, int64_t n, bool as_json)
{
    auto F = quadfield::make_field(d);
    auto D = cyclicext::period_polynomial(q, p, n);
    auto r = normtest::norm_index(F, D);
    report::Report rep("Norm index: d = " + std::to_string(d) + ", q = " + std::to_string(q) + ", p^n = " +
                       std::to_string(D.degree()));
    for (auto const & v : r.verdicts)
        rep.info(v.prime.label(), "eps^" + std::to_string(v.exponent_used) + " in the residue field",
                 v.power_value.str(),
                 std::string(v.is_norm ? "local norm" : "not a local norm") + ", local order " +
                     std::to_string(v.local_order));
    rep.info("index", "lcm of local orders", std::to_string(r.index),
             "field-element norms; the unit-norm index may differ");
    rep.info("ratio", "p-part of the H^1 ratio", std::to_string(normtest::cohomological_ratio(r)),
             r.c ? "c = 1" : "c undetermined in {1, 2}");
    return emit(rep, as_json);
}

int cmd_transfer(std::string const & path, std::string const & subgroup, bool as_json)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
    auto G = transfer::parse_table(in);
    transfer::Subset H;
    std::istringstream ss(subgroup);
    std::string tok;
    while (std::getline(ss, tok, ',')) H.push_back(static_cast<transfer::Elem>(std::stoul(tok)));
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());
    auto r = transfer::restricted_transfer(G, H);
    auto dg = transfer::diagram_check(G, H);
    report::Report rep("Restricted transfer, |G| = " + std::to_string(G.order()) + ", |H| = " +
                       std::to_string(H.size()));
    for (size_t i = 0; i < r.coset_reps.size(); ++i)
        rep.info("Ver(" + G.label(r.coset_reps[i]) + ")", "image in H/H'", G.label(r.images[i]));
    rep.info("defined", "Ver(h) in H' for all h in H", r.well_defined_on_quotient ? "true" : "false");
    rep.info("hypothesis", "|H| divides [G:H]", r.hypothesis ? "true" : "false");
    rep.check_true("vanishing", "hypothesis implies the restricted transfer vanishes", r.consistent_with_lemma,
                   r.vanishes ? "vanishes" : "does not vanish");
    rep.check_true("diagram", "S(g - 1) = Ver(g) - 1 mod I_G I_H for every g", dg.commutes,
                   std::to_string(dg.violations.size()) + " violations");
    return emit(rep, as_json);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"normlab: real quadratic class groups, norm indices and transfer checks"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print reports as JSON");

    int64_t d = 0, q = 0, p = 3, n = 1, ell = 3, qmax = 200;
    bool narrow = false;

    auto * field = app.add_subcommand("field", "Discriminant, unit, class numbers and splitting");
    field->add_option("--d", d, "Squarefree d > 1")->required();
    auto * unit = app.add_subcommand("unit", "Fundamental unit");
    unit->add_option("--d", d)->required();
    auto * classgroup = app.add_subcommand("classgroup", "Class group structure");
    classgroup->add_option("--d", d)->required();
    classgroup->add_flag("--narrow", narrow, "Narrow instead of wide group");
    auto * ext = app.add_subcommand("ext", "Cyclic field of prime conductor q and degree p^n");
    ext->add_option("--q", q)->required();
    ext->add_option("--p", p)->required();
    ext->add_option("--n", n);
    auto * normindex = app.add_subcommand("normindex", "Local norm tests of eps at the primes above q");
    normindex->add_option("--d", d)->required();
    normindex->add_option("--q", q)->required();
    normindex->add_option("--p", p)->required();
    normindex->add_option("--n", n);

    auto * verify = app.add_subcommand("verify", "Composite checks");
    verify->require_subcommand(1);
    auto * thm14 = verify->add_subcommand("thm14", "Order of the class above ell against the norm index");
    thm14->add_option("--d", d)->required();
    thm14->add_option("--l", ell)->required();
    thm14->add_option("--p", p)->required();
    thm14->add_option("--n", n);
    thm14->add_option("--qmax", qmax)->required();
    auto * ex79 = verify->add_subcommand("ex79", "Q(sqrt 79) with conductor 37");
    auto * appa = verify->add_subcommand("appendixa", "Q(sqrt 79) with x^3 - 18x^2 + 101x - 167");

    auto * det = app.add_subcommand("detect", "Search for a conductor witnessing p | h");
    det->add_option("--d", d)->required();
    det->add_option("--p", p)->required();
    det->add_option("--qmax", qmax)->required();

    harness::RunConfig cfg;
    std::string config_path;
    auto * scan = app.add_subcommand("scan", "Scan squarefree d and write one JSON record per line");
    scan->add_option("--config", config_path, "key=value config file");
    auto * o_dmin = scan->add_option("--dmin", cfg.dmin);
    auto * o_dmax = scan->add_option("--dmax", cfg.dmax);
    auto * o_qmax = scan->add_option("--qmax", cfg.qmax);
    auto * o_p = scan->add_option("--p", cfg.primes, "Odd primes")->expected(1, -1);
    auto * o_out = scan->add_option("--out", cfg.out, "Output path (default stdout)");
    auto * o_csv = scan->add_option("--csv", cfg.csv, "Also write a CSV file");
    auto * o_workers = scan->add_option("--workers", cfg.workers);
    auto * o_timing = scan->add_flag("--timing", cfg.timing, "Add per-record timings");
    auto * o_oracle = scan->add_flag("--oracle", cfg.oracle, "Add the Minkowski-bound class number");

    std::string in_path;
    std::vector<int64_t> stat_primes;
    size_t first = 0;
    auto * stats = app.add_subcommand("stats", "Frequency of p | h in scan records");
    stats->add_option("--in", in_path)->required();
    stats->add_option("--p", stat_primes)->required()->expected(1, -1);
    stats->add_option("--first", first, "Use only the records of the smallest discriminants");

    std::string table_file, subgroup;
    auto * tr = app.add_subcommand("transfer", "Restricted transfer and diagram check for a table");
    tr->add_option("--table-file", table_file)->required();
    tr->add_option("--subgroup", subgroup, "Comma-separated element indices")->required();

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*field) return cmd_field(d);
        if (*unit) return cmd_unit(d);
        if (*classgroup) return cmd_classgroup(d, narrow);
        if (*ext) return cmd_ext(q, p, n);
        if (*normindex) return cmd_normindex(d, q, p, n, as_json);
        if (*thm14) return emit(harness::verify_thm14(d, ell, p, n, qmax), as_json);
        if (*ex79) return emit(harness::verify_example_79(), as_json);
        if (*appa) return emit(harness::reproduce_appendix_a(), as_json);
        if (*det) return emit(harness::detect(d, p, qmax), as_json);
        if (*tr) return cmd_transfer(table_file, subgroup, as_json);
        if (*scan) {
            /* environment file, then --config, then explicit flags */
            harness::RunConfig merged;
            if (char const * env = std::getenv(harness::config_env)) harness::apply_config_file(merged, env);
            if (!config_path.empty()) harness::apply_config_file(merged, config_path);
            if (o_dmin->count()) merged.dmin = cfg.dmin;
            if (o_dmax->count()) merged.dmax = cfg.dmax;
            if (o_qmax->count()) merged.qmax = cfg.qmax;
            if (o_p->count()) merged.primes = cfg.primes;
            if (o_out->count()) merged.out = cfg.out;
            if (o_csv->count()) merged.csv = cfg.csv;
            if (o_workers->count()) merged.workers = cfg.workers;
            if (o_timing->count()) merged.timing = cfg.timing;
            if (o_oracle->count()) merged.oracle = cfg.oracle;
            harness::validate(merged);

            std::ofstream file, csv;
            std::ostream * out = &std::cout;
            if (!merged.out.empty()) {
                file.open(merged.out);
                if (!file) throw Error(ErrorKind::IoError, "cannot write " + merged.out);
                out = &file;
            }
            if (!merged.csv.empty()) {
                csv.open(merged.csv);
                if (!csv) throw Error(ErrorKind::IoError, "cannot write " + merged.csv);
                csv << harness::csv_header(merged.primes) << "\n";
            }
            bool mismatch = false;
            harness::scan(merged, [&](harness::ScanRecord const & r) {
                *out << harness::to_json_line(r) << "\n";
                if (csv.is_open()) csv << harness::csv_row(r, merged.primes) << "\n";
                if (r.oracle_h && *r.oracle_h != r.h) mismatch = true;
            });
            if (!*out) throw Error(ErrorKind::IoError, "write failed");
            return mismatch ? exit_discrepancy : exit_pass;
        }
        if (*stats) {
            std::ifstream in(in_path);
            if (!in) throw Error(ErrorKind::IoError, "cannot read " + in_path);
            auto records = harness::read_records(in);
            if (first > 0) records = harness::first_by_disc(std::move(records), first);
            for (int64_t sp : stat_primes) std::cout << harness::to_string(harness::stats(records, sp)) << "\n";
            return exit_pass;
        }
    } catch (Error const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
