#ifndef NORMLAB_HARNESS_HPP
#define NORMLAB_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "normlab/arith.hpp"
#include "normlab/polynomial.hpp"
#include "normlab/report.hpp"

namespace normlab::harness {

struct RunConfig {
    int64_t dmin = 2;
    int64_t dmax = 1000;
    int64_t qmax = 200;
    std::vector<int64_t> primes{3, 5};
    int64_t bound = 1;      /* norm-element search height */
    unsigned workers = 1;
    std::string out;        /* empty: stdout */
    std::string csv;        /* optional CSV export path */
    int64_t group_cap = 64;
    bool timing = false;    /* per-record wall time; makes output run-dependent */
    bool oracle = false;    /* also compute the Minkowski class number */
};

/* Environment variable holding a config file path. */
inline constexpr char const * config_env = "NORMLAB_CONFIG";

/* Flat key=value lines, '#' comments. Throws InvalidConfig / IoError. */
void apply_config_text(RunConfig & cfg, std::string const & text);
void apply_config_file(RunConfig & cfg, std::string const & path);
/* Throws InvalidConfig. */
void validate(RunConfig const & cfg);

struct PerPrimeResult {
    int64_t p = 0;
    bool p_divides_h = false;
    std::optional<int64_t> witness; /* conductor q with norm index > 1 */
    int64_t index = 1;              /* index at the witness, or 1 */
    std::vector<int64_t> tested;
};

struct ScanRecord {
    int64_t d = 0, disc = 0;
    int64_t h = 0, h_plus = 0;
    std::vector<int64_t> divisors;
    BigInt eps_x, eps_y; /* eps = x + y w on the integral basis */
    int eps_norm = 1;
    std::vector<PerPrimeResult> per_p;
    std::optional<int64_t> oracle_h;
    std::optional<int64_t> timing_us;
};

/* One record per squarefree d in [dmin, dmax], delivered to sink in
 * ascending d regardless of the worker count. */
void scan(RunConfig const & cfg, std::function<void(ScanRecord const &)> const & sink);
std::vector<ScanRecord> scan(RunConfig const & cfg);

std::string to_json_line(ScanRecord const & r);
ScanRecord from_json_line(std::string const & line);
/* Throws IoError on malformed lines. */
std::vector<ScanRecord> read_records(std::istream & in);
std::string csv_header(std::vector<int64_t> const & primes);
std::string csv_row(ScanRecord const & r, std::vector<int64_t> const & primes);

/* Records of the `count` smallest discriminants. Throws InvalidConfig when
 * the scan range cannot guarantee that these are the smallest overall. */
std::vector<ScanRecord> first_by_disc(std::vector<ScanRecord> records, size_t count);

struct FrequencyReport {
    int64_t p = 0;
    size_t count = 0, hits = 0;
    double fraction = 0;
    std::optional<double> reference; /* Cohen-Lenstra value, when tabulated */
    std::optional<double> deviation;
};

/* Cohen-Lenstra probabilities for p | h of real quadratic fields. */
std::optional<double> cohen_lenstra_reference(int64_t p);
/* Throws EmptyInput. */
FrequencyReport stats(std::vector<ScanRecord> const & records, int64_t p);
std::string to_string(FrequencyReport const & f);

/* Agreement of the sets {ell : f has r roots mod ell} for every prime
 * ell < bound not dividing either discriminant. On mismatch, sets *where. */
bool same_split_pattern(poly::IntPoly const & f, poly::IntPoly const & g, int64_t bound,
                        int64_t * where = nullptr);

report::Report verify_example_79();
report::Report reproduce_appendix_a();
report::Report verify_thm14(int64_t d, int64_t ell, int64_t p, int64_t n, int64_t qmax);
report::Report detect(int64_t d, int64_t p, int64_t qmax);

} // namespace normlab::harness

#endif /* NORMLAB_HARNESS_HPP */
