#include <gtest/gtest.h>

#include <sstream>

#include "normlab/error.hpp"
#include "normlab/harness.hpp"
#include "normlab/report.hpp"

using namespace normlab;
using namespace normlab::harness;

namespace {

ErrorKind kind_of(auto && f)
{
    try {
        f();
    } catch (Error const & e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::OutOfRange;
}

RunConfig small_config()
{
    RunConfig cfg;
    cfg.dmin = 2;
    cfg.dmax = 120;
    cfg.qmax = 120;
    cfg.primes = {3, 5};
    cfg.oracle = true;
    return cfg;
}

} // namespace

TEST(Harness, ConfigParsing)
{
    RunConfig cfg;
    apply_config_text(cfg, "# comment\ndmin = 5\ndmax=300\nprimes = 3, 7\nworkers=2\n\noracle = true\n");
    EXPECT_EQ(cfg.dmin, 5);
    EXPECT_EQ(cfg.dmax, 300);
    EXPECT_EQ(cfg.primes, (std::vector<int64_t>{3, 7}));
    EXPECT_EQ(cfg.workers, 2u);
    EXPECT_TRUE(cfg.oracle);
    EXPECT_NO_THROW(validate(cfg));
    EXPECT_EQ(kind_of([&] { apply_config_text(cfg, "colour = blue\n"); }), ErrorKind::InvalidConfig);
    EXPECT_EQ(kind_of([&] { apply_config_text(cfg, "dmax = lots\n"); }), ErrorKind::InvalidConfig);
    RunConfig bad;
    bad.dmin = 50;
    bad.dmax = 10;
    EXPECT_EQ(kind_of([&] { validate(bad); }), ErrorKind::InvalidConfig);
    EXPECT_EQ(kind_of([&] { apply_config_file(cfg, "/nonexistent/normlab.cfg"); }), ErrorKind::IoError);
}

TEST(Harness, ScanContents)
{
    auto recs = scan(small_config());
    ASSERT_FALSE(recs.empty());
    for (size_t i = 1; i < recs.size(); ++i) EXPECT_LT(recs[i - 1].d, recs[i].d);
    bool saw79 = false;
    for (auto const & r : recs) {
        EXPECT_NE(r.d, 12);
        EXPECT_TRUE(arith::is_squarefree(r.d));
        ASSERT_TRUE(r.oracle_h.has_value());
        EXPECT_EQ(*r.oracle_h, r.h) << r.d;
        EXPECT_FALSE(r.timing_us.has_value());
        ASSERT_EQ(r.per_p.size(), 2u);
        for (auto const & pp : r.per_p) EXPECT_EQ(pp.p_divides_h, r.h % pp.p == 0);
        if (r.d == 79) {
            saw79 = true;
            EXPECT_EQ(r.h, 3);
            EXPECT_EQ(r.h_plus, 6);
            EXPECT_EQ(r.eps_x, 80);
            EXPECT_EQ(r.eps_y, 9);
            EXPECT_EQ(r.eps_norm, 1);
        }
    }
    EXPECT_TRUE(saw79);
}

TEST(Harness, ScanIsDeterministicAcrossWorkers)
{
    auto cfg = small_config();
    cfg.dmax = 700;
    auto a = scan(cfg);
    cfg.workers = 4;
    auto b = scan(cfg);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json_line(a[i]), to_json_line(b[i]));
}

TEST(Harness, JsonAndCsvRoundTrip)
{
    auto recs = scan(small_config());
    std::stringstream ss;
    for (auto const & r : recs) ss << to_json_line(r) << "\n";
    auto back = read_records(ss);
    ASSERT_EQ(back.size(), recs.size());
    for (size_t i = 0; i < recs.size(); ++i) EXPECT_EQ(to_json_line(back[i]), to_json_line(recs[i]));
    std::istringstream bad("{\"d\": 2}\nnot json\n");
    EXPECT_EQ(kind_of([&] { read_records(bad); }), ErrorKind::IoError);

    auto header = csv_header({3, 5});
    auto row = csv_row(recs[0], {3, 5});
    auto commas = [](std::string const & s) { return std::count(s.begin(), s.end(), ','); };
    EXPECT_EQ(commas(header), commas(row));
    EXPECT_EQ(row.rfind("2,8,", 0), 0u);
}

TEST(Harness, StatsAndOrdering)
{
    EXPECT_EQ(kind_of([] { stats({}, 3); }), ErrorKind::EmptyInput);
    auto cfg = small_config();
    cfg.primes.clear();
    cfg.oracle = false;
    cfg.dmax = 400;
    auto recs = scan(cfg);
    auto first = first_by_disc(recs, 100);
    ASSERT_EQ(first.size(), 100u);
    for (size_t i = 1; i < first.size(); ++i) EXPECT_LT(first[i - 1].disc, first[i].disc);
    EXPECT_EQ(first[0].disc, 5);
    EXPECT_EQ(first[1].disc, 8);
    auto f = stats(first, 3);
    size_t hits = 0;
    for (auto const & r : first) hits += r.h % 3 == 0;
    EXPECT_EQ(f.hits, hits);
    EXPECT_EQ(f.count, 100u);
    ASSERT_TRUE(f.reference.has_value());
    EXPECT_NEAR(*f.reference, 0.12574, 1e-9);
    /* a range too short to contain the 300 smallest discriminants */
    EXPECT_EQ(kind_of([&] { first_by_disc(recs, 300); }), ErrorKind::InvalidConfig);
}

TEST(Harness, SplitPatternAndReports)
{
    auto f = poly::from_ints({-1, -2, 1, 1});
    auto g = poly::from_ints({-167, 101, -18, 1}); /* shifted copy of the same field */
    EXPECT_TRUE(same_split_pattern(f, g, 500));
    int64_t where = 0;
    EXPECT_FALSE(same_split_pattern(f, poly::from_ints({1, -4, 1, 1}), 500, &where));
    EXPECT_GT(where, 0);

    auto r = reproduce_appendix_a();
    EXPECT_TRUE(r.passed()) << r.text();
    auto j = r.json();
    EXPECT_NE(j.find("\"claims\""), std::string::npos);

    report::Report rep("t");
    rep.check("a", "equal", "1", "1");
    rep.check("b", "unequal", "1", "2");
    rep.info("c", "note", "x");
    EXPECT_EQ(rep.failures(), 1u);
    EXPECT_FALSE(rep.passed());
}
