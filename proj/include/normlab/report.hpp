#ifndef NORMLAB_REPORT_HPP
#define NORMLAB_REPORT_HPP

#include <string>
#include <vector>

namespace normlab::report {

enum class Verdict { Pass, Fail, Info };
std::string to_string(Verdict v);

struct Claim {
    std::string id;
    std::string statement;
    std::string expected;
    std::string observed;
    Verdict verdict = Verdict::Info;
    std::string note;
};

/* Accumulates claims; failures never abort the run that produced them. */
class Report
{
    std::string title_;
    std::vector<Claim> claims_;

    public:
    explicit Report(std::string title) : title_(std::move(title)) {}

    std::string const & title() const { return title_; }
    std::vector<Claim> const & claims() const { return claims_; }

    Claim & add(Claim c);
    /* Pass when expected == observed, Fail otherwise. */
    Claim & check(std::string id, std::string statement, std::string expected, std::string observed,
                  std::string note = {});
    Claim & check_true(std::string id, std::string statement, bool ok, std::string observed,
                       std::string note = {});
    Claim & info(std::string id, std::string statement, std::string observed, std::string note = {});
    /* Records an exception from a sub-step as a failed claim. */
    Claim & error(std::string id, std::string statement, std::string what);

    void merge(Report const & other);
    bool passed() const;
    size_t failures() const;

    std::string text() const;
    std::string json() const;
};

} // namespace normlab::report

#endif /* NORMLAB_REPORT_HPP */
