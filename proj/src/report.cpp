#include "normlab/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace normlab::report {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Info: return "INFO";
    }
    return "?";
}

Claim & Report::add(Claim c)
{
    claims_.push_back(std::move(c));
    return claims_.back();
}

Claim & Report::check(std::string id, std::string statement, std::string expected, std::string observed,
                      std::string note)
{
    Verdict v = expected == observed ? Verdict::Pass : Verdict::Fail;
    return add({std::move(id), std::move(statement), std::move(expected), std::move(observed), v, std::move(note)});
}

Claim & Report::check_true(std::string id, std::string statement, bool ok, std::string observed,
                           std::string note)
{
    return add({std::move(id), std::move(statement), "true", std::move(observed),
                ok ? Verdict::Pass : Verdict::Fail, std::move(note)});
}

Claim & Report::info(std::string id, std::string statement, std::string observed, std::string note)
{
    return add({std::move(id), std::move(statement), "", std::move(observed), Verdict::Info, std::move(note)});
}

Claim & Report::error(std::string id, std::string statement, std::string what)
{
    return add({std::move(id), std::move(statement), "no error", "error: " + what, Verdict::Fail, ""});
}

void Report::merge(Report const & other)
{
    for (auto const & c : other.claims_) claims_.push_back(c);
}

size_t Report::failures() const
{
    return static_cast<size_t>(std::count_if(claims_.begin(), claims_.end(),
                                              [](Claim const & c) { return c.verdict == Verdict::Fail; }));
}

bool Report::passed() const { return failures() == 0; }

std::string Report::text() const
{
    std::ostringstream os;
    os << "== " << title_ << " ==\n";
    for (auto const & c : claims_) {
        os << "[" << to_string(c.verdict) << "] " << c.id << ": " << c.statement << "\n";
        if (!c.expected.empty()) os << "    expected: " << c.expected << "\n";
        os << "    observed: " << c.observed << "\n";
        if (!c.note.empty()) os << "    note: " << c.note << "\n";
    }
    os << "-- " << (passed() ? "all claims pass" : std::to_string(failures()) + " discrepancies") << "\n";
    return os.str();
}

std::string Report::json() const
{
    nlohmann::ordered_json j;
    j["title"] = title_;
    j["passed"] = passed();
    j["claims"] = nlohmann::ordered_json::array();
    for (auto const & c : claims_) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["statement"] = c.statement;
        cj["expected"] = c.expected;
        cj["observed"] = c.observed;
        cj["verdict"] = to_string(c.verdict);
        if (!c.note.empty()) cj["note"] = c.note;
        j["claims"].push_back(cj);
    }
    return j.dump(2);
}

} // namespace normlab::report
