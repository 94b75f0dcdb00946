#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fubini/integer.hpp"

namespace fubini {

/// First counterexample found by a sweep.
struct Failure {
    std::int64_t n = 0;
    Integer expected;
    Integer actual;
    std::string detail;  // which side of the identity disagreed

    bool operator==(const Failure&) const = default;
};

/// Outcome of checking one identity over [n_min, n_max].
/// A report passes exactly when it carries no failure.
struct VerificationReport {
    std::string identity_id;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::optional<Failure> first_failure;

    bool passed() const noexcept { return !first_failure.has_value(); }
    const char* status() const noexcept { return passed() ? "pass" : "fail"; }

    bool operator==(const VerificationReport&) const = default;
};

/// Accumulates checks for one report, keeping only the first mismatch.
class ReportBuilder {
public:
    ReportBuilder(std::string identity_id, std::int64_t n_min, std::int64_t n_max)
        : report_{std::move(identity_id), n_min, n_max, std::nullopt} {}

    /// Returns true when expected == actual.
    bool check(std::int64_t n, const Integer& expected, const Integer& actual, std::string_view detail) {
        if (expected == actual) {
            return true;
        }
        fail(n, expected, actual, detail);
        return false;
    }

    void fail(std::int64_t n, const Integer& expected, const Integer& actual, std::string_view detail) {
        if (!report_.first_failure) {
            report_.first_failure = Failure{n, expected, actual, std::string(detail)};
        }
    }

    bool failed() const noexcept { return report_.first_failure.has_value(); }

    VerificationReport finish() && { return std::move(report_); }

private:
    VerificationReport report_;
};

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (!r.passed()) {
            return false;
        }
    }
    return true;
}

// Serialization.
//
// Line format, one per report:
//   <id> <n_min>..<n_max> pass
//   <id> <n_min>..<n_max> fail n=<n> expected=<value> actual=<value> [<detail>]

inline std::string to_line(const VerificationReport& report) {
    std::string line = report.identity_id + " " + std::to_string(report.n_min) + ".." +
                       std::to_string(report.n_max) + " " + report.status();
    if (const auto& f = report.first_failure) {
        line += " n=" + std::to_string(f->n) + " expected=" + f->expected.str() + " actual=" + f->actual.str();
        if (!f->detail.empty()) {
            line += " [" + f->detail + "]";
        }
    }
    return line;
}

/// Structured record. Integers are emitted as decimal strings since they
/// routinely exceed 64 bits.
inline nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json j{
        {"id", report.identity_id},
        {"range", {report.n_min, report.n_max}},
        {"status", report.status()},
        {"first_failure", nullptr},
    };
    if (const auto& f = report.first_failure) {
        j["first_failure"] = {
            {"n", f->n},
            {"expected", f->expected.str()},
            {"actual", f->actual.str()},
            {"detail", f->detail},
        };
    }
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.identity_id = j.at("id").get<std::string>();
    r.n_min = j.at("range").at(0).get<std::int64_t>();
    r.n_max = j.at("range").at(1).get<std::int64_t>();
    const auto& f = j.at("first_failure");
    if (!f.is_null()) {
        r.first_failure = Failure{f.at("n").get<std::int64_t>(), Integer(f.at("expected").get<std::string>()),
                                  Integer(f.at("actual").get<std::string>()), f.at("detail").get<std::string>()};
    }
    const std::string status = j.at("status").get<std::string>();
    if (status != r.status()) {
        throw std::invalid_argument("report status '" + status + "' contradicts first_failure");
    }
    return r;
}

}  // namespace fubini
