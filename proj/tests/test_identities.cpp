#include <gtest/gtest.h>

#include <set>
#include <string>

#include "fubini/identities.hpp"

namespace {

using namespace fubini;

/// A triangle with one entry bumped by a delta.
class CorruptedTriangle {
public:
    CorruptedTriangle(std::size_t n, std::size_t k, int delta) : n_(n) {
        bad_row_ = triangle_.row(n);
        bad_row_.at(k) += delta;
    }

    const std::vector<Integer>& row(std::size_t n) const { return n == n_ ? bad_row_ : triangle_.row(n); }

private:
    StirlingTriangle triangle_;
    std::size_t n_;
    std::vector<Integer> bad_row_;
};

static_assert(stirling_source<CorruptedTriangle>);

TEST(VerifyTheorem1, Examples) {
    for (const auto& r : verify_theorem1(1)) {
        EXPECT_TRUE(r.passed()) << to_line(r);
        EXPECT_EQ(r.n_min, 1);
        EXPECT_EQ(r.n_max, 1);
    }
    const auto reports = verify_theorem1(200);
    ASSERT_EQ(reports.size(), 2U);
    EXPECT_EQ(reports[0].identity_id, "thm1.sumk0");
    EXPECT_EQ(reports[1].identity_id, "thm1.sumk1");
    EXPECT_TRUE(all_passed(reports));
}

TEST(VerifyTheorem1, CorruptedRowFails) {
    const CorruptedTriangle bad(7, 3, 1);
    const auto reports = verify_theorem1(bad, 20);
    ASSERT_FALSE(reports[0].passed());
    EXPECT_EQ(reports[0].first_failure->n, 7);
    EXPECT_EQ(reports[0].first_failure->expected, ordered_bell(7) + 3 * 2);  // 3! added to B(7)
    // sumk1 reads row n+1, so row 7 first shows up at n = 6
    ASSERT_FALSE(reports[1].passed());
    EXPECT_EQ(reports[1].first_failure->n, 6);
}

TEST(VerifyTheorem2, Examples) {
    EXPECT_TRUE(verify_theorem2(1).passed());
    EXPECT_TRUE(verify_theorem2(3).passed());
    const auto r = verify_theorem2(200);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.identity_id, "thm2.sum4");
    EXPECT_EQ(r.n_max, 200);
}

TEST(VerifyTheorem2, CorruptedRowFails) {
    const CorruptedTriangle bad(12, 12, -1);
    const auto r = verify_theorem2(bad, 30);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.first_failure->n, 12);
}

TEST(VerifyKnownSums, Examples) {
    EXPECT_TRUE(all_passed(verify_known_sums(2)));
    const auto reports = verify_known_sums(200);
    ASSERT_EQ(reports.size(), 2U);
    EXPECT_EQ(reports[0].identity_id, "eq.sum2");
    EXPECT_EQ(reports[1].identity_id, "eq.sum3");
    EXPECT_TRUE(all_passed(reports));
}

TEST(VerifyParitySplit, Examples) {
    EXPECT_TRUE(verify_parity_split(1).passed());
    EXPECT_TRUE(verify_parity_split(2).passed());
    EXPECT_TRUE(verify_parity_split(200).passed());
}

TEST(VerifyWorpitzky, Sweep) {
    EXPECT_TRUE(verify_worpitzky(100).passed());
}

TEST(Verifiers, EmptyRangeIsAnError) {
    EXPECT_THROW(verify_known_sums(0), std::invalid_argument);
    EXPECT_THROW(verify_parity_split(0), std::invalid_argument);
    EXPECT_THROW(verify_theorem1(0), std::invalid_argument);
    EXPECT_THROW(verify_theorem2(0), std::invalid_argument);
    EXPECT_THROW(verify_gf_agreement(0), std::invalid_argument);
    EXPECT_THROW(verify_all(0, 4), std::invalid_argument);
}

TEST(VerifyGfAgreement, Examples) {
    for (std::size_t order : {1, 8, 64}) {
        const auto reports = verify_gf_agreement(order);
        ASSERT_EQ(reports.size(), 3U);
        for (const auto& r : reports) {
            EXPECT_TRUE(r.passed()) << to_line(r);
            EXPECT_EQ(r.n_max, static_cast<std::int64_t>(order));
        }
    }
}

TEST(VerifyGfAgreement, CorruptedRowFails) {
    const CorruptedTriangle bad(5, 2, 1);
    const auto reports = verify_gf_agreement(bad, 10);
    for (const auto& r : reports) {
        ASSERT_FALSE(r.passed()) << r.identity_id;
        EXPECT_EQ(r.first_failure->n, 5) << r.identity_id;
    }
}

TEST(VerifyAll, IdsMatchRegistryExactlyOnce) {
    const auto reports = verify_all(1, 1);
    ASSERT_EQ(reports.size(), identity_ids.size());
    std::multiset<std::string> produced;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        EXPECT_EQ(reports[i].identity_id, identity_ids[i]);
        produced.insert(reports[i].identity_id);
        EXPECT_TRUE(reports[i].passed()) << to_line(reports[i]);
    }
    const std::set<std::string> expected = {"eq.sum1", "thm1.sumk0",  "thm1.sumk1",        "eq.sum2",
                                            "eq.sum3", "thm2.sum4",   "eq.sum5",           "remark1.gfs",
                                            "remark2.worpitzky",      "proof.derivative"};
    EXPECT_EQ(std::set<std::string>(produced.begin(), produced.end()), expected);
    EXPECT_EQ(produced.size(), expected.size());
}

TEST(VerifyAll, FullSweepPassesAndIsDeterministic) {
    const auto first = verify_all(200, 64);
    EXPECT_TRUE(all_passed(first));
    EXPECT_EQ(first, verify_all(200, 64));
}

TEST(VerifyAll, EverySingleCorruptedEntryIsCaught) {
    // no verifier may pass over a range containing a bad entry
    for (std::size_t n = 1; n <= 9; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const CorruptedTriangle bad(n, k, 1);
            const auto reports = verify_all(bad, 12, 12);
            EXPECT_FALSE(all_passed(reports)) << n << "," << k;
            EXPECT_FALSE(reports[0].passed()) << "eq.sum1 missed S(" << n << "," << k << ")";
        }
    }
}

TEST(Report, LineFormat) {
    VerificationReport r{"thm2.sum4", 1, 3, std::nullopt};
    EXPECT_EQ(to_line(r), "thm2.sum4 1..3 pass");
    r.first_failure = Failure{2, 2, 3, "H(n) = 2 B(n-1)"};
    EXPECT_EQ(to_line(r), "thm2.sum4 1..3 fail n=2 expected=2 actual=3 [H(n) = 2 B(n-1)]");
}

TEST(Report, JsonRoundTrip) {
    const CorruptedTriangle bad(40, 20, 1);
    for (const auto& r : verify_all(bad, 60, 8)) {
        const nlohmann::json j = to_json(r);
        EXPECT_EQ(j.at("status"), r.status());
        EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r);
    }
}

TEST(Report, JsonStatusMustAgreeWithFailure) {
    nlohmann::json j = to_json(VerificationReport{"eq.sum2", 1, 2, std::nullopt});
    j["status"] = "fail";
    EXPECT_THROW(report_from_json(j), std::invalid_argument);
}

}  // namespace
