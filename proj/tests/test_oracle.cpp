#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "fubini/oracle.hpp"

namespace {

using fubini::Integer;
namespace oracle = fubini::oracle;

TEST(RestrictedGrowthStrings, CountsAreBellNumbers) {
    // unordered Bell numbers 1, 1, 2, 5, 15, 52, 203, 877
    const std::vector<std::size_t> bell = {1, 1, 2, 5, 15, 52, 203, 877};
    for (std::size_t n = 0; n < bell.size(); ++n) {
        std::size_t count = 0;
        oracle::for_each_restricted_growth_string(n, [&](const auto&, std::size_t) { ++count; });
        EXPECT_EQ(count, bell[n]) << "n=" << n;
    }
}

TEST(RestrictedGrowthStrings, AreDistinctAndWellFormed) {
    std::set<std::vector<std::size_t>> seen;
    oracle::for_each_restricted_growth_string(5, [&](const std::vector<std::size_t>& a, std::size_t blocks) {
        EXPECT_EQ(a[0], 0U);
        std::size_t running_max = 0;
        for (std::size_t i = 1; i < a.size(); ++i) {
            EXPECT_LE(a[i], running_max + 1);
            running_max = std::max(running_max, a[i]);
        }
        EXPECT_EQ(blocks, running_max + 1);
        EXPECT_TRUE(seen.insert(a).second);
    });
    EXPECT_EQ(seen.size(), 52U);
}

TEST(OracleStirling, Examples) {
    EXPECT_EQ(oracle::stirling2(3, 2), 3);
    EXPECT_EQ(oracle::stirling2(0, 0), 1);
    EXPECT_EQ(oracle::stirling2(4, 2), 7);
    EXPECT_EQ(oracle::stirling2(5, 0), 0);
    EXPECT_EQ(oracle::stirling2(3, 5), 0);
}

TEST(OracleStirling, RejectsLargeN) {
    EXPECT_NO_THROW(oracle::stirling2(12, 4));
    EXPECT_THROW(oracle::stirling2(13, 2), std::out_of_range);
}

TEST(OracleOrderedBell, Examples) {
    EXPECT_EQ(oracle::ordered_bell(0), 1);
    EXPECT_EQ(oracle::ordered_bell(1), 1);
    EXPECT_EQ(oracle::ordered_bell(2), 3);
    EXPECT_EQ(oracle::ordered_bell(3), 13);
    EXPECT_EQ(oracle::ordered_bell(4), 75);
}

TEST(OracleOrderedBell, RejectsLargeN) {
    EXPECT_THROW(oracle::ordered_bell(10), std::out_of_range);
}

}  // namespace
