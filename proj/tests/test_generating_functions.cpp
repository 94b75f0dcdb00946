#include <gtest/gtest.h>

#include "fubini/generating_functions.hpp"
#include "fubini/oracle.hpp"
#include "fubini/sequences.hpp"

namespace {

using namespace fubini;

using S = TruncatedSeries;

std::vector<Integer> ints(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

TEST(GfBell, Examples) {
    EXPECT_EQ(gf_bell(0), S({1}));
    EXPECT_EQ(gf_bell(2), S({1, 1, Rational(3, 2)}));
    const auto seq = to_sequence(gf_bell(5));
    for (std::size_t n = 0; n <= 5; ++n) {
        EXPECT_EQ(seq[n], oracle::ordered_bell(n)) << n;
    }
    EXPECT_EQ(to_sequence(gf_bell(3)), ints({1, 1, 3, 13}));
}

TEST(GfStirlingCol, Examples) {
    EXPECT_EQ(gf_stirling_col(0, 4), S::constant(1, 4));
    EXPECT_EQ(to_sequence(gf_stirling_col(1, 3)), ints({0, 1, 1, 1}));
    EXPECT_EQ(to_sequence(gf_stirling_col(2, 4)), ints({0, 0, 1, 3, 7}));
}

TEST(GfStirlingCol, MatchesEnumeratedColumns) {
    for (std::size_t k = 0; k <= 6; ++k) {
        const auto column = to_sequence(gf_stirling_col(k, 10));
        for (std::size_t n = 0; n <= 10; ++n) {
            EXPECT_EQ(column[n], oracle::stirling2(n, k)) << n << "," << k;
        }
    }
}

TEST(GfH, Examples) {
    EXPECT_EQ(to_sequence(gf_H(1)), ints({0, 1}));
    EXPECT_EQ(to_sequence(gf_G(1)), ints({0, 2}));
    EXPECT_EQ(to_sequence(gf_H(4))[4], 26);
    EXPECT_EQ(to_sequence(gf_H(4)), ints({0, 1, 2, 6, 26}));
    EXPECT_EQ(to_sequence(gf_G(4)), ints({0, 2, 2, 6, 26}));
}

TEST(GfH, MatchesDirect) {
    const auto h = to_sequence(gf_H(40));
    for (std::size_t n = 1; n <= 40; ++n) {
        EXPECT_EQ(h[n], h_total(n)) << n;
    }
}

TEST(GfG, DerivativeIsTwiceBell) {
    // d/dx (x - log(2 - e^x)) = 1 + e^x / (2 - e^x) = 2 / (2 - e^x)
    for (std::size_t order : {1, 2, 5, 16, 64}) {
        EXPECT_EQ(series_derivative(gf_G(order)), series_scale(gf_bell(order - 1), 2)) << order;
    }
}

TEST(GfG, DerivativeIsNotTwoOverExpMinusOne) {
    // 2 / (e^x - 1) has a pole at 0, so it is not a power series at all.
    const S exp_minus_one = S::exp_x(4) - S::constant(1, 4);
    EXPECT_THROW(series_inverse(exp_minus_one), SeriesError);
}

TEST(GfParity, Examples) {
    EXPECT_EQ(to_sequence(gf_He(2))[2], 1);
    EXPECT_EQ(to_sequence(gf_He(4)), ints({0, 1, 1, 3, 13}));
    EXPECT_EQ(to_sequence(gf_Ho(4)), ints({0, 0, 1, 3, 13}));
}

TEST(GfParity, FirstCoefficientsAreSwappedRelativeToTheSums) {
    // H_e(1) is an empty sum and H_o(1) = 0! S(1,1), but the series give 1 and 0.
    EXPECT_EQ(h_even(1), 0);
    EXPECT_EQ(h_odd(1), 1);
    EXPECT_EQ(gf_He(1), S({0, 1}));
    EXPECT_EQ(gf_Ho(1), S({0, 0}));
    // artanh(e^x - 1) = G(x) / 2 with G(1) = 2
    EXPECT_EQ(gf_He(12), series_scale(gf_G(12), Rational(1, 2)));
}

TEST(GfParity, SumIsGfH) {
    for (std::size_t order : {1, 3, 10, 32}) {
        EXPECT_EQ(gf_He(order) + gf_Ho(order), gf_H(order)) << order;
    }
}

TEST(GfParity, EvenEgfAlternativeForm) {
    // artanh(e^x - 1) = log(e^x / (2 - e^x)) / 2 = (x - log(2 - e^x)) / 2
    const std::size_t order = 20;
    const S alt = series_scale(S::variable(order) - series_log(S::constant(2, order) - S::exp_x(order)),
                               Rational(1, 2));
    EXPECT_EQ(gf_He(order), alt);
}

TEST(GfParity, MatchesDirect) {
    const auto he = to_sequence(gf_He(40));
    const auto ho = to_sequence(gf_Ho(40));
    for (std::size_t n = 2; n <= 40; ++n) {
        EXPECT_EQ(he[n], h_even(n)) << n;
        EXPECT_EQ(ho[n], h_odd(n)) << n;
    }
}

TEST(GfParity, DifferenceMatchesAlternatingSum) {
    // 1 at n = 1 and 0 afterwards: minus the alternating shifted sum
    const auto diff = to_sequence(gf_He(30) - gf_Ho(30));
    EXPECT_EQ(diff[1], 1);
    for (std::size_t n = 1; n <= 30; ++n) {
        EXPECT_EQ(diff[n], -alt_shifted_sum(n)) << n;
    }
}

}  // namespace
