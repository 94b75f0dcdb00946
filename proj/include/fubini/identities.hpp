#pragma once

// Sweeping verifiers. Each one checks an identity over a range of n and
// reports the first counterexample instead of throwing: a mismatch means a
// bug in this library, not bad input.
//
// Every verifier takes the Stirling source explicitly so a corrupted triangle
// can be injected; the EGF side never reads the triangle.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fubini/generating_functions.hpp"
#include "fubini/oracle.hpp"
#include "fubini/report.hpp"
#include "fubini/sequences.hpp"
#include "fubini/series.hpp"

namespace fubini {

/// Identity ids produced by verify_all, one per identity.
inline constexpr std::array<std::string_view, 10> identity_ids = {
    "eq.sum1",           // B(n) = sum k! S(n,k), against enumeration and the EGF 1/(2 - e^x)
    "thm1.sumk0",        // B(n) = (-1)^(n+1) + 2 sum (2k)! S(n,2k) = (-1)^n + 2 sum (2k+1)! S(n,2k+1)
    "thm1.sumk1",        // B(n) = H_e(n+1) = H_o(n+1)
    "eq.sum2",           // sum (-1)^k k! S(n,k) = (-1)^n
    "eq.sum3",           // sum (-1)^k (k-1)! S(n,k) = -[n = 1]
    "thm2.sum4",         // H(1) = 1, H(n) = 2 B(n-1)
    "eq.sum5",           // H_e(n) = H_o(n) = B(n-1)
    "remark1.gfs",       // EGFs of H_e and H_o (n >= 2)
    "remark2.worpitzky", // parity sums of Worpitzky rows equal B(n)
    "proof.derivative",  // EGF of H, and G' = 2 / (2 - e^x) = 2 B(x)
};

namespace detail {

inline void require_nonempty(std::size_t n_max, const char* what) {
    if (n_max == 0) {
        throw std::invalid_argument(std::string(what) + ": empty range (n_max must be >= 1)");
    }
}

inline std::int64_t as_index(std::size_t n) { return static_cast<std::int64_t>(n); }

/// n! [x^n] of a series, or a recorded failure if the series is not an integer EGF.
inline std::optional<std::vector<Integer>> extract(const TruncatedSeries& series, ReportBuilder& builder,
                                                   std::string_view name) {
    try {
        return to_sequence(series);
    } catch (const SeriesError& e) {
        builder.fail(0, 0, 0, std::string(name) + ": " + e.what());
        return std::nullopt;
    }
}

}  // namespace detail

/// Both halves of Theorem 1 for 1 <= n <= n_max: {"thm1.sumk0", "thm1.sumk1"}.
template <stirling_source Source>
std::vector<VerificationReport> verify_theorem1(const Source& source, std::size_t n_max) {
    detail::require_nonempty(n_max, "verify_theorem1");
    ReportBuilder sumk0("thm1.sumk0", 1, detail::as_index(n_max));
    ReportBuilder sumk1("thm1.sumk1", 1, detail::as_index(n_max));
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto i = detail::as_index(n);
        const Integer bell = ordered_bell(source, n);
        const Integer even = parity_weighted_sum(source, n, Parity::even);
        const Integer odd = parity_weighted_sum(source, n, Parity::odd);
        sumk0.check(i, bell, sign_power(n + 1) + 2 * even, "(-1)^(n+1) + 2 sum (2k)! S(n,2k)") &&
            sumk0.check(i, bell, sign_power(n) + 2 * odd, "(-1)^n + 2 sum (2k+1)! S(n,2k+1)");
        sumk1.check(i, bell, h_even(source, n + 1), "sum (2k-1)! S(n+1,2k)") &&
            sumk1.check(i, bell, h_odd(source, n + 1), "sum (2k)! S(n+1,2k+1)");
        if (sumk0.failed() && sumk1.failed()) {
            break;
        }
    }
    return {std::move(sumk0).finish(), std::move(sumk1).finish()};
}

/// H(1) = 1 and H(n) = 2 B(n-1) for 2 <= n <= n_max.
template <stirling_source Source>
VerificationReport verify_theorem2(const Source& source, std::size_t n_max) {
    detail::require_nonempty(n_max, "verify_theorem2");
    ReportBuilder report("thm2.sum4", 1, detail::as_index(n_max));
    report.check(1, 1, h_total(source, 1), "H(1) = 1");
    for (std::size_t n = 2; n <= n_max && !report.failed(); ++n) {
        report.check(detail::as_index(n), 2 * ordered_bell(source, n - 1), h_total(source, n), "H(n) = 2 B(n-1)");
    }
    return std::move(report).finish();
}

/// {"eq.sum2", "eq.sum3"} for 1 <= n <= n_max. The second also checks that
/// the alternating shifted sum splits as H_e(n) - H_o(n).
template <stirling_source Source>
std::vector<VerificationReport> verify_known_sums(const Source& source, std::size_t n_max) {
    detail::require_nonempty(n_max, "verify_known_sums");
    ReportBuilder sum2("eq.sum2", 1, detail::as_index(n_max));
    ReportBuilder sum3("eq.sum3", 1, detail::as_index(n_max));
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto i = detail::as_index(n);
        sum2.check(i, sign_power(n), alt_factorial_sum(source, n), "sum (-1)^k k! S(n,k) = (-1)^n");
        const Integer shifted = alt_shifted_sum(source, n);
        sum3.check(i, n == 1 ? Integer(-1) : Integer(0), shifted, "sum (-1)^k (k-1)! S(n,k)") &&
            sum3.check(i, h_even(source, n) - h_odd(source, n), shifted, "H_e(n) - H_o(n)");
        if (sum2.failed() && sum3.failed()) {
            break;
        }
    }
    return {std::move(sum2).finish(), std::move(sum3).finish()};
}

/// H_e(n) = H_o(n) = B(n-1) for 2 <= n <= n_max. At n = 1 the values fixed
/// by the definitions (H_e(1) = 0, H_o(1) = 1) are checked instead.
template <stirling_source Source>
VerificationReport verify_parity_split(const Source& source, std::size_t n_max) {
    detail::require_nonempty(n_max, "verify_parity_split");
    ReportBuilder report("eq.sum5", 1, detail::as_index(n_max));
    report.check(1, 0, h_even(source, 1), "H_e(1) = 0") && report.check(1, 1, h_odd(source, 1), "H_o(1) = 1");
    for (std::size_t n = 2; n <= n_max && !report.failed(); ++n) {
        const auto i = detail::as_index(n);
        const Integer bell = ordered_bell(source, n - 1);
        report.check(i, bell, h_even(source, n), "H_e(n) = B(n-1)") &&
            report.check(i, bell, h_odd(source, n), "H_o(n) = B(n-1)");
    }
    return std::move(report).finish();
}

/// sum_{k>=0} W(n,2k) = sum_{k>=0} W(n,2k+1) = B(n) for 1 <= n <= n_max.
///
/// The even sum must start at k = 0: W(n,0) = 1, and dropping it leaves B(n) - 1.
template <stirling_source Source>
VerificationReport verify_worpitzky(const Source& source, std::size_t n_max) {
    detail::require_nonempty(n_max, "verify_worpitzky");
    ReportBuilder report("remark2.worpitzky", 1, detail::as_index(n_max));
    for (std::size_t n = 1; n <= n_max && !report.failed(); ++n) {
        const std::vector<Integer> row = worpitzky_row(source, n);
        Integer even = 0;
        Integer odd = 0;
        for (std::size_t k = 0; k < row.size(); ++k) {
            (k % 2 == 0 ? even : odd) += row[k];
        }
        const auto i = detail::as_index(n);
        const Integer bell = ordered_bell(source, n);
        report.check(i, bell, even, "sum W(n,2k)") && report.check(i, bell, odd, "sum W(n,2k+1)");
    }
    return std::move(report).finish();
}

/// The EGF route against the direct route for 0 <= n <= order:
///   "eq.sum1"          ordered_bell vs enumeration (n <= 8) and vs 1/(2 - e^x);
///                      Stirling columns k <= 10 vs (e^x - 1)^k / k!
///   "remark1.gfs"      artanh(e^x - 1) and -log(e^x (2 - e^x)) / 2 vs H_e, H_o for n >= 2;
///                      their sum is -log(2 - e^x) and their difference is minus eq. sum3
///   "proof.derivative" -log(2 - e^x) vs H; x - log(2 - e^x) vs G; G' = 2 gf_bell
template <stirling_source Source>
std::vector<VerificationReport> verify_gf_agreement(const Source& source, std::size_t order) {
    detail::require_nonempty(order, "verify_gf_agreement");
    const auto top = detail::as_index(order);

    ReportBuilder sum1("eq.sum1", 0, top);
    for (std::size_t n = 0; n <= std::min(order, std::size_t{8}); ++n) {
        if (!sum1.check(detail::as_index(n), oracle::ordered_bell(n), ordered_bell(source, n),
                        "ordered set partition count")) {
            break;
        }
    }
    if (auto bell = detail::extract(gf_bell(order), sum1, "gf_bell")) {
        for (std::size_t n = 0; n <= order && !sum1.failed(); ++n) {
            sum1.check(detail::as_index(n), (*bell)[n], ordered_bell(source, n), "n! [x^n] 1/(2 - e^x)");
        }
    }
    for (std::size_t k = 0; k <= std::min(order, std::size_t{10}) && !sum1.failed(); ++k) {
        if (auto column = detail::extract(gf_stirling_col(k, order), sum1, "gf_stirling_col")) {
            for (std::size_t n = 0; n <= order && !sum1.failed(); ++n) {
                sum1.check(detail::as_index(n), (*column)[n], stirling2(source, n, k),
                           "n! [x^n] (e^x - 1)^" + std::to_string(k) + " / " + std::to_string(k) + "!");
            }
        }
    }

    const TruncatedSeries h_series = gf_H(order);
    const TruncatedSeries he_series = gf_He(order);
    const TruncatedSeries ho_series = gf_Ho(order);

    ReportBuilder remark1("remark1.gfs", 0, top);
    const auto he = detail::extract(he_series, remark1, "gf_He");
    const auto ho = detail::extract(ho_series, remark1, "gf_Ho");
    const auto he_minus_ho = detail::extract(he_series - ho_series, remark1, "gf_He - gf_Ho");
    if (he && ho && he_minus_ho) {
        remark1.check(0, 0, (*he)[0], "H_e EGF constant term") && remark1.check(0, 0, (*ho)[0], "H_o EGF constant term");
        // Both EGFs describe H_e, H_o only from n = 2 on. At n = 1 they carry
        // 1 and 0 (artanh(e^x - 1) = (x - log(2 - e^x)) / 2), while the sums
        // give H_e(1) = 0 and H_o(1) = 1. The difference still tracks eq. sum3
        // with the opposite sign, which pins the n = 1 coefficients.
        for (std::size_t n = 1; n <= order && !remark1.failed(); ++n) {
            const auto i = detail::as_index(n);
            if (n >= 2) {
                remark1.check(i, (*he)[n], h_even(source, n), "n! [x^n] artanh(e^x - 1)") &&
                    remark1.check(i, (*ho)[n], h_odd(source, n), "n! [x^n] -log(e^x (2 - e^x)) / 2");
            }
            remark1.check(i, (*he_minus_ho)[n], -alt_shifted_sum(source, n), "gf_He - gf_Ho vs -(eq. sum3)");
        }
    }
    if (!remark1.failed() && he_series + ho_series != h_series) {
        remark1.fail(0, 0, 0, "gf_He + gf_Ho != gf_H");
    }

    ReportBuilder derivative("proof.derivative", 0, top);
    const auto h = detail::extract(h_series, derivative, "gf_H");
    const auto g = detail::extract(gf_G(order), derivative, "gf_G");
    if (h && g) {
        derivative.check(0, 0, (*h)[0], "H EGF constant term") && derivative.check(0, 0, (*g)[0], "G EGF constant term");
        for (std::size_t n = 1; n <= order && !derivative.failed(); ++n) {
            const auto i = detail::as_index(n);
            const Integer direct = h_total(source, n);
            derivative.check(i, (*h)[n], direct, "n! [x^n] -log(2 - e^x)") &&
                derivative.check(i, n == 1 ? Integer(2) : direct, (*g)[n], "G(1) = 2, G(n) = H(n)");
        }
    }
    if (!derivative.failed()) {
        const TruncatedSeries lhs = series_derivative(gf_G(order));
        const TruncatedSeries rhs = series_scale(gf_bell(order - 1), 2);
        for (std::size_t n = 0; n <= lhs.order(); ++n) {
            if (lhs[n] != rhs[n]) {
                // n! [x^n] G' = G(n+1) and n! [x^n] 2 B(x) = 2 B(n)
                const Integer fact = factorial(n);
                derivative.fail(detail::as_index(n), boost::multiprecision::numerator(Rational(rhs[n] * fact)),
                                boost::multiprecision::numerator(Rational(lhs[n] * fact)), "G'(x) = 2 B(x)");
                break;
            }
        }
    }

    return {std::move(sum1).finish(), std::move(remark1).finish(), std::move(derivative).finish()};
}

/// Every verifier; reports come back in identity_ids order.
/// The five groups are independent and run concurrently.
template <stirling_source Source>
std::vector<VerificationReport> verify_all(const Source& source, std::size_t n_max, std::size_t order) {
    detail::require_nonempty(n_max, "verify_all");
    detail::require_nonempty(order, "verify_all");
    auto gf = std::async(std::launch::async, [&] { return verify_gf_agreement(source, order); });
    auto thm1 = std::async(std::launch::async, [&] { return verify_theorem1(source, n_max); });
    auto known = std::async(std::launch::async, [&] { return verify_known_sums(source, n_max); });
    auto thm2 = std::async(std::launch::async, [&] { return verify_theorem2(source, n_max); });
    auto split = std::async(std::launch::async, [&] { return verify_parity_split(source, n_max); });
    auto worp = std::async(std::launch::async, [&] { return verify_worpitzky(source, n_max); });

    std::vector<VerificationReport> gf_reports = gf.get();
    std::vector<VerificationReport> thm1_reports = thm1.get();
    std::vector<VerificationReport> known_reports = known.get();
    return {
        gf_reports[0],    thm1_reports[0], thm1_reports[1], known_reports[0], known_reports[1],
        thm2.get(),       split.get(),     gf_reports[1],   worp.get(),       gf_reports[2],
    };
}

// Overloads on the shared default triangle.

inline std::vector<VerificationReport> verify_theorem1(std::size_t n_max) {
    return verify_theorem1(default_triangle(), n_max);
}
inline VerificationReport verify_theorem2(std::size_t n_max) { return verify_theorem2(default_triangle(), n_max); }
inline std::vector<VerificationReport> verify_known_sums(std::size_t n_max) {
    return verify_known_sums(default_triangle(), n_max);
}
inline VerificationReport verify_parity_split(std::size_t n_max) {
    return verify_parity_split(default_triangle(), n_max);
}
inline VerificationReport verify_worpitzky(std::size_t n_max) { return verify_worpitzky(default_triangle(), n_max); }
inline std::vector<VerificationReport> verify_gf_agreement(std::size_t order) {
    return verify_gf_agreement(default_triangle(), order);
}
inline std::vector<VerificationReport> verify_all(std::size_t n_max, std::size_t order) {
    return verify_all(default_triangle(), n_max, order);
}

}  // namespace fubini
