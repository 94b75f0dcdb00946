#pragma once

// Exponential generating functions of the sequences in sequences.hpp, built
// from e^x with the series operations only. n! [x^n] of each must match the
// direct computation.

#include <cstddef>

#include "fubini/integer.hpp"
#include "fubini/series.hpp"

namespace fubini {

namespace detail {

/// 2 - e^x
inline TruncatedSeries two_minus_exp(std::size_t order) {
    return TruncatedSeries::constant(2, order) - TruncatedSeries::exp_x(order);
}

/// e^x - 1
inline TruncatedSeries exp_minus_one(std::size_t order) {
    return TruncatedSeries::exp_x(order) - TruncatedSeries::constant(1, order);
}

}  // namespace detail

/// 1 / (2 - e^x), the EGF of the ordered Bell numbers.
inline TruncatedSeries gf_bell(std::size_t order) {
    return series_inverse(detail::two_minus_exp(order));
}

/// (e^x - 1)^k / k!, the EGF of column k of the Stirling triangle.
inline TruncatedSeries gf_stirling_col(std::size_t k, std::size_t order) {
    return series_scale(series_pow(detail::exp_minus_one(order), k), Rational(Integer(1), factorial(k)));
}

/// -log(2 - e^x), the EGF of H(n) with H(0) = 0.
inline TruncatedSeries gf_H(std::size_t order) {
    return -series_log(detail::two_minus_exp(order));
}

/// x - log(2 - e^x): same as gf_H except the x^1 coefficient is 2.
/// Its derivative is 2 / (2 - e^x) = 2 gf_bell.
inline TruncatedSeries gf_G(std::size_t order) {
    return TruncatedSeries::variable(order) + gf_H(order);
}

/// artanh(e^x - 1) = (x - log(2 - e^x)) / 2. Its coefficients give the even-k
/// parity sum H_e(n) for n >= 2; at n = 1 it yields 1, whereas H_e(1) = 0.
inline TruncatedSeries gf_He(std::size_t order) {
    return series_atanh(detail::exp_minus_one(order));
}

/// -log(e^x (2 - e^x)) / 2 = (-log(2 - e^x) - x) / 2. Gives the odd-k parity
/// sum H_o(n) for n >= 2; at n = 1 it yields 0, whereas H_o(1) = 1.
inline TruncatedSeries gf_Ho(std::size_t order) {
    const TruncatedSeries product = series_mul(TruncatedSeries::exp_x(order), detail::two_minus_exp(order));
    return series_scale(series_log(product), Rational(-1, 2));
}

}  // namespace fubini
