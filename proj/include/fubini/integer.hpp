#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fubini {

/// Arbitrary-precision signed integer. Every sequence value lives here.
using Integer = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
/// Normalization happens inside every arithmetic operation.
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(std::size_t n) {
    Integer result = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

/// (-1)^n as an Integer.
inline Integer sign_power(std::size_t n) { return (n % 2 == 0) ? Integer(1) : Integer(-1); }

inline std::string to_string(const Integer& value) { return value.str(); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace fubini
