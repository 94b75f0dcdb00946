#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "fubini/integer.hpp"

namespace fubini {

/// Raised when a series operation's precondition on the constant term fails,
/// or when coefficient extraction does not yield integers.
class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Formal power series sum c_i x^i kept exactly up to x^order.
///
/// Binary operations truncate to the smaller of the two orders. Coefficients
/// are boost rationals, which are reduced to lowest terms after every
/// operation.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    /// Series from explicit coefficients; order = size - 1. Empty input gives 0 at order 0.
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            coeffs_.emplace_back(0);
        }
    }

    TruncatedSeries(std::initializer_list<Rational> coeffs)
        : TruncatedSeries(std::vector<Rational>(coeffs)) {}

    static TruncatedSeries constant(const Rational& value, std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = value;
        return s;
    }

    /// The series x (zero at order 0).
    static TruncatedSeries variable(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) {
            s.coeffs_[1] = 1;
        }
        return s;
    }

    /// e^x = sum x^n / n!.
    static TruncatedSeries exp_x(std::size_t order) {
        TruncatedSeries s(order);
        Integer fact = 1;
        for (std::size_t n = 0; n <= order; ++n) {
            if (n > 0) {
                fact *= n;
            }
            s.coeffs_[n] = Rational(Integer(1), fact);
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }

    /// Copy cut down to a lower order; a higher order is an error.
    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order()) {
            throw std::out_of_range("cannot raise the order of a truncated series");
        }
        return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Rational> coeffs_;
};

inline TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t order = std::min(f.order(), g.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        out[i] = f[i] + g[i];
    }
    return out;
}

inline TruncatedSeries series_negate(const TruncatedSeries& f) {
    TruncatedSeries out(f.order());
    for (std::size_t i = 0; i <= f.order(); ++i) {
        out[i] = -f[i];
    }
    return out;
}

inline TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    return series_add(f, series_negate(g));
}

inline TruncatedSeries series_scale(const TruncatedSeries& f, const Rational& factor) {
    TruncatedSeries out(f.order());
    for (std::size_t i = 0; i <= f.order(); ++i) {
        out[i] = f[i] * factor;
    }
    return out;
}

/// Cauchy product truncated to the smaller order.
inline TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t order = std::min(f.order(), g.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (f[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (g[j] != 0) {
                out[i + j] += f[i] * g[j];
            }
        }
    }
    return out;
}

inline TruncatedSeries series_pow(const TruncatedSeries& f, std::size_t exponent) {
    TruncatedSeries result = TruncatedSeries::constant(1, f.order());
    TruncatedSeries base = f;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = series_mul(result, base);
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

/// Multiplicative inverse: g_0 = 1/f_0, g_n = -(1/f_0) sum_{k=1}^{n} f_k g_{n-k}.
inline TruncatedSeries series_inverse(const TruncatedSeries& f) {
    if (f[0] == 0) {
        throw SeriesError("not invertible as power series: constant term is zero");
    }
    const std::size_t order = f.order();
    const Rational inv0 = Rational(1) / f[0];
    TruncatedSeries g(order);
    g[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k] != 0) {
                acc += f[k] * g[n - k];
            }
        }
        g[n] = -acc * inv0;
    }
    return g;
}

/// f' with the order reduced by one; order 0 gives the zero series of order 0.
inline TruncatedSeries series_derivative(const TruncatedSeries& f) {
    if (f.order() == 0) {
        return TruncatedSeries(0);
    }
    TruncatedSeries out(f.order() - 1);
    for (std::size_t i = 1; i <= f.order(); ++i) {
        out[i - 1] = f[i] * i;
    }
    return out;
}

/// exp(f) for f(0) = 0, from g' = f' g:  n g_n = sum_{k=1}^{n} k f_k g_{n-k}.
inline TruncatedSeries series_exp(const TruncatedSeries& f) {
    if (f[0] != 0) {
        throw SeriesError("series_exp requires a zero constant term");
    }
    const std::size_t order = f.order();
    TruncatedSeries g(order);
    g[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k] != 0) {
                acc += f[k] * g[n - k] * k;
            }
        }
        g[n] = acc / n;
    }
    return g;
}

/// log(f) for f(0) = 1, from f g' = f':  n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
inline TruncatedSeries series_log(const TruncatedSeries& f) {
    if (f[0] != 1) {
        throw SeriesError("series_log requires a constant term of 1");
    }
    const std::size_t order = f.order();
    TruncatedSeries g(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = f[n] * n;
        for (std::size_t k = 1; k < n; ++k) {
            if (f[n - k] != 0) {
                acc -= g[k] * f[n - k] * k;
            }
        }
        g[n] = acc / n;
    }
    return g;
}

/// artanh(f) = (log(1 + f) - log(1 - f)) / 2 for f(0) = 0.
inline TruncatedSeries series_atanh(const TruncatedSeries& f) {
    if (f[0] != 0) {
        throw SeriesError("series_atanh requires a zero constant term");
    }
    const TruncatedSeries one = TruncatedSeries::constant(1, f.order());
    const TruncatedSeries plus = series_log(series_add(one, f));
    const TruncatedSeries minus = series_log(series_sub(one, f));
    return series_scale(series_sub(plus, minus), Rational(1, 2));
}

/// [n! c_n] for n = 0..order; throws if any of them is not an integer.
inline std::vector<Integer> to_sequence(const TruncatedSeries& f) {
    std::vector<Integer> out;
    out.reserve(f.order() + 1);
    Integer fact = 1;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (n > 0) {
            fact *= n;
        }
        const Rational scaled = f[n] * fact;
        if (boost::multiprecision::denominator(scaled) != 1) {
            throw SeriesError("not an integer EGF: " + std::to_string(n) + "! * [x^" +
                              std::to_string(n) + "] = " + to_string(scaled));
        }
        out.push_back(boost::multiprecision::numerator(scaled));
    }
    return out;
}

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return series_add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return series_sub(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f) { return series_negate(f); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return series_mul(f, g); }

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) {
    os << '[';
    for (std::size_t i = 0; i <= f.order(); ++i) {
        os << (i ? ", " : "") << to_string(f[i]);
    }
    return os << ']';
}

}  // namespace fubini
