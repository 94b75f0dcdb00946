#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fubini/integer.hpp"
#include "fubini/stirling_triangle.hpp"

namespace fubini {

enum class Parity { even, odd };

/// A named run of exact values where values[i] holds a(offset + i).
struct SequenceTable {
    std::string name;
    std::int64_t offset = 0;
    std::vector<Integer> values;

    bool operator==(const SequenceTable&) const = default;
};

namespace detail {

inline void require_positive(std::size_t n, const char* what) {
    if (n == 0) {
        throw std::domain_error(std::string(what) + " is defined only for n >= 1");
    }
}

/// Sum over k in [k_first, n] stepping by `step` of sign(k) * (k - shift)! * S(n,k).
/// The factorial is carried along the loop instead of recomputed per term.
inline Integer weighted_row_sum(std::span<const Integer> row, std::size_t k_first, std::size_t step,
                                std::size_t shift, bool alternate) {
    Integer total = 0;
    Integer weight = 1;  // (k - shift)! for the current k
    std::size_t weight_index = 0;
    for (std::size_t k = k_first; k < row.size(); k += step) {
        const std::size_t m = k - shift;
        while (weight_index < m) {
            ++weight_index;
            weight *= weight_index;
        }
        if (row[k] == 0) {
            continue;
        }
        if (alternate && k % 2 == 1) {
            total -= weight * row[k];
        } else {
            total += weight * row[k];
        }
    }
    return total;
}

}  // namespace detail

template <stirling_source Source>
Integer stirling2(const Source& source, std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    return std::span<const Integer>(source.row(n))[k];
}

template <stirling_source Source>
std::vector<Integer> stirling2_row(const Source& source, std::size_t n) {
    std::span<const Integer> row = source.row(n);
    return {row.begin(), row.end()};
}

/// B(n) = sum_{k=0}^{n} k! S(n,k).
template <stirling_source Source>
Integer ordered_bell(const Source& source, std::size_t n) {
    return detail::weighted_row_sum(source.row(n), 0, 1, 0, false);
}

/// H(n) = sum_{k=1}^{n} (k-1)! S(n,k). Equal to 1 at n = 1 and 2 B(n-1) afterwards.
template <stirling_source Source>
Integer h_total(const Source& source, std::size_t n) {
    detail::require_positive(n, "h_total");
    return detail::weighted_row_sum(source.row(n), 1, 1, 1, false);
}

/// sum over even k >= 2 of (k-1)! S(n,k).
template <stirling_source Source>
Integer h_even(const Source& source, std::size_t n) {
    detail::require_positive(n, "h_even");
    return detail::weighted_row_sum(source.row(n), 2, 2, 1, false);
}

/// sum over odd k >= 1 of (k-1)! S(n,k).
template <stirling_source Source>
Integer h_odd(const Source& source, std::size_t n) {
    detail::require_positive(n, "h_odd");
    return detail::weighted_row_sum(source.row(n), 1, 2, 1, false);
}

/// W(n,k) = k! S(n+1,k+1).
template <stirling_source Source>
Integer worpitzky(const Source& source, std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    return factorial(k) * stirling2(source, n + 1, k + 1);
}

/// [W(n,0), ..., W(n,n)].
template <stirling_source Source>
std::vector<Integer> worpitzky_row(const Source& source, std::size_t n) {
    std::span<const Integer> next = source.row(n + 1);
    std::vector<Integer> row(n + 1);
    Integer weight = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            weight *= k;
        }
        row[k] = weight * next[k + 1];
    }
    return row;
}

/// sum_{k=0}^{n} (-1)^k k! S(n,k); always (-1)^n.
template <stirling_source Source>
Integer alt_factorial_sum(const Source& source, std::size_t n) {
    return detail::weighted_row_sum(source.row(n), 0, 1, 0, true);
}

/// sum_{k=1}^{n} (-1)^k (k-1)! S(n,k); -1 at n = 1, 0 afterwards. Equals h_even - h_odd.
template <stirling_source Source>
Integer alt_shifted_sum(const Source& source, std::size_t n) {
    return detail::weighted_row_sum(source.row(n), 1, 1, 1, true);
}

/// even: sum_k (2k)! S(n,2k) = (B(n) + (-1)^n) / 2
/// odd:  sum_k (2k+1)! S(n,2k+1) = (B(n) - (-1)^n) / 2
template <stirling_source Source>
Integer parity_weighted_sum(const Source& source, std::size_t n, Parity parity) {
    const std::size_t first = parity == Parity::even ? 0 : 1;
    return detail::weighted_row_sum(source.row(n), first, 2, 0, false);
}

// Overloads on the shared default triangle.

inline Integer stirling2(std::size_t n, std::size_t k) { return stirling2(default_triangle(), n, k); }
inline std::vector<Integer> stirling2_row(std::size_t n) { return stirling2_row(default_triangle(), n); }
inline Integer ordered_bell(std::size_t n) { return ordered_bell(default_triangle(), n); }
inline Integer h_total(std::size_t n) { return h_total(default_triangle(), n); }
inline Integer h_even(std::size_t n) { return h_even(default_triangle(), n); }
inline Integer h_odd(std::size_t n) { return h_odd(default_triangle(), n); }
inline Integer worpitzky(std::size_t n, std::size_t k) { return worpitzky(default_triangle(), n, k); }
inline std::vector<Integer> worpitzky_row(std::size_t n) { return worpitzky_row(default_triangle(), n); }
inline Integer alt_factorial_sum(std::size_t n) { return alt_factorial_sum(default_triangle(), n); }
inline Integer alt_shifted_sum(std::size_t n) { return alt_shifted_sum(default_triangle(), n); }
inline Integer parity_weighted_sum(std::size_t n, Parity parity) {
    return parity_weighted_sum(default_triangle(), n, parity);
}

// Tables.

inline SequenceTable ordered_bell_table(std::size_t n_max) {
    SequenceTable table{"bell", 0, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        table.values.push_back(ordered_bell(n));
    }
    return table;
}

/// Tables for h, he, ho start at n = 1.
template <class Fn>
SequenceTable positive_index_table(std::string name, std::size_t n_max, Fn&& fn) {
    SequenceTable table{std::move(name), 1, {}};
    for (std::size_t n = 1; n <= n_max; ++n) {
        table.values.push_back(fn(n));
    }
    return table;
}

inline SequenceTable stirling_row_table(std::size_t n) {
    return {"stirling-row", 0, stirling2_row(n)};
}

inline SequenceTable worpitzky_row_table(std::size_t n) {
    return {"worpitzky-row", 0, worpitzky_row(n)};
}

}  // namespace fubini
