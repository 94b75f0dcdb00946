#pragma once

// Brute-force enumeration oracles. These never touch the triangle recurrence,
// so they can check it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fubini/integer.hpp"

namespace fubini::oracle {

inline constexpr std::size_t max_partition_n = 12;
inline constexpr std::size_t max_ordered_partition_n = 9;

/// Visit every restricted growth string of length n: a[0] = 0 and
/// a[i] <= 1 + max(a[0..i-1]). Each one encodes a distinct set partition of
/// {0..n-1}; the callback receives the string and its block count.
template <class Visitor>
void for_each_restricted_growth_string(std::size_t n, Visitor&& visit) {
    std::vector<std::size_t> a(n, 0);
    if (n == 0) {
        visit(a, std::size_t{0});
        return;
    }
    // prefix_max[i] = max(a[0..i]) so a[i+1] may range over 0..prefix_max[i]+1
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
        visit(a, prefix_max[n - 1] + 1);
        std::size_t i = n - 1;
        while (i > 0 && a[i] == prefix_max[i - 1] + 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

/// S(n,k) by counting set partitions of an n-set with exactly k blocks.
inline Integer stirling2(std::size_t n, std::size_t k) {
    if (n > max_partition_n) {
        throw std::out_of_range("oracle::stirling2 enumerates only n <= " +
                                std::to_string(max_partition_n));
    }
    std::uint64_t count = 0;
    for_each_restricted_growth_string(n, [&](const std::vector<std::size_t>&, std::size_t blocks) {
        if (blocks == k) {
            ++count;
        }
    });
    return count;
}

namespace detail {

// Count sequences of disjoint nonempty blocks covering `remaining`.
inline std::uint64_t count_ordered_partitions(std::uint32_t remaining) {
    if (remaining == 0) {
        return 1;
    }
    std::uint64_t count = 0;
    // every nonempty submask can be the first block
    for (std::uint32_t block = remaining; block != 0; block = (block - 1) & remaining) {
        count += count_ordered_partitions(remaining & ~block);
    }
    return count;
}

}  // namespace detail

/// B(n) by counting ordered set partitions of {0..n-1}.
inline Integer ordered_bell(std::size_t n) {
    if (n > max_ordered_partition_n) {
        throw std::out_of_range("oracle::ordered_bell enumerates only n <= " +
                                std::to_string(max_ordered_partition_n));
    }
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    return detail::count_ordered_partitions(all);
}

}  // namespace fubini::oracle
