#pragma once

#include <concepts>
#include <cstddef>
#include <deque>
#include <mutex>
#include <span>
#include <vector>

#include "fubini/integer.hpp"

namespace fubini {

/// Anything that hands out rows [S(n,0), ..., S(n,n)] of the Stirling triangle.
/// The sequence functions are written against this so tests can substitute a
/// deliberately corrupted triangle.
template <class T>
concept stirling_source = requires(const T& source, std::size_t n) {
    { source.row(n) } -> std::convertible_to<std::span<const Integer>>;
};

/// Memoized rows of Stirling numbers of the second kind, grown on demand with
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1).
///
/// Rows are stored in a deque so references to completed rows stay valid while
/// later rows are appended. Extension is serialized by a mutex; reading a row
/// that already exists only takes the lock long enough to check the size.
class StirlingTriangle {
public:
    StirlingTriangle() { rows_.push_back({Integer(1)}); }

    StirlingTriangle(const StirlingTriangle&) = delete;
    StirlingTriangle& operator=(const StirlingTriangle&) = delete;

    const std::vector<Integer>& row(std::size_t n) const {
        std::lock_guard lock(mutex_);
        while (rows_.size() <= n) {
            extend();
        }
        return rows_[n];
    }

    Integer at(std::size_t n, std::size_t k) const {
        if (k > n) {
            return 0;
        }
        return row(n)[k];
    }

    /// Number of rows computed so far (rows 0 .. max_n()-1 are cached).
    std::size_t max_n() const {
        std::lock_guard lock(mutex_);
        return rows_.size();
    }

private:
    void extend() const {
        const std::vector<Integer>& prev = rows_.back();
        const std::size_t n = prev.size();
        std::vector<Integer> next(n + 1);
        next[0] = 0;
        for (std::size_t k = 1; k < n; ++k) {
            next[k] = prev[k] * k + prev[k - 1];
        }
        next[n] = 1;
        rows_.push_back(std::move(next));
    }

    mutable std::mutex mutex_;
    mutable std::deque<std::vector<Integer>> rows_;
};

static_assert(stirling_source<StirlingTriangle>);

/// Process-wide triangle used by the convenience overloads.
inline const StirlingTriangle& default_triangle() {
    static const StirlingTriangle triangle;
    return triangle;
}

}  // namespace fubini
