#pragma once

// The OEIS sequences this library can reproduce, flattened into the linear
// indexing their b-files use.
//
//   A000670  B(n), offset 0
//   A008277  S(n,k) read by rows, n >= 1, 1 <= k <= n, offset 1
//   A130850  Worpitzky rows reversed: T(n,j) = W(n, n-j), 0 <= j <= n, offset 0
//
// The A130850 orientation follows the bundled fixture, whose rows end in 1
// (1; 1, 1; 2, 3, 1; 6, 12, 7, 1; ...), whereas W(n,0) = 1 starts each row.

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fubini/bfile.hpp"
#include "fubini/sequences.hpp"

namespace fubini::oeis {

struct CatalogEntry {
    std::string_view id;
    std::string_view description;
};

inline constexpr std::array<CatalogEntry, 3> catalog = {{
    {"A000670", "ordered Bell numbers B(n)"},
    {"A008277", "Stirling numbers of the second kind S(n,k), read by rows, k >= 1"},
    {"A130850", "Worpitzky numbers W(n,n-j), read by rows"},
}};

inline bool is_known(std::string_view id) {
    for (const auto& entry : catalog) {
        if (entry.id == id) {
            return true;
        }
    }
    return false;
}

/// Computed sequence covering linear indices offset..max_index.
inline SequenceTable table(std::string_view id, std::int64_t max_index) {
    if (id == "A000670") {
        SequenceTable t{"A000670", 0, {}};
        for (std::int64_t n = 0; n <= max_index; ++n) {
            t.values.push_back(ordered_bell(static_cast<std::size_t>(n)));
        }
        return t;
    }
    if (id == "A008277") {
        SequenceTable t{"A008277", 1, {}};
        const auto wanted = static_cast<std::size_t>(std::max<std::int64_t>(max_index, 0));
        for (std::size_t n = 1; t.values.size() < wanted; ++n) {
            const auto& row = default_triangle().row(n);
            for (std::size_t k = 1; k <= n && t.values.size() < wanted; ++k) {
                t.values.push_back(row[k]);
            }
        }
        return t;
    }
    if (id == "A130850") {
        SequenceTable t{"A130850", 0, {}};
        const auto wanted = static_cast<std::size_t>(std::max<std::int64_t>(max_index + 1, 0));
        for (std::size_t n = 0; t.values.size() < wanted; ++n) {
            const std::vector<Integer> row = worpitzky_row(n);
            for (std::size_t j = 0; j <= n && t.values.size() < wanted; ++j) {
                t.values.push_back(row[n - j]);
            }
        }
        return t;
    }
    throw std::invalid_argument("no computable sequence for " + std::string(id));
}

/// b-file name for an id: "A000670" -> "b000670.txt".
inline std::string bfile_name(std::string_view id) {
    if (!is_valid_sequence_id(id)) {
        throw std::invalid_argument("invalid OEIS id '" + std::string(id) + "'");
    }
    return "b" + std::string(id.substr(1)) + ".txt";
}

inline BFile load_fixture(const std::filesystem::path& directory, std::string_view id) {
    return load_bfile(directory / bfile_name(id), std::string(id));
}

}  // namespace fubini::oeis
