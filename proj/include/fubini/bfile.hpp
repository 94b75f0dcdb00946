#pragma once

// OEIS b-file reading, writing and comparison.
//
// Format: ASCII lines "n a(n)" separated by whitespace. Lines starting with
// '#' are comments and blank lines are skipped. Indices must be consecutive.
// Emitted files use a single space and a trailing newline on every line.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fubini/integer.hpp"
#include "fubini/report.hpp"
#include "fubini/sequences.hpp"

namespace fubini {

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::size_t line, const std::string& message)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct BFileEntry {
    std::int64_t index = 0;
    Integer value;

    bool operator==(const BFileEntry&) const = default;
};

struct BFile {
    std::string sequence_id;  // e.g. "A000670"; empty when unknown
    std::vector<BFileEntry> entries;

    bool operator==(const BFile&) const = default;
};

/// True for 'A' followed by exactly six digits.
inline bool is_valid_sequence_id(std::string_view id) {
    return id.size() == 7 && id[0] == 'A' &&
           std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

namespace detail {

inline bool is_decimal_integer(std::string_view token) {
    if (!token.empty() && token.front() == '-') {
        token.remove_prefix(1);
    }
    return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

inline BFile parse_bfile(std::string_view text, std::string sequence_id = {}) {
    BFile file{std::move(sequence_id), {}};
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }

        std::vector<std::string_view> tokens;
        std::size_t cursor = first;
        while (cursor < line.size()) {
            const auto stop = std::min(line.find_first_of(" \t", cursor), line.size());
            tokens.push_back(line.substr(cursor, stop - cursor));
            cursor = line.find_first_not_of(" \t", stop);
            if (cursor == std::string_view::npos) {
                break;
            }
        }
        if (tokens.size() != 2) {
            throw BFileParseError(line_no, "expected 2 tokens, found " + std::to_string(tokens.size()));
        }
        if (!detail::is_decimal_integer(tokens[0]) || !detail::is_decimal_integer(tokens[1])) {
            throw BFileParseError(line_no, "non-integer token in '" + std::string(line) + "'");
        }

        std::int64_t index = 0;
        const auto [ptr, ec] = std::from_chars(tokens[0].data(), tokens[0].data() + tokens[0].size(), index);
        if (ec != std::errc{}) {
            throw BFileParseError(line_no, "index out of range: " + std::string(tokens[0]));
        }
        if (!file.entries.empty() && index != file.entries.back().index + 1) {
            throw BFileParseError(line_no, "gap at index " + std::to_string(file.entries.back().index + 1) +
                                               " (found " + std::to_string(index) + ")");
        }
        file.entries.push_back({index, Integer(std::string(tokens[1]))});
    }
    return file;
}

inline BFile load_bfile(const std::filesystem::path& path, std::string sequence_id = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open b-file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_bfile(buffer.str(), std::move(sequence_id));
}

inline std::string emit_bfile(const SequenceTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        out += std::to_string(table.offset + static_cast<std::int64_t>(i));
        out += ' ';
        out += table.values[i].str();
        out += '\n';
    }
    return out;
}

/// Compare the indices both sides cover, up to and including `limit`.
/// Throws std::invalid_argument when that overlap is empty.
inline VerificationReport crosscheck(const SequenceTable& computed, const BFile& reference, std::int64_t limit) {
    if (computed.values.empty() || reference.entries.empty()) {
        throw std::invalid_argument("crosscheck: empty overlap (one side has no entries)");
    }
    const std::int64_t ref_first = reference.entries.front().index;
    const std::int64_t ref_last = reference.entries.back().index;
    const std::int64_t computed_last = computed.offset + static_cast<std::int64_t>(computed.values.size()) - 1;
    const std::int64_t lo = std::max(computed.offset, ref_first);
    const std::int64_t hi = std::min({computed_last, ref_last, limit});
    if (lo > hi) {
        throw std::invalid_argument("crosscheck: empty overlap between " + std::to_string(computed.offset) + ".." +
                                    std::to_string(computed_last) + " and " + std::to_string(ref_first) + ".." +
                                    std::to_string(ref_last) + " at limit " + std::to_string(limit));
    }

    const std::string id = reference.sequence_id.empty() ? computed.name : reference.sequence_id;
    ReportBuilder report("oeis." + id, lo, hi);
    for (std::int64_t n = lo; n <= hi; ++n) {
        const Integer& expected = reference.entries[static_cast<std::size_t>(n - ref_first)].value;
        const Integer& actual = computed.values[static_cast<std::size_t>(n - computed.offset)];
        if (!report.check(n, expected, actual, computed.name + " vs b-file")) {
            break;
        }
    }
    return std::move(report).finish();
}

}  // namespace fubini
