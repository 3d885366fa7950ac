#pragma once

#include "a975/nat.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace a975 {

// OEIS b-file: one "index value" pair per line, LF endings, indices
// consecutive from the first entry. Lines starting with '#' are comments.
struct BFileEntry {
    std::int64_t index = 0;
    Nat value;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
    std::vector<BFileEntry> entries;

    friend bool operator==(const BFile&, const BFile&) = default;
};

struct BFileParseError : std::runtime_error {
    BFileParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_no(line) {}
    std::size_t line_no;
};

// Renders entries as "index value\n" lines, no comments.
std::string format_bfile(const BFile& bf);

// Parses and validates: well-formed pairs, indices stepping by exactly 1.
// Throws BFileParseError with a line number otherwise.
BFile parse_bfile(std::istream& in);

}  // namespace a975
