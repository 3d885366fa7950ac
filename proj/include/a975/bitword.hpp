#pragma once

#include "a975/nat.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace a975 {

// A finite {0,1} word with explicit length, most significant bit first.
// Unlike a number, leading zeros are significant; the empty word is valid.
class BitWord {
public:
    BitWord() = default;

    static BitWord from_string(std::string_view s);

    // Binary digits of n; from_nat(0) is the single-bit word "0".
    static BitWord from_nat(const Nat& n);

    // Numeric value. Defined only for single-bit words and words starting
    // with 1; otherwise the word/number correspondence would be ambiguous.
    Nat to_nat() const;

    std::size_t length() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_[i]; }

    void append(int bit);
    void pop() { bits_.pop_back(); }

    std::string str() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;
    // Lexicographic with 0 < 1; shorter prefixes sort first.
    friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace a975
