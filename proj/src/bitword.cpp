#include "a975/bitword.hpp"

#include <stdexcept>

namespace a975 {

BitWord BitWord::from_string(std::string_view s) {
    BitWord w;
    w.bits_.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitWord: expected only '0'/'1', got '" +
                                        std::string(1, c) + "'");
        }
        w.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
}

BitWord BitWord::from_nat(const Nat& n) {
    if (n < 0) {
        throw std::domain_error("BitWord::from_nat: negative value");
    }
    BitWord w;
    if (n == 0) {
        w.bits_.push_back(0);
        return w;
    }
    const unsigned k = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    w.bits_.reserve(k);
    for (unsigned i = k; i-- > 0;) {
        w.bits_.push_back(boost::multiprecision::bit_test(n, i) ? 1 : 0);
    }
    return w;
}

Nat BitWord::to_nat() const {
    if (empty()) {
        throw std::domain_error("BitWord::to_nat: empty word has no value");
    }
    if (length() > 1 && bits_.front() == 0) {
        throw std::domain_error("BitWord::to_nat: leading zero in multi-bit word");
    }
    Nat v = 0;
    for (std::uint8_t b : bits_) {
        v <<= 1;
        v += b;
    }
    return v;
}

void BitWord::append(int bit) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("BitWord::append: bit must be 0 or 1");
    }
    bits_.push_back(static_cast<std::uint8_t>(bit));
}

std::string BitWord::str() const {
    std::string s;
    s.reserve(length());
    for (std::uint8_t b : bits_) {
        s.push_back(static_cast<char>('0' + b));
    }
    return s;
}

}  // namespace a975
