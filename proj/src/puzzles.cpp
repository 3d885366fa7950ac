#include "a975/puzzles.hpp"

#include <stdexcept>

namespace a975 {

namespace {

RingState repeat_bit(unsigned n, int bit) {
    if (n == 0) {
        throw std::domain_error("ring states need n >= 1");
    }
    RingState s;
    for (unsigned i = 0; i < n; ++i) {
        s.rings.append(bit);
    }
    return s;
}

BitWord toggled(const BitWord& w, std::size_t pos) {
    BitWord out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        out.append(i == pos ? 1 - w.bit(i) : w.bit(i));
    }
    return out;
}

}  // namespace

RingState RingState::all_off(unsigned n) {
    return repeat_bit(n, 0);
}

RingState RingState::all_on(unsigned n) {
    return repeat_bit(n, 1);
}

RingState RingState::top_only(unsigned n) {
    RingState s = repeat_bit(n, 0);
    s.rings = toggled(s.rings, 0);
    return s;
}

std::vector<RingState> legal_moves(const RingState& s) {
    const std::size_t n = s.rings.length();
    if (n == 0) {
        throw std::domain_error("legal_moves: empty state");
    }
    std::vector<RingState> out;
    // Ring 1 is the last written bit.
    out.push_back({toggled(s.rings, n - 1)});
    // Ring above the lowest ring on the bar: find the rightmost 1.
    for (std::size_t i = n; i-- > 0;) {
        if (s.rings.bit(i) == 1) {
            if (i > 0) {  // ring above it exists
                out.push_back({toggled(s.rings, i - 1)});
            }
            break;
        }
    }
    return out;
}

std::vector<GrayWord> gray_code(unsigned n) {
    if (n == 0 || n > 20) {
        throw std::domain_error("gray_code expects 1 <= n <= 20");
    }
    std::vector<GrayWord> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        const std::uint64_t g = i ^ (i >> 1);
        GrayWord w;
        for (unsigned bit = n; bit-- > 0;) {
            w.word.append(static_cast<int>((g >> bit) & 1u));
        }
        out.push_back(std::move(w));
    }
    return out;
}

GrayWord gray_encode(const Nat& index, unsigned n) {
    if (n == 0) {
        throw std::domain_error("gray_encode expects n >= 1");
    }
    if (index < 0 || index >= pow2(n)) {
        throw std::domain_error("gray_encode: index out of range for n bits");
    }
    const Nat g = index ^ (index >> 1);
    GrayWord w;
    for (unsigned bit = n; bit-- > 0;) {
        w.word.append(boost::multiprecision::bit_test(g, bit) ? 1 : 0);
    }
    return w;
}

Nat gray_index(const GrayWord& w) {
    if (w.word.empty()) {
        throw std::domain_error("gray_index: empty codeword");
    }
    Nat index = 0;
    int parity = 0;
    for (std::size_t i = 0; i < w.word.length(); ++i) {
        parity ^= w.word.bit(i);
        index <<= 1;
        index += parity;
    }
    return index;
}

Nat ring_distance(const RingState& a, const RingState& b) {
    if (a.ring_count() != b.ring_count() || a.ring_count() == 0) {
        throw std::domain_error("ring_distance: states must share a ring count >= 1");
    }
    const Nat pa = gray_index({a.rings});
    const Nat pb = gray_index({b.rings});
    return pa > pb ? pa - pb : pb - pa;
}

}  // namespace a975
