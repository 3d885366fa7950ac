#pragma once

#include "a975/bitword.hpp"
#include "a975/nat.hpp"

#include <vector>

namespace a975 {

// One configuration of the n-ring puzzle. Bit i of `rings` (most
// significant first) is ring n-i; the written form matches labels like
// "1000" for ring 4 alone on the bar.
struct RingState {
    BitWord rings;

    unsigned ring_count() const { return static_cast<unsigned>(rings.length()); }
    std::string str() const { return rings.str(); }

    static RingState all_off(unsigned n);
    static RingState all_on(unsigned n);
    static RingState top_only(unsigned n);  // 10...0

    friend bool operator==(const RingState&, const RingState&) = default;
};

// A codeword of the n-bit binary reflected Gray code.
struct GrayWord {
    BitWord word;

    std::string str() const { return word.str(); }
    friend bool operator==(const GrayWord&, const GrayWord&) = default;
};

// States one legal move away. Ring 1 (rightmost) always toggles; ring k
// (k >= 2) toggles iff ring k-1 is on and rings 1..k-2 are off. Every
// state therefore has one or two neighbours, and the state graph is a
// path from 0^n to 10^(n-1) - a structural fact the tests establish by
// breadth-first search rather than assume.
std::vector<RingState> legal_moves(const RingState& s);

// Moves between two states of the same puzzle: the states sit on a path,
// at positions given by Gray decode, so the distance is the position
// difference. BFS stays around as the test oracle for this shortcut.
Nat ring_distance(const RingState& a, const RingState& b);

// The 2^n codewords in sequence order; adjacent words differ in one bit.
// Full enumeration, so n is capped at 20.
std::vector<GrayWord> gray_code(unsigned n);

// Codeword at a given position, any n >= 1; index < 2^n.
GrayWord gray_encode(const Nat& index, unsigned n);

// Position of a codeword in its code, by prefix-parity decode.
Nat gray_index(const GrayWord& w);

}  // namespace a975
