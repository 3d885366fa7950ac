#pragma once

#include "a975/bitword.hpp"
#include "a975/nat.hpp"

#include <cstdint>
#include <vector>

namespace a975 {

// A Catalan word is an even-length {0,1} word with equally many zeros and
// ones in which no prefix holds more ones than zeros. Enumeration output
// satisfies the predicate by construction; the alias documents intent.
using CatalanWord = BitWord;

bool is_catalan(const BitWord& w);

// All Catalan words of the given (even) length, lexicographic with 0 < 1.
// enum_catalan(0) is { the empty word }. Odd length -> std::domain_error.
std::vector<CatalanWord> enum_catalan(std::size_t length);

// True iff B(n) = 0, decided without evaluating B: scanning the binary
// form of n left to right after the leading 1, some prefix holds more
// ones than zeros. The equivalence with seq_b(n) == 0 is a verified
// claim (`lemma-4-6`), so this stays independent of seq_b.
bool b_is_zero(const Nat& n);
bool b_is_zero_u64(std::uint64_t n);

// Indices where a zero-run of B begins: exactly the n whose binary form
// is 1w1 or 1w10 with w a (possibly empty) Catalan word. Emitted per
// word, 1w1 before 1w10, words ordered by length then lexicographically:
// 3, 6, 11, 22, 39, 78, 43, 86, ... This listing order is the canonical
// output; it is not numeric order (43 follows 78). Covers all such
// n < 2^max_bits; requires max_bits >= 2.
std::vector<Nat> run_start_indices(unsigned max_bits);

}  // namespace a975
