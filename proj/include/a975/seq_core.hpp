#pragma once

#include "a975/nat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace a975 {

// Evaluation routes for sequence A (OEIS A000975). The five routes are
// independent; their agreement is exercised by tests and by the
// `char-equiv` claim.
enum class AMethod {
    Rec,         // A(1)=1, A(2n)=2A(2n-1), A(2n+1)=2A(2n)+1
    Binary,      // value of the alternating bit word 1010... of length n
    Complement,  // A(n) = (2^n - 1) - A(n-1)
    Gap,         // A(n) = A(n-2) + 2^(n-1)
    Closed,      // A(n) = (2^(n+2) - 3 - (-1)^n) / 6
};

std::optional<AMethod> parse_a_method(std::string_view name);
std::string_view a_method_name(AMethod m);

// A(n) for n >= 1; throws std::domain_error at n = 0.
Nat a_of(unsigned n, AMethod method = AMethod::Rec);

// T(n) = n(n+1)/2 for n >= 1.
Nat triangular(const Nat& n);

// Number of bits in the binary form of n >= 1.
unsigned bit_length(const Nat& n);

// Binary reversal of n >= 1 (OEIS A030101): reverse the bit string and
// read it back as a number; leading zeros of the reversal vanish.
Nat reverse_bits(const Nat& n);

// P(n) = n * 2^bit_length(n) + reverse_bits(n) (OEIS A048701): the
// even-length binary palindrome made of n followed by its reversal.
Nat palindrome_p(const Nat& n);

// P(n)/3, exact (OEIS A048702). Throws std::logic_error if P(n) were not
// divisible by 3; that never happens (tested).
Nat palindrome_p_div3(const Nat& n);

// B(n) (OEIS A265158): B(1)=1, B(2n)=2B(n), B(2n+1)=floor(B(n)/2).
Nat seq_b(const Nat& n);

// Machine-word route for B, bit-exact with the Nat route (same tests).
// Used by the scanners, which evaluate B millions of times.
std::uint64_t seq_b_u64(std::uint64_t n);

// Binomial coefficient, exact.
Nat binomial(unsigned n, unsigned k);

// C(n) = binomial(2n, n)/(n+1) (OEIS A000108), 0-indexed: C(0) = 1.
Nat catalan(unsigned n);

// S(n): number of strings of length n over {b,u} whose count of b's is
// congruent to 2n+1 (mod 3). Satisfies S(n) + S(n+1) = 2^n.
Nat s_count(unsigned n);

namespace detail {

// Parity-split closed form for A(n); internal sixth route used by the
// equivalence checks, not part of the public method set.
Nat a_parity_split(unsigned n);

// Left-to-right bit-scan route for B: consume the leading 1, then double
// on 0 and halve on 1. Must agree with the recursion route everywhere.
Nat seq_b_scan(const Nat& n);

}  // namespace detail

}  // namespace a975
