#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a975/bitword.hpp"
#include "a975/seq_core.hpp"

#include <cstdint>
#include <random>
#include <string>

using namespace a975;

namespace {

const AMethod kAllMethods[] = {AMethod::Rec, AMethod::Binary, AMethod::Complement, AMethod::Gap,
                               AMethod::Closed};

// Count the trailing zero bits of n > 0.
unsigned trailing_zeros(Nat n) {
    unsigned z = 0;
    while (nat_even(n)) {
        n >>= 1;
        ++z;
    }
    return z;
}

}  // namespace

TEST_CASE("A: first ten terms on every route") {
    const std::uint64_t table[10] = {1, 2, 5, 10, 21, 42, 85, 170, 341, 682};
    for (unsigned n = 1; n <= 10; ++n) {
        for (AMethod m : kAllMethods) {
            CHECK(a_of(n, m) == table[n - 1]);
        }
        CHECK(detail::a_parity_split(n) == table[n - 1]);
    }
}

TEST_CASE("A: n = 7 is the alternating 7-bit word") {
    CHECK(a_of(7, AMethod::Binary) == 85);
    CHECK(BitWord::from_nat(a_of(7)).str() == "1010101");
}

TEST_CASE("A: routes agree out to n = 200") {
    for (unsigned n = 1; n <= 200; ++n) {
        const Nat ref = a_of(n, AMethod::Rec);
        for (AMethod m : kAllMethods) {
            CHECK(a_of(n, m) == ref);
        }
        CHECK(detail::a_parity_split(n) == ref);
    }
    // genuinely multiword at the top of the range
    CHECK(bit_length(a_of(200)) == 200);
}

TEST_CASE("A: parity and neighbour-sum identities") {
    Nat prev = 0;
    for (unsigned n = 1; n <= 200; ++n) {
        const Nat v = a_of(n);
        CHECK(nat_even(v) == (n % 2 == 0));
        if (n >= 2) {
            CHECK(v + prev == pow2(n) - 1);
        }
        if (n >= 3) {
            CHECK(v - a_of(n - 2) == pow2(n - 1));
        }
        prev = v;
    }
}

TEST_CASE("A: index zero is rejected") {
    for (AMethod m : kAllMethods) {
        CHECK_THROWS_AS(a_of(0, m), std::domain_error);
    }
}

TEST_CASE("triangular numbers") {
    CHECK(triangular(Nat(1)) == 1);
    CHECK(triangular(Nat(5)) == 15);
    CHECK(triangular(Nat(10)) == 55);
    const std::uint64_t row[15] = {1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120};
    for (unsigned n = 1; n <= 15; ++n) {
        CHECK(triangular(Nat(n)) == row[n - 1]);
    }
    CHECK_THROWS_AS(triangular(Nat(0)), std::domain_error);
}

TEST_CASE("bit_length") {
    CHECK(bit_length(Nat(12)) == 4);
    CHECK(bit_length(Nat(1)) == 1);
    CHECK(bit_length(pow2(40)) == 41);
    CHECK_THROWS_AS(bit_length(Nat(0)), std::domain_error);
}

TEST_CASE("reverse_bits: pinned values and the string oracle") {
    CHECK(reverse_bits(Nat(12)) == 3);
    CHECK(reverse_bits(Nat(1)) == 1);
    CHECK(reverse_bits(Nat(22)) == 13);  // 10110 reversed reads 01101
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const std::string bits = BitWord::from_nat(Nat(n)).str();
        std::string rev(bits.rbegin(), bits.rend());
        while (rev.size() > 1 && rev.front() == '0') {
            rev.erase(rev.begin());
        }
        CHECK(reverse_bits(Nat(n)) == BitWord::from_string(rev).to_nat());
    }
}

TEST_CASE("reverse_bits: involution up to trailing zeros") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const Nat twice = reverse_bits(reverse_bits(Nat(n)));
        if (n % 2 == 1) {
            CHECK(twice == n);
        } else {
            CHECK(twice * pow2(trailing_zeros(Nat(n))) == n);
        }
    }
}

TEST_CASE("palindrome P: pinned values") {
    CHECK(palindrome_p(Nat(12)) == 195);  // 11000011
    CHECK(palindrome_p(Nat(5)) == 45);    // 101101
    CHECK(palindrome_p(Nat(1)) == 3);     // 11
}

TEST_CASE("palindrome P/3: the first table column") {
    const std::uint64_t p_div3[10] = {1, 3, 5, 11, 15, 17, 21, 43, 51, 55};
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(palindrome_p_div3(Nat(n)) == p_div3[n - 1]);
    }
    CHECK(palindrome_p_div3(Nat(10)) == 55);
    CHECK(palindrome_p_div3(Nat(8)) == 43);
    CHECK(palindrome_p_div3(Nat(2)) == 3);
}

TEST_CASE("palindrome P: always divisible by 3") {
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        CHECK(palindrome_p(Nat(n)) % 3 == 0);
        CHECK_NOTHROW(palindrome_p_div3(Nat(n)));
    }
}

TEST_CASE("B: the first 32 terms") {
    const std::uint64_t table[32] = {1, 2, 0, 4,  1, 0, 0, 8, 2, 2, 0, 0, 0, 0, 0, 16,
                                     4, 4, 1, 4,  1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 32};
    for (std::uint64_t n = 1; n <= 32; ++n) {
        CHECK(seq_b(Nat(n)) == table[n - 1]);
        CHECK(seq_b_u64(n) == table[n - 1]);
    }
    CHECK(seq_b(Nat(18)) == 4);
    CHECK(seq_b(Nat(22)) == 0);
    CHECK(seq_b(Nat(19)) == 1);
}

TEST_CASE("B: recursion, bit scan and machine route agree") {
    for (std::uint64_t n = 1; n <= (1u << 20); ++n) {
        const Nat by_recursion = seq_b(Nat(n));
        CHECK(by_recursion == detail::seq_b_scan(Nat(n)));
        CHECK(by_recursion == seq_b_u64(n));
    }
    std::mt19937_64 rng(975);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = (rng() >> (rng() % 40)) | 1u;
        CHECK(seq_b(Nat(n)) == seq_b_u64(n));
        CHECK(detail::seq_b_scan(Nat(n)) == seq_b_u64(n));
    }
    CHECK_THROWS_AS(seq_b(Nat(0)), std::domain_error);
    CHECK_THROWS_AS(seq_b_u64(0), std::domain_error);
}

TEST_CASE("B: pinned lemma values") {
    for (unsigned k = 0; k <= 20; ++k) {
        CHECK(seq_b(pow2(k)) == pow2(k));
    }
    for (unsigned k = 1; k <= 20; ++k) {
        CHECK(seq_b(a_of(k)) == (k % 2 == 1 ? 1 : 2));
    }
    for (unsigned k = 2; k <= 20; ++k) {
        CHECK(seq_b(a_of(k) + 1) == 0);
    }
}

TEST_CASE("catalan numbers against a brute-force word count") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    for (unsigned m = 0; m <= 8; ++m) {
        // count balanced words directly: every prefix has zeros >= ones
        std::uint64_t count = 0;
        const unsigned len = 2 * m;
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << len); ++word) {
            int balance = 0;
            bool ok = true;
            for (unsigned i = len; i-- > 0;) {
                balance += ((word >> i) & 1u) ? -1 : 1;
                if (balance < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && balance == 0) {
                ++count;
            }
        }
        CHECK(catalan(m) == count);
    }
}

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(64, 32) == Nat("1832624140942590534"));
    Nat row_sum = 0;
    for (unsigned k = 0; k <= 20; ++k) {
        row_sum += binomial(20, k);
    }
    CHECK(row_sum == pow2(20));
}

TEST_CASE("S: brute force over small strings") {
    CHECK(s_count(2) == 1);  // only "bb"
    CHECK(s_count(3) == 3);
    for (unsigned n = 1; n <= 12; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
            const unsigned b_count = static_cast<unsigned>(__builtin_popcountll(word));
            if (b_count % 3 == (2 * n + 1) % 3) {
                ++count;
            }
        }
        CHECK(s_count(n) == count);
    }
}

TEST_CASE("S: adjacent sums are powers of two") {
    CHECK(s_count(4) + s_count(5) == 16);
    for (unsigned n = 1; n <= 40; ++n) {
        CHECK(s_count(n) + s_count(n + 1) == pow2(n));
    }
    CHECK_THROWS_AS(s_count(0), std::domain_error);
}
