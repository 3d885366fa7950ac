#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a975/seq_core.hpp"
#include "a975/words.hpp"

#include <algorithm>
#include <random>

using namespace a975;

TEST_CASE("BitWord round trips and conversions") {
    CHECK(BitWord::from_nat(Nat(0)).str() == "0");
    CHECK(BitWord::from_nat(Nat(85)).str() == "1010101");
    CHECK(BitWord::from_string("1010101").to_nat() == 85);
    CHECK(BitWord::from_string("0").to_nat() == 0);
    CHECK(BitWord::from_string("1").to_nat() == 1);
    CHECK_THROWS_AS(BitWord::from_string("01").to_nat(), std::domain_error);
    CHECK_THROWS_AS(BitWord().to_nat(), std::domain_error);
    CHECK_THROWS_AS(BitWord::from_string("012"), std::invalid_argument);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 500; ++i) {
        Nat n = Nat(rng()) * Nat(rng());  // up to ~128 bits
        CHECK(BitWord::from_nat(n).to_nat() == n);
    }
}

TEST_CASE("catalan word predicate") {
    CHECK(is_catalan(BitWord::from_string("0101")));
    CHECK(is_catalan(BitWord()));  // the null word
    CHECK_FALSE(is_catalan(BitWord::from_string("10")));
    CHECK(is_catalan(BitWord::from_string("0011")));
    CHECK_FALSE(is_catalan(BitWord::from_string("0110")));
    CHECK_FALSE(is_catalan(BitWord::from_string("00")));
    CHECK_FALSE(is_catalan(BitWord::from_string("010")));  // odd length
}

TEST_CASE("catalan enumeration: pinned lists") {
    const std::vector<CatalanWord> empty = enum_catalan(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());

    const std::vector<CatalanWord> four = enum_catalan(4);
    REQUIRE(four.size() == 2);
    CHECK(four[0].str() == "0011");
    CHECK(four[1].str() == "0101");

    const std::vector<CatalanWord> six = enum_catalan(6);
    REQUIRE(six.size() == 5);
    const char* expected[5] = {"000111", "001011", "001101", "010011", "010101"};
    for (int i = 0; i < 5; ++i) {
        CHECK(six[i].str() == expected[i]);
    }

    CHECK_THROWS_AS(enum_catalan(3), std::domain_error);
}

TEST_CASE("catalan enumeration: counts, validity, order") {
    for (unsigned m = 0; m <= 10; ++m) {
        const std::vector<CatalanWord> words = enum_catalan(2 * m);
        CHECK(Nat(words.size()) == catalan(m));
        for (std::size_t i = 0; i < words.size(); ++i) {
            CHECK(is_catalan(words[i]));
            CHECK(words[i].length() == 2 * m);
            if (i > 0) {
                CHECK(words[i - 1] < words[i]);
            }
        }
    }
}

TEST_CASE("zero predicate matches B") {
    CHECK(b_is_zero(Nat(22)));
    CHECK_FALSE(b_is_zero(Nat(18)));
    for (unsigned k = 0; k <= 20; ++k) {
        CHECK_FALSE(b_is_zero(pow2(k)));
    }
    for (std::uint64_t n = 1; n < (1u << 16); ++n) {
        const bool scan = b_is_zero_u64(n);
        CHECK(scan == b_is_zero(Nat(n)));
        CHECK(scan == (seq_b_u64(n) == 0));
    }
    CHECK_THROWS_AS(b_is_zero(Nat(0)), std::domain_error);
}

TEST_CASE("run starts: per-word listing order") {
    const std::vector<Nat> starts = run_start_indices(8);
    REQUIRE(starts.size() >= 6);
    const std::uint64_t first_six[6] = {3, 6, 11, 22, 39, 78};
    for (int i = 0; i < 6; ++i) {
        CHECK(starts[i] == first_six[i]);
    }
    // numeric order would interleave 43 = 1.0101.1 before 78
    CHECK(starts[6] == 43);
    CHECK(starts[7] == 86);
    CHECK_THROWS_AS(run_start_indices(1), std::domain_error);
}

TEST_CASE("run starts: exactly where a zero block of B begins") {
    for (unsigned max_bits : {8u, 12u, 14u}) {
        std::vector<Nat> starts = run_start_indices(max_bits);
        for (const Nat& n : starts) {
            CHECK(seq_b(n) == 0);
            CHECK(seq_b(n - 1) != 0);
        }
        std::sort(starts.begin(), starts.end());
        CHECK(std::adjacent_find(starts.begin(), starts.end()) == starts.end());

        std::vector<Nat> scanned;
        bool prev_zero = false;
        for (std::uint64_t n = 1; n < (std::uint64_t{1} << max_bits); ++n) {
            const bool zero = seq_b_u64(n) == 0;
            if (zero && !prev_zero) {
                scanned.push_back(Nat(n));
            }
            prev_zero = zero;
        }
        CHECK(starts == scanned);
    }
}

TEST_CASE("run starts: 2k-bit starts count the Catalan words of length 2k-2") {
    const std::vector<Nat> starts = run_start_indices(16);
    for (unsigned k = 1; 2 * k <= 16; ++k) {
        std::size_t count = 0;
        for (const Nat& s : starts) {
            if (bit_length(s) == 2 * k) {
                ++count;
            }
        }
        CHECK(Nat(count) == catalan(k - 1));
    }
}
