#include "a975/words.hpp"

#include <bit>
#include <stdexcept>

namespace a975 {

bool is_catalan(const BitWord& w) {
    if (w.length() % 2 != 0) {
        return false;
    }
    std::size_t zeros = 0;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (w.bit(i) == 0) {
            ++zeros;
        } else {
            ++ones;
        }
        if (ones > zeros) {
            return false;
        }
    }
    return zeros == ones;
}

namespace {

void gen_catalan(BitWord& cur, std::size_t zeros, std::size_t ones, std::size_t half,
                 std::vector<CatalanWord>& out) {
    if (zeros + ones == 2 * half) {
        out.push_back(cur);
        return;
    }
    if (zeros < half) {
        cur.append(0);
        gen_catalan(cur, zeros + 1, ones, half, out);
        cur.pop();
    }
    if (ones < zeros) {
        cur.append(1);
        gen_catalan(cur, zeros, ones + 1, half, out);
        cur.pop();
    }
}

}  // namespace

std::vector<CatalanWord> enum_catalan(std::size_t length) {
    if (length % 2 != 0) {
        throw std::domain_error("enum_catalan: length must be even");
    }
    std::vector<CatalanWord> out;
    BitWord cur;
    gen_catalan(cur, 0, 0, length / 2, out);
    return out;
}

bool b_is_zero(const Nat& n) {
    if (n <= 0) {
        throw std::domain_error("b_is_zero requires n >= 1");
    }
    const unsigned k = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    unsigned zeros = 0;
    unsigned ones = 0;
    for (unsigned i = k - 1; i-- > 0;) {
        if (boost::multiprecision::bit_test(n, i)) {
            ++ones;
        } else {
            ++zeros;
        }
        if (ones > zeros) {
            return true;
        }
    }
    return false;
}

bool b_is_zero_u64(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("b_is_zero requires n >= 1");
    }
    int i = 63 - std::countl_zero(n);
    int balance = 0;  // zeros minus ones, after the leading 1
    while (i-- > 0) {
        balance += ((n >> i) & 1u) ? -1 : 1;
        if (balance < 0) {
            return true;
        }
    }
    return false;
}

std::vector<Nat> run_start_indices(unsigned max_bits) {
    if (max_bits < 2) {
        throw std::domain_error("run_start_indices requires max_bits >= 2");
    }
    std::vector<Nat> out;
    for (std::size_t len = 0; len + 2 <= max_bits; len += 2) {
        for (const CatalanWord& w : enum_catalan(len)) {
            Nat v = 1;
            for (std::size_t i = 0; i < w.length(); ++i) {
                v <<= 1;
                v += w.bit(i);
            }
            out.push_back(2 * v + 1);  // 1w1
            if (len + 3 <= max_bits) {
                out.push_back(4 * v + 2);  // 1w10
            }
        }
    }
    return out;
}

}  // namespace a975
