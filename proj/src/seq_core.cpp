#include "a975/seq_core.hpp"

#include <bit>
#include <stdexcept>

namespace a975 {

namespace {

void require_positive(const Nat& n, const char* what) {
    if (n <= 0) {
        throw std::domain_error(std::string(what) + " requires n >= 1");
    }
}

// Exact quotient; a remainder means the caller's arithmetic is broken.
Nat exact_div(const Nat& num, unsigned div, const char* what) {
    if (num % div != 0) {
        throw std::logic_error(std::string(what) + ": quotient is not exact");
    }
    return num / div;
}

}  // namespace

std::optional<AMethod> parse_a_method(std::string_view name) {
    if (name == "rec") return AMethod::Rec;
    if (name == "binary") return AMethod::Binary;
    if (name == "complement") return AMethod::Complement;
    if (name == "gap") return AMethod::Gap;
    if (name == "closed") return AMethod::Closed;
    return std::nullopt;
}

std::string_view a_method_name(AMethod m) {
    switch (m) {
        case AMethod::Rec: return "rec";
        case AMethod::Binary: return "binary";
        case AMethod::Complement: return "complement";
        case AMethod::Gap: return "gap";
        case AMethod::Closed: return "closed";
    }
    return "?";
}

Nat a_of(unsigned n, AMethod method) {
    if (n == 0) {
        throw std::domain_error("a_of requires n >= 1");
    }
    switch (method) {
        case AMethod::Rec: {
            // Double to reach an even index, double-and-add-one for odd.
            Nat a = 1;
            for (unsigned i = 2; i <= n; ++i) {
                a <<= 1;
                if (i % 2 == 1) {
                    a += 1;
                }
            }
            return a;
        }
        case AMethod::Binary: {
            // 1010... of length n, most significant bit first.
            Nat a = 0;
            for (unsigned i = 0; i < n; ++i) {
                a <<= 1;
                if (i % 2 == 0) {
                    a += 1;
                }
            }
            return a;
        }
        case AMethod::Complement: {
            Nat a = 1;
            for (unsigned i = 2; i <= n; ++i) {
                a = (pow2(i) - 1) - a;
            }
            return a;
        }
        case AMethod::Gap: {
            if (n == 1) return 1;
            if (n == 2) return 2;
            Nat odd = 1;   // A(i) for the most recent odd i
            Nat even = 2;  // A(i) for the most recent even i
            for (unsigned i = 3; i <= n; ++i) {
                Nat& slot = (i % 2 == 1) ? odd : even;
                slot += pow2(i - 1);
            }
            return (n % 2 == 1) ? odd : even;
        }
        case AMethod::Closed: {
            Nat num = pow2(n + 2) - 3 - (n % 2 == 0 ? 1 : -1);
            return exact_div(num, 6, "a_of closed form");
        }
    }
    throw std::logic_error("a_of: unknown method");
}

Nat detail::a_parity_split(unsigned n) {
    if (n == 0) {
        throw std::domain_error("a_of requires n >= 1");
    }
    if (n % 2 == 1) {
        return exact_div(pow2(n + 1) - 1, 3, "a_of parity split (odd)");
    }
    return exact_div(pow2(n + 1) - 2, 3, "a_of parity split (even)");
}

Nat triangular(const Nat& n) {
    require_positive(n, "triangular");
    return n * (n + 1) / 2;
}

unsigned bit_length(const Nat& n) {
    require_positive(n, "bit_length");
    return static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
}

Nat reverse_bits(const Nat& n) {
    require_positive(n, "reverse_bits");
    const unsigned k = bit_length(n);
    Nat r = 0;
    for (unsigned i = 0; i < k; ++i) {
        r <<= 1;
        if (boost::multiprecision::bit_test(n, i)) {
            r += 1;
        }
    }
    return r;
}

Nat palindrome_p(const Nat& n) {
    require_positive(n, "palindrome_p");
    return (n << bit_length(n)) + reverse_bits(n);
}

Nat palindrome_p_div3(const Nat& n) {
    return exact_div(palindrome_p(n), 3, "palindrome_p_div3");
}

Nat seq_b(const Nat& n) {
    require_positive(n, "seq_b");
    if (n == 1) {
        return 1;
    }
    Nat half = seq_b(n >> 1);
    if (nat_even(n)) {
        half <<= 1;
    } else {
        half >>= 1;
    }
    return half;
}

Nat detail::seq_b_scan(const Nat& n) {
    require_positive(n, "seq_b");
    const unsigned k = bit_length(n);
    Nat v = 1;  // leading 1 consumed
    for (unsigned i = k - 1; i-- > 0;) {
        if (boost::multiprecision::bit_test(n, i)) {
            v >>= 1;
        } else {
            v <<= 1;
        }
    }
    return v;
}

std::uint64_t seq_b_u64(std::uint64_t n) {
    if (n == 0) {
        throw std::domain_error("seq_b requires n >= 1");
    }
    int i = 63 - std::countl_zero(n);
    std::uint64_t v = 1;
    while (i-- > 0) {
        v = ((n >> i) & 1u) ? v >> 1 : v << 1;
    }
    return v;
}

Nat binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Nat b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact at every step
    }
    return b;
}

Nat catalan(unsigned n) {
    return exact_div(binomial(2 * n, n), n + 1, "catalan");
}

Nat s_count(unsigned n) {
    if (n == 0) {
        throw std::domain_error("s_count requires n >= 1");
    }
    const unsigned target = (2u * n + 1u) % 3u;
    Nat total = 0;
    Nat row = 1;  // binomial(n, k), advanced incrementally
    for (unsigned k = 0; k <= n; ++k) {
        if (k % 3 == target) {
            total += row;
        }
        if (k < n) {
            row *= n - k;
            row /= k + 1;
        }
    }
    return total;
}

}  // namespace a975
