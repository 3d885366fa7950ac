#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace a975 {

// All sequence values are exact and can exceed 64 bits (A(200) is ~2^201),
// so the whole library computes on an arbitrary-precision natural.
// Library code never lets a Nat go negative.
using Nat = boost::multiprecision::cpp_int;

inline Nat pow2(unsigned k) {
    return Nat(1) << k;
}

inline bool nat_even(const Nat& n) {
    return !boost::multiprecision::bit_test(n, 0);
}

inline std::string dec(const Nat& n) {
    return n.str();
}

}  // namespace a975
