#pragma once

#include "a975/nat.hpp"
#include "a975/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace a975 {

// Seats around a circular table assigned to groups A, B, C so that
// neighbours always differ and all three groups occur. Seat 0 is pinned
// to A and seat 1 to B, which quotients out the group relabelings.
struct AffinityPartition {
    std::string seats;  // over 'A','B','C'; seats[0]='A', seats[1]='B'

    std::size_t people() const { return seats.size(); }
    static AffinityPartition from_string(std::string_view s);  // validates
    bool valid() const;

    friend bool operator==(const AffinityPartition&, const AffinityPartition&) = default;
    friend auto operator<=>(const AffinityPartition&, const AffinityPartition&) = default;
};

enum class EdgeColor : std::uint8_t { Blue, Uncolored };

// A polygon reduced to its colors: one base edge plus a border of two or
// more edges, each blue or uncolored. `based` means the base is blue.
// Admissible bubbles have a blue-border count congruent to 2*arity+1
// (mod 3) - with blue and uncolored swapped when unbased - and some two
// consecutive border edges sharing a color. Border adjacency runs along
// the open border path only; it does not wrap through the base.
struct Bubble {
    bool based = true;
    std::vector<EdgeColor> border;

    std::size_t arity() const { return border.size(); }
    bool valid() const;

    // "b:bub" - base marker, colon, border colors (b = blue, u = uncolored).
    std::string str() const;
    static Bubble from_string(std::string_view s);

    friend bool operator==(const Bubble&, const Bubble&) = default;
    friend auto operator<=>(const Bubble&, const Bubble&) = default;
};

// All affinity partitions of `people` >= 3 seats, lexicographic by seat
// string. |result| = A(people - 2).
std::vector<AffinityPartition> enum_partitions(unsigned people);

// All admissible bubbles of the given arity >= 2, border lexicographic
// with blue < uncolored. |result| = A(arity - 1) for either base kind.
std::vector<Bubble> enum_bubbles(unsigned arity, bool based);

// Walks the table from seat 0: a step forward in the cycle A->B->C->A
// colors the corresponding edge blue, a step backward leaves it
// uncolored. The seat0->seat1 edge (A then B) is the blue base; the
// remaining people-1 edges form the border in walk order.
Bubble partition_to_bubble(const AffinityPartition& p);

// Inverse walk: seat 0 = A, then apply each edge of a based bubble
// (base first, then the border) as a forward step when blue, backward
// when uncolored. Throws std::domain_error for unbased or inadmissible
// input; an admissible based bubble always closes back to A and uses all
// three letters.
AffinityPartition bubble_to_partition(const Bubble& b);

// Checks for every 3 <= m <= people_max that partition_to_bubble maps
// enum_partitions(m) bijectively onto enum_bubbles(m-1, based) with
// bubble_to_partition as its inverse, and that both counts equal A(m-2).
Report verify_bijection(unsigned people_max,
                        const std::function<Bubble(const AffinityPartition&)>& to_bubble = {});

// Checks the linear-string decomposition behind the partition count: for
// 1 <= n <= max_n there are exactly `expected_total(n)` (default 2^n - 1)
// strings of length n+2 that start AB, use all three letters and never
// repeat adjacently; the ones ending in B or C are exactly the circular
// partitions of n+2 people, and dropping the final A from the rest
// bijects onto the partitions of n+1 people.
Report verify_lossers(unsigned max_n,
                      const std::function<Nat(unsigned)>& expected_total = {});

}  // namespace a975
