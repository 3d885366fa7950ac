#include "a975/colorings.hpp"

#include "a975/seq_core.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace a975 {

namespace {

constexpr char kLetters[3] = {'A', 'B', 'C'};

int letter_index(char c) {
    switch (c) {
        case 'A': return 0;
        case 'B': return 1;
        case 'C': return 2;
        default: throw std::domain_error("affinity letters are A, B, C");
    }
}

// Forward means one step along A->B->C->A.
bool is_forward_step(char from, char to) {
    return letter_index(to) == (letter_index(from) + 1) % 3;
}

char step(char from, bool forward) {
    const int d = forward ? 1 : 2;
    return kLetters[(letter_index(from) + d) % 3];
}

}  // namespace

AffinityPartition AffinityPartition::from_string(std::string_view s) {
    AffinityPartition p{std::string(s)};
    if (!p.valid()) {
        throw std::domain_error("not a valid affinity partition: " + p.seats);
    }
    return p;
}

bool AffinityPartition::valid() const {
    const std::size_t m = seats.size();
    if (m < 3 || seats[0] != 'A' || seats[1] != 'B') {
        return false;
    }
    bool seen[3] = {false, false, false};
    for (std::size_t i = 0; i < m; ++i) {
        const char c = seats[i];
        if (c != 'A' && c != 'B' && c != 'C') {
            return false;
        }
        seen[letter_index(c)] = true;
        if (c == seats[(i + 1) % m]) {
            return false;
        }
    }
    return seen[0] && seen[1] && seen[2];
}

std::vector<AffinityPartition> enum_partitions(unsigned people) {
    if (people < 3) {
        throw std::domain_error("enum_partitions expects people >= 3");
    }
    std::vector<AffinityPartition> out;
    std::string seats = "AB";
    seats.reserve(people);
    // Two live choices per seat keeps this tiny; letters tried in order,
    // so the output is lexicographic.
    auto extend = [&](auto&& self) -> void {
        if (seats.size() == people) {
            if (seats.back() != 'A' && seats.find('C') != std::string::npos) {
                out.push_back(AffinityPartition{seats});
            }
            return;
        }
        for (char c : kLetters) {
            if (c != seats.back()) {
                seats.push_back(c);
                self(self);
                seats.pop_back();
            }
        }
    };
    extend(extend);
    return out;
}

bool Bubble::valid() const {
    const std::size_t n = arity();
    if (n < 2) {
        return false;
    }
    // Count the color that plays the "blue" role for this base kind.
    const EdgeColor counted = based ? EdgeColor::Blue : EdgeColor::Uncolored;
    std::size_t count = 0;
    for (EdgeColor e : border) {
        if (e == counted) {
            ++count;
        }
    }
    if (count % 3 != (2 * n + 1) % 3) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (border[i] == border[i + 1]) {
            return true;
        }
    }
    return false;
}

std::string Bubble::str() const {
    std::string s;
    s.reserve(arity() + 2);
    s.push_back(based ? 'b' : 'u');
    s.push_back(':');
    for (EdgeColor e : border) {
        s.push_back(e == EdgeColor::Blue ? 'b' : 'u');
    }
    return s;
}

Bubble Bubble::from_string(std::string_view s) {
    if (s.size() < 4 || (s[0] != 'b' && s[0] != 'u') || s[1] != ':') {
        throw std::domain_error("bubble text form is <b|u>:<border over b,u>");
    }
    Bubble b;
    b.based = s[0] == 'b';
    for (char c : s.substr(2)) {
        if (c != 'b' && c != 'u') {
            throw std::domain_error("bubble border colors are b and u");
        }
        b.border.push_back(c == 'b' ? EdgeColor::Blue : EdgeColor::Uncolored);
    }
    return b;
}

std::vector<Bubble> enum_bubbles(unsigned arity, bool based) {
    if (arity < 2 || arity > 24) {
        throw std::domain_error("enum_bubbles expects 2 <= arity <= 24");
    }
    std::vector<Bubble> out;
    Bubble cur;
    cur.based = based;
    auto extend = [&](auto&& self) -> void {
        if (cur.border.size() == arity) {
            if (cur.valid()) {
                out.push_back(cur);
            }
            return;
        }
        for (EdgeColor e : {EdgeColor::Blue, EdgeColor::Uncolored}) {
            cur.border.push_back(e);
            self(self);
            cur.border.pop_back();
        }
    };
    extend(extend);
    return out;
}

Bubble partition_to_bubble(const AffinityPartition& p) {
    if (!p.valid()) {
        throw std::domain_error("partition_to_bubble: invalid partition");
    }
    const std::size_t m = p.people();
    Bubble b;
    b.based = true;  // edge seat0->seat1 is A->B, a forward step
    for (std::size_t i = 1; i < m; ++i) {
        const char from = p.seats[i];
        const char to = p.seats[(i + 1) % m];
        b.border.push_back(is_forward_step(from, to) ? EdgeColor::Blue : EdgeColor::Uncolored);
    }
    return b;
}

AffinityPartition bubble_to_partition(const Bubble& b) {
    if (!b.based) {
        throw std::domain_error("bubble_to_partition: expects a based bubble");
    }
    if (!b.valid()) {
        throw std::domain_error("bubble_to_partition: inadmissible bubble");
    }
    const std::size_t m = b.arity() + 1;
    std::string seats;
    seats.reserve(m);
    seats.push_back('A');
    seats.push_back('B');  // blue base edge: forward step from A
    for (std::size_t i = 0; i + 1 < b.arity(); ++i) {
        seats.push_back(step(seats.back(), b.border[i] == EdgeColor::Blue));
    }
    // The last border edge must lead back to seat 0.
    if (step(seats.back(), b.border.back() == EdgeColor::Blue) != 'A') {
        throw std::domain_error("bubble_to_partition: walk does not close at A");
    }
    AffinityPartition p{std::move(seats)};
    if (!p.valid()) {
        throw std::domain_error("bubble_to_partition: walk is not a valid partition");
    }
    return p;
}

Report verify_bijection(unsigned people_max,
                        const std::function<Bubble(const AffinityPartition&)>& to_bubble) {
    if (people_max < 3) {
        throw std::domain_error("verify_bijection expects people_max >= 3");
    }
    static const std::function<Bubble(const AffinityPartition&)> real =
        [](const AffinityPartition& p) { return partition_to_bubble(p); };
    const auto& fwd = to_bubble ? to_bubble : real;

    Report rep;
    rep.claim_id = "bijection";
    rep.range = "3 <= people <= " + std::to_string(people_max);

    for (unsigned m = 3; m <= people_max && !rep.saturated(); ++m) {
        const std::vector<AffinityPartition> parts = enum_partitions(m);
        const std::vector<Bubble> bubbles = enum_bubbles(m - 1, true);
        const Nat expected = a_of(m - 2);
        if (Nat(parts.size()) != expected) {
            rep.add("partition count, " + std::to_string(m) + " people", dec(expected),
                    std::to_string(parts.size()));
        }
        if (Nat(bubbles.size()) != expected) {
            rep.add("based bubble count, arity " + std::to_string(m - 1), dec(expected),
                    std::to_string(bubbles.size()));
        }

        std::set<std::string> admissible;
        for (const Bubble& b : bubbles) {
            admissible.insert(b.str());
        }
        std::set<std::string> image;
        for (const AffinityPartition& p : parts) {
            if (rep.saturated()) {
                break;
            }
            const Bubble b = fwd(p);
            if (!b.valid() || !b.based) {
                rep.add("image of " + p.seats, "admissible based bubble", b.str());
                continue;
            }
            if (!image.insert(b.str()).second) {
                rep.add("image of " + p.seats, "distinct bubble", "duplicate " + b.str());
            }
            if (!admissible.count(b.str())) {
                rep.add("image of " + p.seats, "a member of enum_bubbles", b.str());
            }
            try {
                const AffinityPartition back = bubble_to_partition(b);
                if (!(back == p)) {
                    rep.add("round trip of " + p.seats, p.seats, back.seats);
                }
            } catch (const std::domain_error& e) {
                rep.add("round trip of " + p.seats, p.seats, std::string("error: ") + e.what());
            }
        }
        if (image != admissible && !rep.saturated()) {
            rep.add("image set, " + std::to_string(m) + " people",
                    std::to_string(admissible.size()) + " admissible bubbles",
                    std::to_string(image.size()) + " reached");
        }
        // And the other direction: every admissible bubble pulls back.
        for (const Bubble& b : bubbles) {
            if (rep.saturated()) {
                break;
            }
            try {
                const AffinityPartition p = bubble_to_partition(b);
                const Bubble again = fwd(p);
                if (!(again == b)) {
                    rep.add("round trip of " + b.str(), b.str(), again.str());
                }
            } catch (const std::domain_error& e) {
                rep.add("pullback of " + b.str(), "a valid partition",
                        std::string("error: ") + e.what());
            }
        }
    }
    return rep;
}

Report verify_lossers(unsigned max_n, const std::function<Nat(unsigned)>& expected_total) {
    if (max_n == 0) {
        throw std::domain_error("verify_lossers expects max_n >= 1");
    }
    static const std::function<Nat(unsigned)> real = [](unsigned n) { return pow2(n) - 1; };
    const auto& expect = expected_total ? expected_total : real;

    Report rep;
    rep.claim_id = "lossers";
    rep.range = "1 <= n <= " + std::to_string(max_n) + " (strings of length n+2)";

    for (unsigned n = 1; n <= max_n && !rep.saturated(); ++n) {
        const unsigned len = n + 2;
        // All strings of length n+2 starting AB, adjacent letters
        // distinct, all three letters present.
        std::vector<std::string> strings;
        std::string cur = "AB";
        auto extend = [&](auto&& self) -> void {
            if (cur.size() == len) {
                if (cur.find('C') != std::string::npos) {
                    strings.push_back(cur);
                }
                return;
            }
            for (char c : kLetters) {
                if (c != cur.back()) {
                    cur.push_back(c);
                    self(self);
                    cur.pop_back();
                }
            }
        };
        extend(extend);

        if (Nat(strings.size()) != expect(n)) {
            rep.add("string count, length " + std::to_string(len), dec(expect(n)),
                    std::to_string(strings.size()));
        }

        std::set<std::string> wrapped;   // ending B or C: circular partitions of n+2
        std::set<std::string> shortened; // ending A, final A dropped: partitions of n+1
        for (const std::string& s : strings) {
            if (s.back() == 'A') {
                shortened.insert(s.substr(0, s.size() - 1));
            } else {
                wrapped.insert(s);
            }
        }

        std::set<std::string> partitions_full;
        for (const AffinityPartition& p : enum_partitions(len)) {
            partitions_full.insert(p.seats);
        }
        std::set<std::string> partitions_short;
        if (len - 1 >= 3) {  // two people admit no partition at all
            for (const AffinityPartition& p : enum_partitions(len - 1)) {
                partitions_short.insert(p.seats);
            }
        }

        if (wrapped != partitions_full) {
            rep.add("B/C-ending strings, n = " + std::to_string(n),
                    std::to_string(partitions_full.size()) + " circular partitions",
                    std::to_string(wrapped.size()) + " strings");
        }
        if (shortened != partitions_short) {
            rep.add("A-ending strings shortened, n = " + std::to_string(n),
                    std::to_string(partitions_short.size()) + " circular partitions",
                    std::to_string(shortened.size()) + " strings");
        }
    }
    return rep;
}

}  // namespace a975
