#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace a975 {

struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;
};

// Outcome of one verification claim. A report fails if and only if it
// carries at least one counterexample; the stored list is capped but the
// total found is kept for the summary text.
struct Report {
    static constexpr std::size_t kCounterexampleCap = 10;

    std::string claim_id;
    std::string range;
    std::vector<Counterexample> counterexamples;
    std::size_t total_counterexamples = 0;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return total_counterexamples == 0; }
    const char* status() const { return passed() ? "pass" : "fail"; }

    // Records a failure; only the first kCounterexampleCap are stored.
    void add(std::string input, std::string expected, std::string actual);

    // True once further counterexamples cannot change the stored report;
    // scan loops may stop early.
    bool saturated() const { return total_counterexamples >= kCounterexampleCap; }

    // {"schema":..., "claim_id":..., "range":..., "status":...,
    //  "counterexamples":[...], "elapsed_ms":...} as a compact JSON line.
    std::string json() const;

    // One-line human form: "PASS claim-id  range  (12 ms)".
    std::string text() const;
};

}  // namespace a975
