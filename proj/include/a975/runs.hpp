#pragma once

#include "a975/nat.hpp"
#include "a975/report.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace a975 {

// Machine-word evaluator of B used by the scanners. Verifiers take one as
// a parameter so tests can inject a faulty B and prove they catch it.
using BEval = std::function<std::uint64_t(std::uint64_t)>;

// A maximal block of consecutive zeros of B:
// B(start-1) != 0, B(start..start+length-1) = 0, B(start+length) != 0.
struct Run {
    std::uint64_t start = 0;
    std::uint64_t length = 0;
    std::uint64_t ordinal = 0;  // 1-based position among all runs by start
};

struct RecordEntry {
    unsigned rank = 0;  // 1-based; first run is the first record
    Run run;
};

// Runs of strictly greater length than every earlier run.
struct RecordTable {
    std::vector<RecordEntry> records;
};

// All maximal zero-runs of B with every index, including the bounding
// nonzero neighbours, below 2^max_bits. A zero block reaching
// 2^max_bits - 1 may continue past the scan, so it is dropped rather than
// reported truncated; to observe the run ending at 2^k - 1 in full, scan
// with max_bits = k + 1. Requires 2 <= max_bits <= 30.
std::vector<Run> extract_runs(unsigned max_bits, const BEval& b = {});

// Length of the i-th run (1-based) among extract_runs(max_bits).
// Throws std::out_of_range if fewer runs exist; enlarge max_bits.
Nat run_length_seq(std::uint64_t i, unsigned max_bits);

// Record runs among extract_runs(max_bits), ranked from 1.
RecordTable records(unsigned max_bits);

// Ordinal (among all runs) of the r-th record run, from Catalan partial
// sums: r = 2j+1 -> 2*(C(0)+...+C(j-1)) + C(j); r = 2j+2 ->
// 2*(C(0)+...+C(j)). Values 1, 2, 3, 4, 6, 8, 13, 18, 32, 46, 88, ...
// (OEIS A155051, whose index is r-1). Independent of any scan; the two
// routes are reconciled by verify_theorem_4_8.
Nat record_run_number(unsigned r);

// Checks, for every 2 <= k <= max_k: B vanishes exactly on
// [A(k)+1, 2^k - 1] within that stretch, B(A(k)) != 0, B(2^k) = 2^k, the
// run's length is A(k-1), and the record runs of the scan are exactly
// these. Scans below 2^(max_k+1); requires 2 <= max_k <= 24.
Report verify_theorem_4_4(unsigned max_k, const BEval& b = {});

// Checks that for 1 <= n <= max_rank the run numbered record_run_number(n)
// has length A(n) and is the scan's n-th record. The formula side can be
// overridden for fault injection. Ranks up to max_bits - 2 are observable;
// beyond that throws std::out_of_range.
Report verify_theorem_4_8(unsigned max_rank, unsigned max_bits,
                          const std::function<Nat(unsigned)>& record_no = {});

}  // namespace a975
