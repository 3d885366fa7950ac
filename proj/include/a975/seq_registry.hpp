#pragma once

#include "a975/nat.hpp"
#include "a975/runs.hpp"
#include "a975/seq_core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace a975 {

// Every sequence the CLI can print or exchange as a b-file.
enum class SeqId {
    A,            // OEIS A000975, offset 1
    T,            // triangular numbers, offset 1
    P,            // even-length binary palindromes (A048701), offset 1
    PDiv3,        // P(n)/3 (A048702), offset 1
    Rev,          // binary reversal (A030101), offset 1
    B,            // A265158, offset 1
    C,            // Catalan numbers (A000108), offset 0
    S,            // {b,u}-string counts of the bubble congruence, offset 1
    RunLen,       // zero-run lengths of B (A264784), offset 1
    RunStart,     // zero-run start indices of B, listing order, offset 1
    RecordRunNo,  // ordinal of the n-th record run (A155051), offset 0
};

std::optional<SeqId> parse_seq_id(std::string_view name);
std::string_view seq_id_name(SeqId id);
std::vector<SeqId> all_seq_ids();

// Smallest valid index (0 or 1).
std::int64_t seq_offset(SeqId id);

// Evaluation context: the scan bound backing RunLen/RunStart and the
// route used for A. Caches live per context, never globally: run
// extraction happens once per context, and ascending evaluations of A
// extend the previous term instead of recomputing the recurrence.
// Results are identical with the caches cold (tested).
struct SeqEvalContext {
    unsigned max_bits = 20;
    AMethod a_method = AMethod::Rec;

    const std::vector<Run>& runs() const;
    const std::vector<Nat>& run_starts() const;
    Nat a_term(unsigned n) const;

private:
    mutable std::vector<Run> runs_cache_;
    mutable std::vector<Nat> run_starts_cache_;
    mutable unsigned a_last_index_ = 0;
    mutable Nat a_last_value_;
};

// Term at `index`. Throws std::domain_error below the offset and
// std::out_of_range when RunLen/RunStart exhaust the scan bound.
Nat eval_seq(SeqId id, std::int64_t index, const SeqEvalContext& ctx);

}  // namespace a975
