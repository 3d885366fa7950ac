#pragma once

#include "a975/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace a975 {

// Knobs shared by all claims. Each claim has one primary bound, set by
// --max-n, and scan-based claims also take --max-bits; unset fields keep
// the claim's default (chosen so `verify all` finishes within a minute).
struct ClaimOptions {
    std::optional<std::uint64_t> max_n;
    std::optional<unsigned> max_bits;

    // Runs the claim against a deliberately broken input - one seeded
    // defect per claim - to prove the verifier can fail. The claim must
    // then report counterexamples.
    bool mutate = false;
};

// Claim ids in canonical order; `verify all` runs exactly these.
const std::vector<std::string>& claim_ids();
bool is_claim_id(std::string_view id);
std::string_view claim_summary(std::string_view id);

// Runs one claim and stamps its elapsed time. Unknown ids throw
// std::invalid_argument; bound violations throw std::domain_error.
Report run_claim(std::string_view id, const ClaimOptions& opts = {});

}  // namespace a975
