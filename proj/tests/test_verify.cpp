#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a975/verify.hpp"

#include <set>

using namespace a975;

namespace {

// Small bounds so the whole matrix stays quick; every claim still runs
// its real logic.
ClaimOptions quick_bounds(const std::string& id, bool mutate = false) {
    ClaimOptions opts;
    opts.mutate = mutate;
    if (id == "lemma-3-1") {
        opts.max_n = 2000;
    } else if (id == "theorem-3-2") {
        opts.max_n = 2048;
    } else if (id == "lemma-4-6" || id == "lemma-4-7") {
        opts.max_bits = 14;
    } else if (id == "theorem-4-8") {
        opts.max_n = 8;
        opts.max_bits = 14;
    } else if (id == "theorem-5-2") {
        opts.max_n = 12;
    } else if (id == "bijection") {
        opts.max_n = 9;
    } else if (id == "occurrence-1") {
        opts.max_n = 9;
    } else if (id == "occurrence-2") {
        opts.max_n = 20;
    } else if (id == "occurrence-3") {
        opts.max_n = 11;
    } else if (id == "lossers") {
        opts.max_n = 7;
    }
    return opts;
}

// Mutants are seeded at fixed inputs; make sure the quick bounds still
// cover them.
ClaimOptions mutant_bounds(const std::string& id) {
    ClaimOptions opts = quick_bounds(id, true);
    if (id == "theorem-3-2") {
        opts.max_n = 64;  // seeded at n = 4
    }
    return opts;
}

}  // namespace

TEST_CASE("the claim registry is exactly the documented list") {
    const std::vector<std::string> expected = {
        "char-equiv",  "parity",       "lemma-3-1",   "theorem-3-2", "lemma-4-1",
        "lemma-4-2",   "lemma-4-3",    "theorem-4-4", "lemma-4-6",   "lemma-4-7",
        "theorem-4-8", "lemma-5-1",    "theorem-5-2", "bijection",   "occurrence-1",
        "occurrence-2", "occurrence-3", "lossers"};
    CHECK(claim_ids() == expected);
    for (const std::string& id : expected) {
        CHECK(is_claim_id(id));
        CHECK_FALSE(claim_summary(id).empty());
    }
    CHECK_FALSE(is_claim_id("all"));
    CHECK_FALSE(is_claim_id("theorem-9-9"));
    CHECK_THROWS_AS(run_claim("theorem-9-9"), std::invalid_argument);
}

TEST_CASE("every claim passes at reduced bounds") {
    for (const std::string& id : claim_ids()) {
        const Report rep = run_claim(id, quick_bounds(id));
        INFO("claim ", id, ": ", rep.json());
        CHECK(rep.passed());
        CHECK(rep.claim_id == id);
        CHECK(rep.counterexamples.empty());
    }
}

TEST_CASE("every claim fails under its seeded defect") {
    for (const std::string& id : claim_ids()) {
        const Report rep = run_claim(id, mutant_bounds(id));
        INFO("claim ", id, ": ", rep.json());
        CHECK_FALSE(rep.passed());
        CHECK(!rep.counterexamples.empty());
        CHECK(rep.counterexamples.size() <= Report::kCounterexampleCap);
    }
}

TEST_CASE("reports name their claim and stay within the cap") {
    const Report rep = run_claim("lemma-4-6", mutant_bounds("lemma-4-6"));
    CHECK(rep.claim_id == "lemma-4-6");
    CHECK(rep.counterexamples.size() <= Report::kCounterexampleCap);
    CHECK(rep.total_counterexamples >= rep.counterexamples.size());
}

TEST_CASE("bound validation rejects absurd ranges") {
    ClaimOptions opts;
    opts.max_n = 0;
    CHECK_THROWS_AS(run_claim("char-equiv", opts), std::domain_error);
    ClaimOptions bits;
    bits.max_bits = 1;
    CHECK_THROWS_AS(run_claim("lemma-4-6", bits), std::domain_error);
    ClaimOptions huge;
    huge.max_n = 1u << 30;
    CHECK_THROWS_AS(run_claim("char-equiv", huge), std::domain_error);
}

TEST_CASE("theorem-3-2 classifies every index") {
    // exact agreement on the A-set and strict inequality off it is part
    // of the claim; a pass at 2^15 exercises all four index classes
    ClaimOptions opts;
    opts.max_n = 1u << 15;
    CHECK(run_claim("theorem-3-2", opts).passed());
}
