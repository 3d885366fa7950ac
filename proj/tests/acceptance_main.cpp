// Acceptance suite: replays every shipped claim at full bounds and checks
// the CLI surfaces byte for byte. One line per criterion; exit 0 only if
// all pass.

#include "a975/colorings.hpp"
#include "a975/puzzles.hpp"
#include "a975/runs.hpp"
#include "a975/seq_core.hpp"
#include "a975/verify.hpp"
#include "a975/words.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using a975::Nat;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(A975_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        result.out = "popen failed";
        return result;
    }
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

using Failures = std::vector<std::string>;

void expect(Failures& failures, bool ok, const std::string& what) {
    if (!ok) {
        failures.push_back(what);
    }
}

void expect_claim(Failures& failures, const std::string& id, const a975::ClaimOptions& opts = {}) {
    const a975::Report rep = a975::run_claim(id, opts);
    if (!rep.passed()) {
        std::string detail = "claim " + id + " failed";
        if (!rep.counterexamples.empty()) {
            detail += ": " + rep.counterexamples.front().input + " expected " +
                      rep.counterexamples.front().expected + " got " +
                      rep.counterexamples.front().actual;
        }
        failures.push_back(detail);
    }
}

// Zero-run lengths of B through the eleventh record value, 1365.
const std::uint64_t kRunLengthPrefix[88] = {
    1,   2, 5, 10, 1,  21, 2, 42, 1, 1,   // 1..10
    5,   1, 85, 2, 2,  10, 2, 170, 1, 1,  // 11..20
    1,   5, 1, 1, 5,   1, 21, 1, 1, 5,    // 21..30
    1,   341, 2, 2, 2, 10, 2, 2, 10, 2,   // 31..40
    42,  2, 2, 10, 2,  682, 1, 1, 1, 1,   // 41..50
    5,   1, 1, 1, 5,   1, 1, 5, 1, 21,    // 51..60
    1,   1, 1, 5, 1,   1, 5, 1, 21, 1,    // 61..70
    1,   5, 1, 85, 1,  1, 1, 5, 1, 1,     // 71..80
    5,   1, 21, 1, 1,  5, 1, 1365};       // 81..88

// -------------------------------------------------------------------

void criterion_tables(Failures& failures) {
    const struct {
        const char* args;
        const char* golden;
    } cases[] = {
        {"seq A 1..10", "/seq_A_1_10.txt"},
        {"seq P_div3 1..10", "/seq_P_div3_1_10.txt"},
        {"seq B 1..32", "/seq_B_1_32.txt"},
    };
    for (const auto& c : cases) {
        const CliResult got = run_cli(c.args);
        expect(failures, got.exit_code == 0, std::string(c.args) + " exited nonzero");
        const std::string want = read_file(std::string(A975_GOLDEN_DIR) + c.golden);
        expect(failures, !want.empty(), std::string("missing golden ") + c.golden);
        expect(failures, got.out == want, std::string(c.args) + " does not match its golden file");
    }
}

void criterion_char_equiv(Failures& failures) {
    expect_claim(failures, "char-equiv");
    expect_claim(failures, "parity");
    // the top of the range really is a multiword value
    expect(failures, a975::bit_length(a975::a_of(200)) == 200, "A(200) is not 200 bits long");
}

void criterion_theorem_3_2(Failures& failures) {
    expect_claim(failures, "theorem-3-2");
    // agreement happens exactly 16 times below 2^16
    std::size_t hits = 0;
    for (unsigned k = 1; a975::a_of(k) <= 65536; ++k) {
        ++hits;
    }
    expect(failures, hits == 16, "expected 16 members of A below 65536");
}

void criterion_lemma_3_1(Failures& failures) {
    expect_claim(failures, "lemma-3-1");  // default bound: 100000
}

void criterion_b_lemmas(Failures& failures) {
    expect_claim(failures, "lemma-4-1");
    expect_claim(failures, "lemma-4-2");
    expect_claim(failures, "lemma-4-3");
}

void criterion_theorem_4_4(Failures& failures) {
    expect_claim(failures, "theorem-4-4");  // k <= 20, scan below 2^21
}

void criterion_run_lengths(Failures& failures) {
    const std::vector<a975::Run> runs = a975::extract_runs(14);
    expect(failures, runs.size() >= 88, "fewer than 88 full runs below 2^14");
    for (std::size_t i = 0; i < 88 && i < runs.size(); ++i) {
        if (runs[i].length != kRunLengthPrefix[i]) {
            failures.push_back("run length " + std::to_string(i + 1) + ": expected " +
                               std::to_string(kRunLengthPrefix[i]) + ", got " +
                               std::to_string(runs[i].length));
        }
    }
    expect(failures, runs[87].length == 1365, "term 88 is not 1365");
}

void criterion_zero_predicate(Failures& failures) {
    expect_claim(failures, "lemma-4-6");  // n < 2^20
    expect_claim(failures, "lemma-4-7");  // starts below 2^20
    const std::vector<Nat> starts = a975::run_start_indices(20);
    const std::uint64_t first_six[6] = {3, 6, 11, 22, 39, 78};
    for (int i = 0; i < 6; ++i) {
        expect(failures, starts[i] == first_six[i],
               "run-start listing position " + std::to_string(i + 1));
    }
}

void criterion_theorem_4_8(Failures& failures) {
    expect_claim(failures, "theorem-4-8");  // ranks <= 10, scan below 2^22
    const a975::RecordTable table = a975::records(22);
    const std::uint64_t ordinals[8] = {1, 2, 3, 4, 6, 8, 13, 18};
    for (unsigned r = 1; r <= 8; ++r) {
        expect(failures, table.records[r - 1].run.ordinal == ordinals[r - 1],
               "record rank " + std::to_string(r) + " ordinal");
        expect(failures, a975::record_run_number(r) == ordinals[r - 1],
               "record rank " + std::to_string(r) + " formula value");
    }
    // the partial-sum formula holds for every record the scan can see
    for (const a975::RecordEntry& e : table.records) {
        expect(failures, a975::record_run_number(e.rank) == e.run.ordinal,
               "formula vs scan at record rank " + std::to_string(e.rank));
        expect(failures, Nat(e.run.length) == a975::a_of(e.rank),
               "record rank " + std::to_string(e.rank) + " length");
    }
}

void criterion_occurrence_1(Failures& failures) {
    expect_claim(failures, "occurrence-1");  // 12 rings
}

void criterion_occurrence_2(Failures& failures) {
    expect_claim(failures, "occurrence-2");  // n <= 30, i < 2^16
}

void criterion_colorings(Failures& failures) {
    expect_claim(failures, "occurrence-3");  // m <= 14
    expect_claim(failures, "theorem-5-2");   // arity <= 16
    expect_claim(failures, "lemma-5-1");     // n <= 40
    expect_claim(failures, "bijection");     // m <= 12
    expect(failures, a975::enum_partitions(6).size() == 10, "ten partitions of six people");
    expect(failures, a975::enum_bubbles(5, true).size() == 10, "ten based bubbles of arity 5");
}

void criterion_verify_all(Failures& failures) {
    const auto started = std::chrono::steady_clock::now();
    const CliResult all = run_cli("verify all");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    expect(failures, all.exit_code == 0, "verify all exited " + std::to_string(all.exit_code));
    expect(failures, seconds < 60.0,
           "verify all took " + std::to_string(seconds) + " s (limit 60)");
    std::size_t lines = 0;
    for (char c : all.out) {
        lines += c == '\n' ? 1 : 0;
    }
    expect(failures, lines == a975::claim_ids().size(), "verify all should print one report per claim");

    for (const std::string& id : a975::claim_ids()) {
        const CliResult mutant = run_cli("verify " + id + " --mutate");
        if (mutant.exit_code != 1) {
            failures.push_back("mutated " + id + " exited " +
                               std::to_string(mutant.exit_code) + ", want 1");
        }
    }
}

struct Criterion {
    int number;
    const char* label;
    double limit_seconds;
    std::function<void(Failures&)> run;
};

const Criterion kCriteria[] = {
    {1, "table reproduction (seq A, P_div3, B)", 1.0, criterion_tables},
    {2, "characterization equivalence to n = 200", 1.0, criterion_char_equiv},
    {3, "triangular/palindrome agreement exactly on A (n <= 65536)", 10.0, criterion_theorem_3_2},
    {4, "palindrome formula vs string oracle (n <= 100000)", 5.0, criterion_lemma_3_1},
    {5, "pinned B values at A(k), A(k)+1, 2^k (k <= 20)", 1.0, criterion_b_lemmas},
    {6, "zero-run spans and records (k <= 20)", 30.0, criterion_theorem_4_4},
    {7, "run-length listing through 1365 (88 terms)", 30.0, criterion_run_lengths},
    {8, "zero predicate and run-start generator (below 2^20)", 30.0, criterion_zero_predicate},
    {9, "record numbering (ranks to 10, scan below 2^22)", 60.0, criterion_theorem_4_8},
    {10, "ring puzzle path and distances (to 12 rings)", 10.0, criterion_occurrence_1},
    {11, "gray positions and round trips", 1.0, criterion_occurrence_2},
    {12, "partition and bubble counts, bijection", 30.0, criterion_colorings},
    {13, "verify all passes; every seeded defect fails", 90.0, criterion_verify_all},
};

}  // namespace

int main() {
    int failed = 0;
    for (const Criterion& c : kCriteria) {
        Failures failures;
        const auto started = std::chrono::steady_clock::now();
        try {
            c.run(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (seconds > c.limit_seconds) {
            failures.push_back("took " + std::to_string(seconds) + " s, limit " +
                               std::to_string(c.limit_seconds));
        }
        char line[512];
        std::snprintf(line, sizeof(line), "%s criterion-%02d  %s  (%.2f s)",
                      failures.empty() ? "PASS" : "FAIL", c.number, c.label, seconds);
        std::cout << line << '\n';
        for (const std::string& f : failures) {
            std::cout << "       - " << f << '\n';
        }
        failed += failures.empty() ? 0 : 1;
    }
    if (failed > 0) {
        std::cout << failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 13 criteria passed\n";
    return 0;
}
