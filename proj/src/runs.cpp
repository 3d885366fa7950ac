#include "a975/runs.hpp"

#include "a975/seq_core.hpp"

#include <stdexcept>

namespace a975 {

namespace {

const BEval& resolve(const BEval& b) {
    static const BEval real = [](std::uint64_t n) { return seq_b_u64(n); };
    return b ? b : real;
}

void check_scan_bound(unsigned max_bits) {
    if (max_bits < 2 || max_bits > 30) {
        throw std::domain_error("run scan expects 2 <= max_bits <= 30");
    }
}

std::string u64s(std::uint64_t v) {
    return std::to_string(v);
}

}  // namespace

std::vector<Run> extract_runs(unsigned max_bits, const BEval& b) {
    check_scan_bound(max_bits);
    const BEval& eval = resolve(b);
    const std::uint64_t limit = std::uint64_t{1} << max_bits;
    std::vector<Run> runs;
    std::uint64_t run_start = 0;
    bool in_run = false;
    for (std::uint64_t n = 1; n < limit; ++n) {
        if (eval(n) == 0) {
            if (!in_run) {
                in_run = true;
                run_start = n;
            }
        } else if (in_run) {
            runs.push_back({run_start, n - run_start, runs.size() + 1});
            in_run = false;
        }
    }
    // A block still open at the scan boundary may be truncated; drop it.
    return runs;
}

Nat run_length_seq(std::uint64_t i, unsigned max_bits) {
    if (i == 0) {
        throw std::domain_error("run_length_seq is 1-indexed");
    }
    std::vector<Run> runs = extract_runs(max_bits);
    if (i > runs.size()) {
        throw std::out_of_range("run_length_seq: only " + u64s(runs.size()) +
                                " runs below 2^" + std::to_string(max_bits) +
                                "; enlarge max_bits");
    }
    return Nat(runs[i - 1].length);
}

RecordTable records(unsigned max_bits) {
    RecordTable table;
    std::uint64_t best = 0;
    for (const Run& r : extract_runs(max_bits)) {
        if (r.length > best) {
            best = r.length;
            table.records.push_back({static_cast<unsigned>(table.records.size() + 1), r});
        }
    }
    return table;
}

Nat record_run_number(unsigned r) {
    if (r == 0) {
        throw std::domain_error("record_run_number is 1-indexed");
    }
    // r = 2j+1 or r = 2j+2: twice the Catalan numbers below j, plus C(j)
    // once more for odd r or twice for even r.
    const unsigned j = (r - 1) / 2;
    Nat total = 0;
    for (unsigned i = 0; i < j; ++i) {
        total += 2 * catalan(i);
    }
    total += (r % 2 == 1) ? catalan(j) : 2 * catalan(j);
    return total;
}

Report verify_theorem_4_4(unsigned max_k, const BEval& b) {
    if (max_k < 2 || max_k > 24) {
        throw std::domain_error("verify_theorem_4_4 expects 2 <= max_k <= 24");
    }
    const BEval& eval = resolve(b);
    const unsigned scan_bits = max_k + 1;

    Report rep;
    rep.claim_id = "theorem-4-4";
    rep.range = "2 <= k <= " + std::to_string(max_k) + ", runs scanned below 2^" +
                std::to_string(scan_bits);

    for (unsigned k = 2; k <= max_k && !rep.saturated(); ++k) {
        const std::uint64_t ak = a_of(k).convert_to<std::uint64_t>();
        const std::uint64_t top = (std::uint64_t{1} << k) - 1;
        if (eval(ak) == 0) {
            rep.add("B(A(" + std::to_string(k) + ")) = B(" + u64s(ak) + ")", "nonzero", "0");
        }
        if (eval(top + 1) != top + 1) {
            rep.add("B(2^" + std::to_string(k) + ")", u64s(top + 1), u64s(eval(top + 1)));
        }
        for (std::uint64_t n = ak + 1; n <= top && !rep.saturated(); ++n) {
            if (eval(n) != 0) {
                rep.add("B(" + u64s(n) + "), inside [A(k)+1, 2^k-1] for k=" + std::to_string(k),
                        "0", u64s(eval(n)));
            }
        }
        if (Nat(top - ak) != a_of(k - 1)) {
            rep.add("run length (2^k - 1) - A(k) for k=" + std::to_string(k),
                    dec(a_of(k - 1)), dec(Nat(top - ak)));
        }
    }

    // The record runs of the scan must be exactly the spans above.
    std::uint64_t best = 0;
    std::vector<Run> recs;
    for (const Run& r : extract_runs(scan_bits, eval)) {
        if (r.length > best) {
            best = r.length;
            recs.push_back(r);
        }
    }
    const std::size_t expected_count = max_k - 1;  // one record per k in [2, max_k]
    if (recs.size() != expected_count) {
        rep.add("number of record runs below 2^" + std::to_string(scan_bits),
                std::to_string(expected_count), std::to_string(recs.size()));
    }
    for (std::size_t i = 0; i < recs.size() && !rep.saturated(); ++i) {
        const unsigned k = static_cast<unsigned>(i) + 2;
        if (k > max_k) {
            break;
        }
        const std::uint64_t want_start = a_of(k).convert_to<std::uint64_t>() + 1;
        const std::uint64_t want_len = (std::uint64_t{1} << k) - 1 - (want_start - 1);
        if (recs[i].start != want_start || recs[i].length != want_len) {
            rep.add("record #" + std::to_string(i + 1) + " span",
                    "[" + u64s(want_start) + ", len " + u64s(want_len) + "]",
                    "[" + u64s(recs[i].start) + ", len " + u64s(recs[i].length) + "]");
        }
    }
    return rep;
}

Report verify_theorem_4_8(unsigned max_rank, unsigned max_bits,
                          const std::function<Nat(unsigned)>& record_no) {
    if (max_rank == 0) {
        throw std::domain_error("verify_theorem_4_8 expects max_rank >= 1");
    }
    static const std::function<Nat(unsigned)> real = [](unsigned r) {
        return record_run_number(r);
    };
    const auto& formula = record_no ? record_no : real;

    Report rep;
    rep.claim_id = "theorem-4-8";
    rep.range = "records 1 <= n <= " + std::to_string(max_rank) + ", runs scanned below 2^" +
                std::to_string(max_bits);

    const std::vector<Run> runs = extract_runs(max_bits);
    RecordTable recs;
    std::uint64_t best = 0;
    for (const Run& r : runs) {
        if (r.length > best) {
            best = r.length;
            recs.records.push_back({static_cast<unsigned>(recs.records.size() + 1), r});
        }
    }
    if (recs.records.size() < max_rank) {
        throw std::out_of_range("verify_theorem_4_8: only " +
                                std::to_string(recs.records.size()) +
                                " record runs observable below 2^" + std::to_string(max_bits));
    }
    for (unsigned n = 1; n <= max_rank && !rep.saturated(); ++n) {
        const Nat ordinal = formula(n);
        if (ordinal < 1 || ordinal > runs.size()) {
            throw std::out_of_range("verify_theorem_4_8: run ordinal " + dec(ordinal) +
                                    " not observable below 2^" + std::to_string(max_bits));
        }
        const Run& run = runs[ordinal.convert_to<std::size_t>() - 1];
        if (Nat(run.length) != a_of(n)) {
            rep.add("length of run #" + dec(ordinal) + " (record rank " + std::to_string(n) + ")",
                    dec(a_of(n)), u64s(run.length));
        }
        if (Nat(recs.records[n - 1].run.ordinal) != ordinal) {
            rep.add("ordinal of record rank " + std::to_string(n) + " (scan vs formula)",
                    dec(ordinal), u64s(recs.records[n - 1].run.ordinal));
        }
    }
    return rep;
}

}  // namespace a975
