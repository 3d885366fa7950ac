#include "a975/seq_registry.hpp"

#include "a975/words.hpp"

#include <stdexcept>

namespace a975 {

std::optional<SeqId> parse_seq_id(std::string_view name) {
    for (SeqId id : all_seq_ids()) {
        if (name == seq_id_name(id)) {
            return id;
        }
    }
    return std::nullopt;
}

std::string_view seq_id_name(SeqId id) {
    switch (id) {
        case SeqId::A: return "A";
        case SeqId::T: return "T";
        case SeqId::P: return "P";
        case SeqId::PDiv3: return "P_div3";
        case SeqId::Rev: return "Rev";
        case SeqId::B: return "B";
        case SeqId::C: return "C";
        case SeqId::S: return "S";
        case SeqId::RunLen: return "RunLen";
        case SeqId::RunStart: return "RunStart";
        case SeqId::RecordRunNo: return "RecordRunNo";
    }
    return "?";
}

std::vector<SeqId> all_seq_ids() {
    return {SeqId::A,   SeqId::T, SeqId::P,      SeqId::PDiv3,    SeqId::Rev,
            SeqId::B,   SeqId::C, SeqId::S,      SeqId::RunLen,   SeqId::RunStart,
            SeqId::RecordRunNo};
}

std::int64_t seq_offset(SeqId id) {
    switch (id) {
        case SeqId::C:
        case SeqId::RecordRunNo:
            return 0;
        default:
            return 1;
    }
}

const std::vector<Run>& SeqEvalContext::runs() const {
    if (runs_cache_.empty()) {
        runs_cache_ = extract_runs(max_bits);
    }
    return runs_cache_;
}

const std::vector<Nat>& SeqEvalContext::run_starts() const {
    if (run_starts_cache_.empty()) {
        run_starts_cache_ = run_start_indices(max_bits);
    }
    return run_starts_cache_;
}

Nat SeqEvalContext::a_term(unsigned n) const {
    if (a_method == AMethod::Rec && a_last_index_ != 0 && n == a_last_index_ + 1) {
        a_last_value_ <<= 1;
        if (n % 2 == 1) {
            a_last_value_ += 1;
        }
        a_last_index_ = n;
        return a_last_value_;
    }
    Nat v = a_of(n, a_method);
    if (a_method == AMethod::Rec) {
        a_last_index_ = n;
        a_last_value_ = v;
    }
    return v;
}

Nat eval_seq(SeqId id, std::int64_t index, const SeqEvalContext& ctx) {
    if (index < seq_offset(id)) {
        throw std::domain_error(std::string(seq_id_name(id)) + " starts at index " +
                                std::to_string(seq_offset(id)));
    }
    const auto u = static_cast<std::uint64_t>(index);
    switch (id) {
        case SeqId::A:
            if (u > 100000) {
                throw std::domain_error("A: index too large (max 100000)");
            }
            return ctx.a_term(static_cast<unsigned>(u));
        case SeqId::T:
            return triangular(Nat(u));
        case SeqId::P:
            return palindrome_p(Nat(u));
        case SeqId::PDiv3:
            return palindrome_p_div3(Nat(u));
        case SeqId::Rev:
            return reverse_bits(Nat(u));
        case SeqId::B:
            return seq_b(Nat(u));
        case SeqId::C:
            if (u > 10000) {
                throw std::domain_error("C: index too large (max 10000)");
            }
            return catalan(static_cast<unsigned>(u));
        case SeqId::S:
            if (u > 20000) {
                throw std::domain_error("S: index too large (max 20000)");
            }
            return s_count(static_cast<unsigned>(u));
        case SeqId::RunLen: {
            const std::vector<Run>& runs = ctx.runs();
            if (u > runs.size()) {
                throw std::out_of_range("RunLen: only " + std::to_string(runs.size()) +
                                        " runs below 2^" + std::to_string(ctx.max_bits) +
                                        "; raise --max-bits");
            }
            return Nat(runs[u - 1].length);
        }
        case SeqId::RunStart: {
            const std::vector<Nat>& starts = ctx.run_starts();
            if (u > starts.size()) {
                throw std::out_of_range("RunStart: only " + std::to_string(starts.size()) +
                                        " starts below 2^" + std::to_string(ctx.max_bits) +
                                        "; raise --max-bits");
            }
            return starts[u - 1];
        }
        case SeqId::RecordRunNo:
            if (u > 2000) {
                throw std::domain_error("RecordRunNo: index too large (max 2000)");
            }
            return record_run_number(static_cast<unsigned>(u) + 1);
    }
    throw std::logic_error("eval_seq: unknown sequence");
}

}  // namespace a975
