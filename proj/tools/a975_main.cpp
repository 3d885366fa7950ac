// Command-line front end: sequence printing, claim verification,
// enumeration dumps, and OEIS b-file exchange.

#include "a975/bfile.hpp"
#include "a975/colorings.hpp"
#include "a975/puzzles.hpp"
#include "a975/report.hpp"
#include "a975/seq_core.hpp"
#include "a975/seq_registry.hpp"
#include "a975/verify.hpp"
#include "a975/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using a975::Nat;

constexpr int kExitPass = 0;
constexpr int kExitClaimFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "FROM..TO" or a single "N".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::int64_t n = std::stoll(text);
            return {n, n};
        }
        const std::int64_t from = std::stoll(text.substr(0, dots));
        const std::int64_t to = std::stoll(text.substr(dots + 2));
        if (to < from) {
            throw UsageError("inverted range \"" + text + "\"");
        }
        return {from, to};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("bad range \"" + text + "\", expected FROM..TO");
    }
}

int cmd_seq(const std::string& id_text, const std::string& range_text,
            const std::string& method_text, unsigned max_bits, const std::string& format) {
    const auto id = a975::parse_seq_id(id_text);
    if (!id) {
        throw UsageError("unknown sequence \"" + id_text + "\"");
    }
    a975::SeqEvalContext ctx;
    ctx.max_bits = max_bits;
    if (!method_text.empty()) {
        if (*id != a975::SeqId::A) {
            throw UsageError("--method applies only to sequence A");
        }
        const auto method = a975::parse_a_method(method_text);
        if (!method) {
            throw UsageError("unknown method \"" + method_text + "\"");
        }
        ctx.a_method = *method;
    }
    const auto [from, to] = parse_range(range_text);
    std::ostringstream out;
    nlohmann::json items = nlohmann::json::array();
    for (std::int64_t i = from; i <= to; ++i) {
        const Nat v = a975::eval_seq(*id, i, ctx);
        if (format == "json") {
            items.push_back({{"index", i}, {"value", a975::dec(v)}});
        } else {
            out << i << ' ' << a975::dec(v) << '\n';
        }
    }
    if (format == "json") {
        std::cout << nlohmann::json{{"seq", id_text}, {"terms", items}}.dump() << '\n';
    } else {
        std::cout << out.str();
    }
    return kExitPass;
}

int cmd_verify(const std::string& claim, const a975::ClaimOptions& opts,
               const std::string& format) {
    std::vector<std::string> selected;
    if (claim == "all") {
        selected = a975::claim_ids();
    } else if (a975::is_claim_id(claim)) {
        selected = {claim};
    } else {
        throw UsageError("unknown claim \"" + claim + "\" (try `a975 verify --list`)");
    }
    if (claim == "all" && (opts.max_n || opts.max_bits)) {
        throw UsageError("bound overrides apply to a single claim, not `verify all`");
    }
    bool all_pass = true;
    for (const std::string& id : selected) {
        const a975::Report rep = a975::run_claim(id, opts);
        std::cout << (format == "text" ? rep.text() : rep.json()) << '\n';
        all_pass = all_pass && rep.passed();
    }
    return all_pass ? kExitPass : kExitClaimFail;
}

void list_claims() {
    for (const std::string& id : a975::claim_ids()) {
        std::cout << id << "  -  " << a975::claim_summary(id) << '\n';
    }
}

int cmd_enumerate(const std::string& object, std::optional<std::int64_t> size, unsigned max_bits,
                  bool unbased, std::optional<std::uint64_t> limit, const std::string& format) {
    std::vector<std::string> items;
    auto need_size = [&](std::int64_t lo, std::int64_t hi) {
        if (!size || *size < lo || *size > hi) {
            throw UsageError(object + " expects a size in [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
        }
        return static_cast<unsigned>(*size);
    };

    if (object == "catalan-words") {
        const unsigned len = need_size(0, 20);
        if (len % 2 != 0) {
            throw UsageError("catalan-words expects an even length");
        }
        for (const a975::CatalanWord& w : a975::enum_catalan(len)) {
            items.push_back(w.str());
        }
    } else if (object == "partitions") {
        const unsigned people = need_size(3, 16);
        for (const a975::AffinityPartition& p : a975::enum_partitions(people)) {
            items.push_back(p.seats);
        }
    } else if (object == "bubbles") {
        const unsigned arity = need_size(2, 18);
        for (const a975::Bubble& b : a975::enum_bubbles(arity, !unbased)) {
            items.push_back(b.str());
        }
    } else if (object == "gray") {
        const unsigned n = need_size(1, 16);
        for (const a975::GrayWord& w : a975::gray_code(n)) {
            items.push_back(w.str());
        }
    } else if (object == "ring-path") {
        const unsigned n = need_size(1, 12);
        if (format == "dot" && n > 6) {
            throw UsageError("dot export is limited to 6 rings");
        }
        // The path visits the states in Gray order.
        for (const a975::GrayWord& w : a975::gray_code(n)) {
            items.push_back(w.str());
        }
        if (format == "dot") {
            std::cout << "graph ring_path_" << n << " {\n";
            std::cout << "  node [shape=box];\n";
            for (std::size_t i = 0; i + 1 < items.size(); ++i) {
                std::cout << "  \"" << items[i] << "\" -- \"" << items[i + 1] << "\";\n";
            }
            std::cout << "}\n";
            return kExitPass;
        }
    } else if (object == "run-starts") {
        if (size) {
            throw UsageError("run-starts is sized by --max-bits, not a positional size");
        }
        for (const Nat& n : a975::run_start_indices(max_bits)) {
            items.push_back(a975::dec(n));
        }
    } else {
        throw UsageError("unknown object \"" + object + "\"");
    }

    if (limit && items.size() > *limit) {
        items.resize(*limit);
    }
    if (format == "json") {
        nlohmann::json j;
        j["object"] = object;
        if (size) {
            j["size"] = *size;
        }
        if (object == "run-starts") {
            j["max_bits"] = max_bits;
        }
        j["items"] = items;
        std::cout << j.dump() << '\n';
    } else if (format == "dot") {
        throw UsageError("dot format applies only to ring-path");
    } else {
        for (const std::string& item : items) {
            std::cout << item << '\n';
        }
    }
    return kExitPass;
}

int cmd_bfile_export(const std::string& id_text, std::optional<std::int64_t> offset,
                     std::uint64_t count, const std::string& out_path, unsigned max_bits) {
    const auto id = a975::parse_seq_id(id_text);
    if (!id) {
        throw UsageError("unknown sequence \"" + id_text + "\"");
    }
    a975::SeqEvalContext ctx;
    ctx.max_bits = max_bits;
    const std::int64_t first = offset.value_or(a975::seq_offset(*id));
    a975::BFile bf;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::int64_t index = first + static_cast<std::int64_t>(i);
        bf.entries.push_back({index, a975::eval_seq(*id, index, ctx)});
    }
    const std::string text = a975::format_bfile(bf);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw UsageError("cannot write \"" + out_path + "\"");
        }
        file << text;
    }
    return kExitPass;
}

int cmd_bfile_import(const std::string& path, const std::string& id_text, unsigned max_bits,
                     const std::string& format) {
    const auto id = a975::parse_seq_id(id_text);
    if (!id) {
        throw UsageError("unknown sequence \"" + id_text + "\"");
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot read \"" + path + "\"");
    }
    a975::SeqEvalContext ctx;
    ctx.max_bits = max_bits;

    const auto started = std::chrono::steady_clock::now();
    a975::BFile bf;
    try {
        bf = a975::parse_bfile(file);
    } catch (const a975::BFileParseError& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitUsage;
    }

    a975::Report rep;
    rep.claim_id = "bfile-import-" + id_text;
    if (bf.entries.empty()) {
        rep.range = path + " (empty)";
    } else {
        rep.range = path + " indices " + std::to_string(bf.entries.front().index) + ".." +
                    std::to_string(bf.entries.back().index);
    }
    for (const a975::BFileEntry& e : bf.entries) {
        if (rep.saturated()) {
            break;
        }
        Nat expected;
        try {
            expected = a975::eval_seq(*id, e.index, ctx);
        } catch (const std::exception& ex) {
            std::cerr << path << ": index " << e.index << ": " << ex.what() << '\n';
            return kExitUsage;
        }
        if (expected != e.value) {
            rep.add(id_text + "(" + std::to_string(e.index) + ")", a975::dec(expected),
                    a975::dec(e.value));
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    std::cout << (format == "text" ? rep.text() : rep.json()) << '\n';
    return rep.passed() ? kExitPass : kExitClaimFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial laboratory for OEIS A000975 and its relatives"};
    app.require_subcommand(1);
    std::string format = "text";

    // seq
    auto* seq = app.add_subcommand("seq", "print terms, one \"index value\" line per term");
    std::string seq_id;
    std::string seq_range;
    std::string seq_method;
    unsigned seq_max_bits = 20;
    seq->add_option("sequence", seq_id,
                    "A, T, P, P_div3, Rev, B, C, S, RunLen, RunStart or RecordRunNo")
        ->required();
    seq->add_option("range", seq_range, "FROM..TO (or a single index)")->required();
    seq->add_option("--method", seq_method, "route for A: rec, binary, complement, gap, closed");
    seq->add_option("--max-bits", seq_max_bits, "scan bound behind RunLen/RunStart")
        ->check(CLI::Range(2u, 24u));
    seq->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "replay a claim (or `all`) and report");
    std::string claim;
    bool list_flag = false;
    bool mutate = false;
    std::optional<std::uint64_t> opt_max_n;
    std::optional<unsigned> opt_max_bits;
    verify->add_option("claim", claim, "claim id, or `all`");
    verify->add_flag("--list", list_flag, "list claim ids and exit");
    verify->add_option("--max-n", opt_max_n, "primary bound of the claim");
    verify->add_option("--max-bits", opt_max_bits, "scan bound of B-scanning claims");
    verify->add_flag("--mutate", mutate,
                     "verify the verifier: run against a seeded defect; the claim must fail");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "dump combinatorial objects");
    std::string object;
    std::optional<std::int64_t> enum_size;
    unsigned enum_max_bits = 8;
    bool unbased = false;
    std::optional<std::uint64_t> limit;
    enumerate
        ->add_option("object", object,
                     "catalan-words, partitions, bubbles, gray, ring-path or run-starts")
        ->required();
    enumerate->add_option("size", enum_size, "length / people / arity / rings");
    enumerate->add_option("--max-bits", enum_max_bits, "bound for run-starts")
        ->check(CLI::Range(2u, 24u));
    enumerate->add_flag("--unbased", unbased, "enumerate unbased bubbles");
    enumerate->add_option("--limit", limit, "print at most this many items");
    enumerate->add_option("--format", format, "text, json, or dot (ring-path only)")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    // bfile
    auto* bfile = app.add_subcommand("bfile", "OEIS b-file export/import");
    bfile->require_subcommand(1);
    auto* bexport = bfile->add_subcommand("export", "write \"index value\" lines");
    auto* bimport = bfile->add_subcommand("import", "validate a b-file and re-derive each term");
    std::string bf_seq;
    std::optional<std::int64_t> bf_offset;
    std::uint64_t bf_count = 0;
    std::string bf_out;
    std::string bf_path;
    unsigned bf_max_bits = 20;
    bexport->add_option("--seq", bf_seq, "sequence id")->required();
    bexport->add_option("--offset", bf_offset, "first index (default: the sequence's offset)");
    bexport->add_option("--count", bf_count, "number of terms")->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{2000000}));
    bexport->add_option("--out", bf_out, "output path (default: stdout)");
    bexport->add_option("--max-bits", bf_max_bits, "scan bound behind RunLen/RunStart")
        ->check(CLI::Range(2u, 24u));
    bimport->add_option("path", bf_path, "b-file to check")->required();
    bimport->add_option("--seq", bf_seq, "sequence id")->required();
    bimport->add_option("--max-bits", bf_max_bits, "scan bound behind RunLen/RunStart")
        ->check(CLI::Range(2u, 24u));
    bimport->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (seq->parsed()) {
            return cmd_seq(seq_id, seq_range, seq_method, seq_max_bits, format);
        }
        if (verify->parsed()) {
            if (list_flag) {
                list_claims();
                return kExitPass;
            }
            if (claim.empty()) {
                throw UsageError("verify needs a claim id or `all`");
            }
            a975::ClaimOptions opts;
            opts.max_n = opt_max_n;
            opts.max_bits = opt_max_bits;
            opts.mutate = mutate;
            return cmd_verify(claim, opts, format);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(object, enum_size, enum_max_bits, unbased, limit, format);
        }
        if (bfile->parsed()) {
            if (bexport->parsed()) {
                return cmd_bfile_export(bf_seq, bf_offset, bf_count, bf_out, bf_max_bits);
            }
            return cmd_bfile_import(bf_path, bf_seq, bf_max_bits, format);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
