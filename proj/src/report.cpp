#include "a975/report.hpp"

#include <json.hpp>

#include <sstream>

namespace a975 {

void Report::add(std::string input, std::string expected, std::string actual) {
    ++total_counterexamples;
    if (counterexamples.size() < kCounterexampleCap) {
        counterexamples.push_back({std::move(input), std::move(expected), std::move(actual)});
    }
}

std::string Report::json() const {
    nlohmann::json j;
    j["schema"] = "a975.report/1";
    j["claim_id"] = claim_id;
    j["range"] = range;
    j["status"] = status();
    j["counterexamples"] = nlohmann::json::array();
    for (const Counterexample& c : counterexamples) {
        j["counterexamples"].push_back(
            {{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string Report::text() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL") << " " << claim_id << "  " << range << "  (" << elapsed_ms
       << " ms)";
    if (!passed()) {
        os << "  " << total_counterexamples << " counterexample(s), first: "
           << counterexamples.front().input << " expected " << counterexamples.front().expected
           << " got " << counterexamples.front().actual;
    }
    return os.str();
}

}  // namespace a975
