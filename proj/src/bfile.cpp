#include "a975/bfile.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace a975 {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string format_bfile(const BFile& bf) {
    std::string out;
    for (const BFileEntry& e : bf.entries) {
        out += std::to_string(e.index);
        out += ' ';
        out += dec(e.value);
        out += '\n';
    }
    return out;
}

BFile parse_bfile(std::istream& in) {
    BFile bf;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;  // blank or comment
        }
        std::istringstream fields(line);
        std::string index_str;
        std::string value_str;
        std::string extra;
        fields >> index_str >> value_str;
        if (value_str.empty()) {
            throw BFileParseError(line_no, "expected \"index value\"");
        }
        if (fields >> extra) {
            throw BFileParseError(line_no, "trailing content after value");
        }
        std::int64_t index = 0;
        try {
            std::size_t used = 0;
            index = std::stoll(index_str, &used);
            if (used != index_str.size()) {
                throw std::invalid_argument(index_str);
            }
        } catch (const std::exception&) {
            throw BFileParseError(line_no, "bad index \"" + index_str + "\"");
        }
        if (!all_digits(value_str)) {
            throw BFileParseError(line_no, "bad value \"" + value_str + "\"");
        }
        if (!bf.entries.empty() && index != bf.entries.back().index + 1) {
            throw BFileParseError(line_no, "index " + std::to_string(index) +
                                               " does not follow " +
                                               std::to_string(bf.entries.back().index));
        }
        bf.entries.push_back({index, Nat(value_str)});
    }
    return bf;
}

}  // namespace a975
