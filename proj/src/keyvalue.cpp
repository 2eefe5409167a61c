#include "apstep/keyvalue.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "apstep/error.hpp"

namespace apstep::kv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

const Entry* Section::find(std::string_view key) const {
    const Entry* hit = nullptr;
    for (const auto& e : entries)
        if (e.key == key) hit = &e;  // last one wins
    return hit;
}

const Section& Document::section(std::string_view name) const {
    if (name.empty()) {
        for (const auto& s : sections)
            if (!s.entries.empty() || !s.records.empty()) return s;
        if (!sections.empty()) return sections.front();
        throw ParseError("document is empty");
    }
    for (const auto& s : sections)
        if (s.name == name) return s;
    throw ParseError("no section named '" + std::string(name) + "'");
}

std::vector<std::string> split_ws(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) out.emplace_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

Document parse(std::string_view text) {
    Document doc;
    doc.sections.push_back(Section{});
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (eol == text.size()) break;
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no);
            std::string_view name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) throw ParseError("empty section name", line_no);
            for (const auto& s : doc.sections)
                if (s.name == name) throw ParseError("duplicate section '" + std::string(name) + "'", line_no);
            doc.sections.push_back(Section{std::string(name), line_no, {}, {}});
        } else if (auto eq = line.find('='); eq != std::string_view::npos) {
            std::string_view key = trim(line.substr(0, eq));
            std::string_view value = trim(line.substr(eq + 1));
            if (key.empty()) throw ParseError("missing key before '='", line_no);
            doc.sections.back().entries.push_back({std::string(key), std::string(value), line_no});
        } else {
            doc.sections.back().records.push_back({split_ws(line), line_no});
        }
        if (eol == text.size()) break;
    }
    return doc;
}

Document parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

double parse_double(std::string_view token, std::size_t line, std::string_view field) {
    std::string_view s = token;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc{} || ptr != last) {
        // from_chars reports out-of-range for subnormal/huge input; fall back to strtod
        // so that values written by format_double always round-trip.
        if (ec == std::errc::result_out_of_range && ptr == last) {
            return std::strtod(std::string(s).c_str(), nullptr);
        }
        throw ParseError("not a number: '" + std::string(token) + "'", line, std::string(field));
    }
    return value;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line, std::string_view field) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("not a non-negative integer: '" + std::string(token) + "'", line,
                         std::string(field));
    return value;
}

Complex parse_complex(std::string_view token, std::size_t line, std::string_view field) {
    if (auto comma = token.find(','); comma != std::string_view::npos) {
        return {parse_double(token.substr(0, comma), line, field),
                parse_double(token.substr(comma + 1), line, field)};
    }
    return {parse_double(token, line, field), 0.0};
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace apstep::kv
