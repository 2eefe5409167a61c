#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apstep/series.hpp"

namespace apstep::kv {

// Line-oriented text format shared by series files and CLI config files:
//
//   # comment                 '#' to end of line is ignored
//   [section]                 starts a named section (the first one is unnamed)
//   key = value               header entry
//   tok tok tok ...           data record (whitespace separated)

struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
};

struct Record {
    std::vector<std::string> tokens;
    std::size_t line;
};

struct Section {
    std::string name;
    std::size_t line = 0;
    std::vector<Entry> entries;
    std::vector<Record> records;

    const Entry* find(std::string_view key) const;
};

struct Document {
    std::vector<Section> sections;

    /// Named section, or the first non-empty section when `name` is empty.
    const Section& section(std::string_view name) const;
};

Document parse(std::string_view text);
Document parse_file(const std::filesystem::path& path);

/// Strict decimal parse (optional sign, optional exponent, inf/nan accepted).
double parse_double(std::string_view token, std::size_t line, std::string_view field);
std::uint64_t parse_uint(std::string_view token, std::size_t line, std::string_view field);
/// "re,im" or a bare real.
Complex parse_complex(std::string_view token, std::size_t line, std::string_view field);

std::vector<std::string> split_ws(std::string_view text);

/// Fixed 17-significant-digit rendering; parses back bit-identically.
std::string format_double(double x);

}  // namespace apstep::kv
