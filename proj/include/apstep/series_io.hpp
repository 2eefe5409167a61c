#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "apstep/keyvalue.hpp"
#include "apstep/series.hpp"

namespace apstep {

/// Reads a series from the key-value series format and validates it for
/// `usage`. `section` selects a named section; empty means the first one.
///
/// Header keys: kind (default explicit), n, seed, c, d, coeff. Explicit
/// sections carry one record per term, `index lambda re [im]`; builtin kinds
/// take either a `coeff = ...` list or records `index re [im]`.
APSeries load_series(const std::filesystem::path& path, std::string_view section = {},
                     Usage usage = Usage::Plain);
APSeries parse_series(std::string_view text, std::string_view section = {},
                      Usage usage = Usage::Plain);
APSeries series_from_section(const kv::Section& sec, Usage usage);

/// Frequencies only; coefficient fields are optional and ignored.
FrequencySeq load_frequencies(const std::filesystem::path& path, std::string_view section = {});
FrequencySeq frequencies_from_section(const kv::Section& sec);

/// Sections `outer` and `inner`.
DilatedSeries load_dilated(const std::filesystem::path& path);
DilatedSeries parse_dilated(std::string_view text);

/// Builtin kinds are written with their generating parameters unless
/// `materialize` is set, in which case every kind is written as explicit.
std::string serialize(const APSeries& series, bool materialize = false,
                      std::string_view section = {});
std::string serialize(const DilatedSeries& series);

void save_series(const std::filesystem::path& path, const APSeries& series,
                 bool materialize = false);

}  // namespace apstep
