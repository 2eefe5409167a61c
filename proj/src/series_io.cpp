#include "apstep/series_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "apstep/error.hpp"

namespace apstep {

namespace {

struct Header {
    FrequencyKind kind = FrequencyKind::Explicit;
    std::optional<std::size_t> n;
    std::uint64_t seed = 0;
    double c = 1.0;
    double d = 0.0;
    std::optional<CoeffSeq> coeff;
    std::size_t coeff_line = 0;
};

Header read_header(const kv::Section& sec) {
    Header h;
    for (const auto& e : sec.entries) {
        if (e.key == "kind") {
            try {
                h.kind = frequency_kind_from_string(e.value);
            } catch (const ParseError&) {
                throw ParseError("unknown frequency kind '" + e.value + "'", e.line, "kind");
            }
        } else if (e.key == "n") {
            h.n = static_cast<std::size_t>(kv::parse_uint(e.value, e.line, "n"));
        } else if (e.key == "seed") {
            h.seed = kv::parse_uint(e.value, e.line, "seed");
        } else if (e.key == "c") {
            h.c = kv::parse_double(e.value, e.line, "c");
        } else if (e.key == "d") {
            h.d = kv::parse_double(e.value, e.line, "d");
        } else if (e.key == "coeff") {
            CoeffSeq cs;
            for (const auto& tok : kv::split_ws(e.value)) cs.push_back(kv::parse_complex(tok, e.line, "coeff"));
            h.coeff = std::move(cs);
            h.coeff_line = e.line;
        } else {
            throw ParseError("unknown header key '" + e.key + "'", e.line, e.key);
        }
    }
    return h;
}

struct Body {
    FrequencySeq freq;
    std::optional<CoeffSeq> coeff;
    std::vector<std::size_t> term_lines;  // source line per term, when records exist
};

Body read_body(const kv::Section& sec, bool coeff_required) {
    const Header h = read_header(sec);
    Body body;
    const bool is_explicit = h.kind == FrequencyKind::Explicit;

    std::vector<double> lambdas;
    CoeffSeq coeffs;
    std::size_t with_coeff = 0;
    for (std::size_t r = 0; r < sec.records.size(); ++r) {
        const auto& rec = sec.records[r];
        const auto& tok = rec.tokens;
        const std::size_t min_fields = is_explicit ? 2 : 1;
        const std::size_t max_fields = is_explicit ? 4 : 3;
        if (tok.size() < min_fields || tok.size() > max_fields)
            throw ParseError(is_explicit ? "expected 'index lambda re [im]'" : "expected 'index re [im]'",
                             rec.line);
        const auto index = kv::parse_uint(tok[0], rec.line, "index");
        if (index != r + 1)
            throw ParseError("expected index " + std::to_string(r + 1) + ", found " + tok[0], rec.line,
                             "index");
        std::size_t f = 1;
        if (is_explicit) lambdas.push_back(kv::parse_double(tok[f++], rec.line, "lambda"));
        if (f < tok.size()) {
            const double re = kv::parse_double(tok[f++], rec.line, "re");
            const double im = f < tok.size() ? kv::parse_double(tok[f], rec.line, "im") : 0.0;
            coeffs.emplace_back(re, im);
            ++with_coeff;
        }
        body.term_lines.push_back(rec.line);
    }
    if (with_coeff != 0 && with_coeff != sec.records.size())
        throw ParseError("records mix terms with and without coefficients", sec.line);
    if (h.coeff && with_coeff != 0)
        throw ParseError("coefficients given both as 'coeff' and as records", h.coeff_line, "coeff");

    if (is_explicit) {
        if (h.n && *h.n != lambdas.size())
            throw ParseError("header n = " + std::to_string(*h.n) + " but " + std::to_string(lambdas.size()) +
                                 " records",
                             sec.line, "n");
        body.freq = FrequencySeq::explicit_values(std::move(lambdas));
    } else {
        if (!h.n) throw ParseError("builtin kind requires header key 'n'", sec.line, "n");
        if (!sec.records.empty() && sec.records.size() != *h.n)
            throw ParseError("header n = " + std::to_string(*h.n) + " but " +
                                 std::to_string(sec.records.size()) + " records",
                             sec.line, "n");
        switch (h.kind) {
            case FrequencyKind::Identity: body.freq = FrequencySeq::identity(*h.n); break;
            case FrequencyKind::Log2: body.freq = FrequencySeq::log2(*h.n); break;
            case FrequencyKind::NaturalLog: body.freq = FrequencySeq::natural_log(*h.n); break;
            case FrequencyKind::Affine: body.freq = FrequencySeq::affine(*h.n, h.c, h.d); break;
            case FrequencyKind::Jittered: body.freq = FrequencySeq::jittered(*h.n, h.seed); break;
            case FrequencyKind::Explicit: break;
        }
    }

    if (h.coeff) {
        if (h.coeff->size() != body.freq.size())
            throw InvariantError("line " + std::to_string(h.coeff_line) + ": field 'coeff': " +
                                 std::to_string(h.coeff->size()) + " coefficients for " +
                                 std::to_string(body.freq.size()) + " frequencies");
        body.coeff = *h.coeff;
    } else if (with_coeff != 0) {
        body.coeff = std::move(coeffs);
    } else if (coeff_required) {
        throw ParseError("series has no coefficients (records or 'coeff' key)", sec.line, "coeff");
    }
    return body;
}

void require_valid_with_lines(const APSeries& s, Usage usage, const std::vector<std::size_t>& lines,
                              std::string_view where) {
    const auto diags = validate(s, usage);
    if (diags.empty()) return;
    const Diagnostic& d = diags.front();
    std::string msg;
    if (!where.empty()) msg += "section [" + std::string(where) + "]: ";
    if (d.index > 0 && d.index <= lines.size()) msg += "line " + std::to_string(lines[d.index - 1]) + ": ";
    msg += d.message;
    if (d.index > 0) msg += " (term " + std::to_string(d.index) + ")";
    if (diags.size() > 1) msg += " [+" + std::to_string(diags.size() - 1) + " more]";
    if (d.code == "negative-frequency" || d.code == "frequency-below-one") throw RangeError(msg);
    throw InvariantError(msg);
}

}  // namespace

APSeries series_from_section(const kv::Section& sec, Usage usage) {
    Body body = read_body(sec, true);
    APSeries s{std::move(body.freq), std::move(*body.coeff)};
    require_valid_with_lines(s, usage, body.term_lines, sec.name);
    return s;
}

APSeries parse_series(std::string_view text, std::string_view section, Usage usage) {
    const kv::Document doc = kv::parse(text);
    return series_from_section(doc.section(section), usage);
}

APSeries load_series(const std::filesystem::path& path, std::string_view section, Usage usage) {
    const kv::Document doc = kv::parse_file(path);
    return series_from_section(doc.section(section), usage);
}

FrequencySeq frequencies_from_section(const kv::Section& sec) {
    Body body = read_body(sec, false);
    APSeries probe{body.freq, CoeffSeq(body.freq.size())};
    require_valid_with_lines(probe, Usage::Plain, body.term_lines, sec.name);
    return std::move(body.freq);
}

FrequencySeq load_frequencies(const std::filesystem::path& path, std::string_view section) {
    return frequencies_from_section(kv::parse_file(path).section(section));
}

namespace {

DilatedSeries dilated_from_doc(const kv::Document& doc) {
    APSeries outer = series_from_section(doc.section("outer"), Usage::DilationOuter);
    APSeries inner = series_from_section(doc.section("inner"), Usage::DilationInner);
    return DilatedSeries{std::move(outer.coeff), std::move(outer.freq), std::move(inner)};
}

}  // namespace

DilatedSeries load_dilated(const std::filesystem::path& path) { return dilated_from_doc(kv::parse_file(path)); }

DilatedSeries parse_dilated(std::string_view text) { return dilated_from_doc(kv::parse(text)); }

std::string serialize(const APSeries& series, bool materialize, std::string_view section) {
    std::ostringstream out;
    if (!section.empty()) out << '[' << section << "]\n";
    const FrequencyKind kind = materialize ? FrequencyKind::Explicit : series.freq.kind();
    out << "kind = " << to_string(kind) << '\n';
    out << "n = " << series.size() << '\n';
    if (kind == FrequencyKind::Affine)
        out << "c = " << kv::format_double(series.freq.affine_c()) << '\n'
            << "d = " << kv::format_double(series.freq.affine_d()) << '\n';
    if (kind == FrequencyKind::Jittered) out << "seed = " << series.freq.seed() << '\n';
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << (i + 1);
        if (kind == FrequencyKind::Explicit) out << ' ' << kv::format_double(series.freq[i]);
        out << ' ' << kv::format_double(series.coeff[i].real()) << ' '
            << kv::format_double(series.coeff[i].imag()) << '\n';
    }
    return out.str();
}

std::string serialize(const DilatedSeries& series) {
    return serialize(APSeries{series.outer_freq, series.outer_coeff}, false, "outer") +
           serialize(series.inner, false, "inner");
}

void save_series(const std::filesystem::path& path, const APSeries& series, bool materialize) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << serialize(series, materialize);
}

}  // namespace apstep
