#include "apstep/series.hpp"

#include <cmath>

#include "apstep/error.hpp"
#include "apstep/random.hpp"

namespace apstep {

std::string_view to_string(FrequencyKind kind) {
    switch (kind) {
        case FrequencyKind::Explicit: return "explicit";
        case FrequencyKind::Identity: return "identity";
        case FrequencyKind::Log2: return "log2";
        case FrequencyKind::NaturalLog: return "natural-log";
        case FrequencyKind::Affine: return "affine";
        case FrequencyKind::Jittered: return "jittered";
    }
    return "explicit";
}

FrequencyKind frequency_kind_from_string(std::string_view name) {
    if (name == "explicit") return FrequencyKind::Explicit;
    if (name == "identity") return FrequencyKind::Identity;
    if (name == "log2") return FrequencyKind::Log2;
    if (name == "natural-log" || name == "ln") return FrequencyKind::NaturalLog;
    if (name == "affine") return FrequencyKind::Affine;
    if (name == "jittered") return FrequencyKind::Jittered;
    throw ParseError("unknown frequency kind '" + std::string(name) + "'", 0, "kind");
}

FrequencySeq FrequencySeq::explicit_values(std::vector<double> values) {
    FrequencySeq f;
    f.kind_ = FrequencyKind::Explicit;
    f.values_ = std::move(values);
    return f;
}

namespace {

FrequencySeq materialize(FrequencySeq f, std::size_t n) { return f.resized(n); }

}  // namespace

FrequencySeq FrequencySeq::identity(std::size_t n) {
    FrequencySeq f;
    f.kind_ = FrequencyKind::Identity;
    return materialize(f, n);
}

FrequencySeq FrequencySeq::log2(std::size_t n) {
    FrequencySeq f;
    f.kind_ = FrequencyKind::Log2;
    return materialize(f, n);
}

FrequencySeq FrequencySeq::natural_log(std::size_t n) {
    FrequencySeq f;
    f.kind_ = FrequencyKind::NaturalLog;
    return materialize(f, n);
}

FrequencySeq FrequencySeq::affine(std::size_t n, double c, double d) {
    FrequencySeq f;
    f.kind_ = FrequencyKind::Affine;
    f.c_ = c;
    f.d_ = d;
    return materialize(f, n);
}

FrequencySeq FrequencySeq::jittered(std::size_t n, std::uint64_t seed) {
    FrequencySeq f;
    f.kind_ = FrequencyKind::Jittered;
    f.seed_ = seed;
    return materialize(f, n);
}

double FrequencySeq::at1(std::size_t n) const {
    if (n == 0 || n > values_.size())
        throw IndexError("frequency index " + std::to_string(n) + " outside 1.." +
                         std::to_string(values_.size()));
    return values_[n - 1];
}

double FrequencySeq::closed_form(std::size_t n) const {
    if (n == 0) throw IndexError("frequency indices start at 1");
    const auto x = static_cast<double>(n);
    switch (kind_) {
        case FrequencyKind::Identity: return x;
        case FrequencyKind::Log2: return std::log2(x);
        case FrequencyKind::NaturalLog: return std::log(x);
        case FrequencyKind::Affine: return c_ * x + d_;
        case FrequencyKind::Jittered: {
            CounterRng rng(seed_, 0);
            double eps = 0.0;
            for (std::size_t i = 0; i < n; ++i) eps = rng.uniform(-0.49, 0.49);
            return x + eps;
        }
        case FrequencyKind::Explicit: break;
    }
    throw InvariantError("explicit frequency sequences have no closed form");
}

FrequencySeq FrequencySeq::resized(std::size_t n) const {
    FrequencySeq f = *this;
    if (kind_ == FrequencyKind::Explicit) {
        if (n > values_.size())
            throw InvariantError("cannot extend an explicit frequency sequence beyond " +
                                 std::to_string(values_.size()) + " terms");
        f.values_.resize(n);
        return f;
    }
    f.values_.resize(n);
    if (kind_ == FrequencyKind::Jittered) {
        CounterRng rng(seed_, 0);
        for (std::size_t i = 0; i < n; ++i)
            f.values_[i] = static_cast<double>(i + 1) + rng.uniform(-0.49, 0.49);
        return f;
    }
    for (std::size_t i = 0; i < n; ++i) f.values_[i] = closed_form(i + 1);
    return f;
}

SampleGrid::SampleGrid(double t0, double t1, double step) : t0_(t0), t1_(t1), step_(step) {
    if (!std::isfinite(t0) || !std::isfinite(t1) || !std::isfinite(step))
        throw RangeError("grid bounds and step must be finite");
    if (!(step > 0.0)) throw RangeError("grid step must be positive");
    if (t1 < t0) throw RangeError("grid requires t1 >= t0");
    // 1e-9 guard so that e.g. (10 - 0) / 0.01 counts 1001 points.
    count_ = static_cast<std::size_t>(std::floor((t1 - t0) / step + 1e-9)) + 1;
}

namespace {

void check_terms(const APSeries& s, Usage usage, std::vector<Diagnostic>& out,
                 std::string_view prefix) {
    const std::string p(prefix);
    if (s.freq.size() != s.coeff.size())
        out.push_back({"length-mismatch",
                       p + "frequency length " + std::to_string(s.freq.size()) +
                           " != coefficient length " + std::to_string(s.coeff.size()),
                       0});
    const auto& v = s.freq.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t idx = i + 1;
        if (!std::isfinite(v[i])) {
            out.push_back({"non-finite-frequency", p + "non-finite frequency", idx});
            continue;
        }
        if (i > 0 && std::isfinite(v[i - 1]) && v[i] < v[i - 1])
            out.push_back({"non-monotone", p + "frequencies not nondecreasing", idx});
        if (usage == Usage::Plain) {
            if (v[i] < 0.0) out.push_back({"negative-frequency", p + "negative frequency", idx});
        } else if (v[i] < 1.0) {
            out.push_back({"frequency-below-one", p + "frequency < 1", idx});
        }
    }
    for (std::size_t i = 0; i < s.coeff.size(); ++i) {
        if (!std::isfinite(s.coeff[i].real()) || !std::isfinite(s.coeff[i].imag()))
            out.push_back({"non-finite-coefficient", p + "non-finite coefficient", i + 1});
    }
}

void throw_first(const std::vector<Diagnostic>& diags) {
    if (diags.empty()) return;
    const Diagnostic& d = diags.front();
    std::string msg = d.message;
    if (d.index > 0) msg += " (term " + std::to_string(d.index) + ")";
    if (diags.size() > 1) msg += " [+" + std::to_string(diags.size() - 1) + " more]";
    if (d.code == "negative-frequency" || d.code == "frequency-below-one") throw RangeError(msg);
    throw InvariantError(msg);
}

}  // namespace

std::vector<Diagnostic> validate(const APSeries& series, Usage usage) {
    std::vector<Diagnostic> out;
    check_terms(series, usage, out, "");
    return out;
}

std::vector<Diagnostic> validate(const DilatedSeries& series) {
    std::vector<Diagnostic> out;
    check_terms(APSeries{series.outer_freq, series.outer_coeff}, Usage::DilationOuter, out, "outer: ");
    check_terms(series.inner, Usage::DilationInner, out, "inner: ");
    return out;
}

void require_valid(const APSeries& series, Usage usage) { throw_first(validate(series, usage)); }

void require_valid(const DilatedSeries& series) { throw_first(validate(series)); }

double l1_norm(const CoeffSeq& coeff) {
    double s = 0.0;
    for (const auto& a : coeff) s += std::abs(a);
    return s;
}

}  // namespace apstep
