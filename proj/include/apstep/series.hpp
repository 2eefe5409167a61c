#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace apstep {

using Complex = std::complex<double>;

enum class FrequencyKind { Explicit, Identity, Log2, NaturalLog, Affine, Jittered };

std::string_view to_string(FrequencyKind kind);
FrequencyKind frequency_kind_from_string(std::string_view name);

/// Finite nondecreasing sequence of real exponents lambda_1 <= lambda_2 <= ...
///
/// Builtin kinds keep their generating parameters so the sequence can be
/// extended by the closed form; the materialized prefix is always stored.
class FrequencySeq {
public:
    FrequencySeq() = default;

    static FrequencySeq explicit_values(std::vector<double> values);
    static FrequencySeq identity(std::size_t n);
    static FrequencySeq log2(std::size_t n);
    static FrequencySeq natural_log(std::size_t n);
    static FrequencySeq affine(std::size_t n, double c, double d);
    /// lambda_n = n + eps_n, eps_n uniform on (-0.49, 0.49) from `seed`.
    static FrequencySeq jittered(std::size_t n, std::uint64_t seed);

    FrequencyKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    /// 1-based access matching the mathematical indexing.
    double at1(std::size_t n) const;

    double affine_c() const noexcept { return c_; }
    double affine_d() const noexcept { return d_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Same kind with n terms; builtin kinds use the closed form, explicit
    /// sequences can only be truncated.
    FrequencySeq resized(std::size_t n) const;

    /// Closed-form value at 1-based index n for builtin kinds.
    double closed_form(std::size_t n) const;

    friend bool operator==(const FrequencySeq&, const FrequencySeq&) = default;

private:
    FrequencyKind kind_ = FrequencyKind::Explicit;
    double c_ = 1.0;
    double d_ = 0.0;
    std::uint64_t seed_ = 0;
    std::vector<double> values_;
};

using CoeffSeq = std::vector<Complex>;

/// The generalized trigonometric series sum_n a_n e^{i lambda_n t}.
struct APSeries {
    FrequencySeq freq;
    CoeffSeq coeff;

    std::size_t size() const noexcept { return coeff.size(); }
    friend bool operator==(const APSeries&, const APSeries&) = default;
};

/// sum_n alpha_n D(lambda_n t) with D(t) = sum_j beta_j e^{i mu_j t}.
struct DilatedSeries {
    CoeffSeq outer_coeff;
    FrequencySeq outer_freq;
    APSeries inner;

    std::size_t size() const noexcept { return outer_coeff.size(); }
};

/// Uniform grid t_i = t0 + i * step, i = 0..count-1, inside [t0, t1].
class SampleGrid {
public:
    SampleGrid(double t0, double t1, double step);

    double t0() const noexcept { return t0_; }
    double t1() const noexcept { return t1_; }
    double step() const noexcept { return step_; }
    std::size_t count() const noexcept { return count_; }
    double operator[](std::size_t i) const { return t0_ + static_cast<double>(i) * step_; }

private:
    double t0_;
    double t1_;
    double step_;
    std::size_t count_;
};

enum class Usage { Plain, DilationOuter, DilationInner };

struct Diagnostic {
    std::string code;     // stable machine-readable tag
    std::string message;  // human-readable text
    std::size_t index;    // 1-based term index, 0 when not term-specific
};

std::vector<Diagnostic> validate(const APSeries& series, Usage usage);
std::vector<Diagnostic> validate(const DilatedSeries& series);

/// Throws InvariantError / RangeError carrying the first diagnostic.
void require_valid(const APSeries& series, Usage usage);
void require_valid(const DilatedSeries& series);

/// Sum of |a_k|.
double l1_norm(const CoeffSeq& coeff);

}  // namespace apstep
