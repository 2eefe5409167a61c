#include "apstep/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "apstep/error.hpp"
#include "apstep/keyvalue.hpp"
#include "apstep/parallel.hpp"

namespace apstep {

namespace {

void check_prefix(std::size_t n, std::size_t size, const char* what) {
    if (n > size)
        throw IndexError(std::string(what) + ": n = " + std::to_string(n) + " exceeds series length " +
                         std::to_string(size));
}

void check_lengths(const APSeries& s) {
    if (s.freq.size() != s.coeff.size()) throw InvariantError("frequency and coefficient lengths differ");
}

}  // namespace

Complex partial_sum(const APSeries& series, std::size_t n, double t) {
    check_lengths(series);
    check_prefix(n, series.size(), "partial_sum");
    Complex s{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) s += term_value(series.coeff[k], series.freq[k], t);
    return s;
}

double maximal_abs(const APSeries& series, std::size_t n_max, double t) {
    check_lengths(series);
    check_prefix(n_max, series.size(), "maximal_abs");
    Complex s{0.0, 0.0};
    double best = 0.0;
    for (std::size_t k = 0; k < n_max; ++k) {
        s += term_value(series.coeff[k], series.freq[k], t);
        best = std::max(best, std::abs(s));
    }
    return best;
}

Complex dirichlet_partial_sum(const CoeffSeq& coeff, std::size_t n, double t) {
    check_prefix(n, coeff.size(), "dirichlet_partial_sum");
    Complex s{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) s += term_value(coeff[k], std::log(static_cast<double>(k + 1)), t);
    return s;
}

MaximalField maximal_field(const APSeries& series, const SampleGrid& grid, std::size_t n_max,
                           unsigned workers) {
    check_lengths(series);
    if (n_max == 0 || n_max > series.size())
        throw IndexError("maximal_field: n_max must lie in 1.." + std::to_string(series.size()));
    MaximalField field{grid, std::vector<double>(grid.count()), std::vector<Complex>(grid.count()), n_max};
    parallel_for(grid.count(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double t = grid[i];
            Complex s{0.0, 0.0};
            double best = 0.0;
            for (std::size_t k = 0; k < n_max; ++k) {
                s += term_value(series.coeff[k], series.freq[k], t);
                best = std::max(best, std::abs(s));
            }
            field.max_abs[i] = best;
            field.final_sum[i] = s;
        }
    });
    return field;
}

void write_csv(std::ostream& out, const MaximalField& field) {
    out << "t,re,im,maxabs\n";
    for (std::size_t i = 0; i < field.grid.count(); ++i) {
        out << kv::format_double(field.grid[i]) << ',' << kv::format_double(field.final_sum[i].real()) << ','
            << kv::format_double(field.final_sum[i].imag()) << ',' << kv::format_double(field.max_abs[i])
            << '\n';
    }
}

namespace {

void check_dilated(const DilatedSeries& ds, std::size_t n, std::size_t inner_trunc) {
    if (ds.outer_coeff.size() != ds.outer_freq.size())
        throw InvariantError("outer frequency and coefficient lengths differ");
    check_lengths(ds.inner);
    check_prefix(n, ds.outer_coeff.size(), "dilated_eval (outer)");
    check_prefix(inner_trunc, ds.inner.size(), "dilated_eval (inner)");
}

Complex inner_value(const APSeries& inner, std::size_t inner_trunc, double s) {
    Complex d{0.0, 0.0};
    for (std::size_t j = 0; j < inner_trunc; ++j) d += term_value(inner.coeff[j], inner.freq[j], s);
    return d;
}

}  // namespace

DilatedValue dilated_eval(const DilatedSeries& ds, std::size_t n, double t, std::size_t inner_trunc) {
    check_dilated(ds, n, inner_trunc);
    Complex value{0.0, 0.0};
    double outer_l1 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        value += ds.outer_coeff[k] * inner_value(ds.inner, inner_trunc, ds.outer_freq[k] * t);
        outer_l1 += std::abs(ds.outer_coeff[k]);
    }
    double inner_tail = 0.0;
    for (std::size_t j = inner_trunc; j < ds.inner.size(); ++j) inner_tail += std::abs(ds.inner.coeff[j]);
    return {value, outer_l1 * inner_tail};
}

double dilated_maximal_abs(const DilatedSeries& ds, std::size_t n_max, double t, std::size_t inner_trunc) {
    check_dilated(ds, n_max, inner_trunc);
    Complex s{0.0, 0.0};
    double best = 0.0;
    for (std::size_t k = 0; k < n_max; ++k) {
        s += ds.outer_coeff[k] * inner_value(ds.inner, inner_trunc, ds.outer_freq[k] * t);
        best = std::max(best, std::abs(s));
    }
    return best;
}

double sawtooth_psi(double x) { return x - std::floor(x) - 0.5; }

double psi_series_unnormalized(double x, std::size_t j_max) {
    // sin(2 pi j x) only depends on the fractional part of x.
    const double frac = x - std::floor(x);
    double s = 0.0;
    for (std::size_t j = 1; j <= j_max; ++j) {
        const auto jd = static_cast<double>(j);
        s += std::sin(2.0 * std::numbers::pi * jd * frac) / jd;
    }
    return s;
}

double psi_series_partial(double x, std::size_t j_max) {
    return -psi_series_unnormalized(x, j_max) / std::numbers::pi;
}

double phi_alpha(double x, double alpha, std::size_t k_max) {
    double s = 0.0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        const auto kd = static_cast<double>(k);
        s += sawtooth_psi(kd * x) / std::pow(kd, alpha);
    }
    return s;
}

bool phi_alpha_in_range(double alpha) { return alpha > 0.5 && alpha <= 1.0; }

}  // namespace apstep
