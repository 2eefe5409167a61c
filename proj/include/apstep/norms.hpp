#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "apstep/evaluator.hpp"
#include "apstep/series.hpp"

namespace apstep {

enum class Quadrature { Trapezoid, Simpson };

std::string_view to_string(Quadrature q);
Quadrature quadrature_from_string(std::string_view name);

using ComplexFunction = std::function<Complex(double)>;
/// t -> |f(t)|^2
using SquaredModulus = std::function<double(double)>;

/// Number of quadrature intervals covering a unit window for a requested
/// step: ceil(1 / t_step), bumped to even for Simpson.
std::size_t window_intervals(double t_step, Quadrature q);

/// (int_x^{x+1} |f|^2 dt)^{1/2} by the composite rule.
double window_l2(const ComplexFunction& f, double x, double t_step, Quadrature q);
double window_l2_sq(const SquaredModulus& abs2, double x, double t_step, Quadrature q);

struct StepanovParams {
    double x_lo = 0.0;
    double x_hi = 100.0;
    double x_step = 0.05;
    double t_step = 1e-3;
    Quadrature quadrature = Quadrature::Simpson;
    unsigned workers = 0;
};

/// Estimate of sup_x (int_x^{x+1} |f|^2)^{1/2}. The sup is taken over a
/// finite set of window starts, so `value` never exceeds the true norm up to
/// quadrature error and `lower_bound_only` is always set.
struct NormEstimate {
    double value = 0.0;
    bool lower_bound_only = true;
    double x_lo = 0.0;
    double x_hi = 0.0;
    double x_step = 0.0;  // effective spacing of window starts
    double t_step = 0.0;  // effective quadrature step
    Quadrature quadrature = Quadrature::Simpson;
    double argmax_x = 0.0;
    std::size_t windows = 0;
};

/// Window starts and samples lie on the lattice t = j / n (n intervals per
/// unit window), anchored at 0; x_lo is rounded up and x_hi down to it and
/// x_step is rounded to a multiple of 1 / n. Each sample is evaluated once
/// and shared by every window that covers it. Window sets that nest give
/// bitwise-nested maxima.
NormEstimate stepanov_norm(const SquaredModulus& abs2, const StepanovParams& params = {});
NormEstimate stepanov_norm(const ComplexFunction& f, const StepanovParams& params = {});
NormEstimate stepanov_norm(const APSeries& series, const StepanovParams& params = {});
/// Norm of the maximal function t -> sup_{N<=n_max} |S_N(t)|.
NormEstimate stepanov_norm_maximal(const APSeries& series, std::size_t n_max,
                                   const StepanovParams& params = {});
/// Norm of a precomputed maximal field; its grid step must divide 1.
NormEstimate stepanov_norm(const MaximalField& field, double x_step, Quadrature q);

struct BesicovitchEstimate {
    double value = 0.0;  // max over the later half of the horizon ladder
    std::vector<double> horizons;
    std::vector<double> trace;  // ((1/2T) int_{-T}^{T} |f|^2)^{1/2} per horizon
};

std::vector<double> default_horizons();

/// Long-window quadratic means of a finite trigonometric sum. The integrals
/// are evaluated term-by-term in closed form:
///   (1/2T) int |f|^2 = sum_{j,k} a_j conj(a_k) sinc((lambda_j - lambda_k) T).
BesicovitchEstimate besicovitch_seminorm(const APSeries& series, const std::vector<double>& horizons);

/// (1/2T) int_{-T}^{T} f(x) e^{-i lambda x} dx for a finite trigonometric sum,
/// integrated term-by-term in closed form: sum_k a_k sinc((lambda_k - lambda) T).
Complex fourier_coefficient(const APSeries& series, double lambda, double t_horizon);

/// Quadrature step for the coefficient integral: min(1e-3, 0.1 / (1 + |lambda| + max_freq)).
double coefficient_step(double lambda, double max_freq);

/// Same average for an arbitrary function by composite Simpson; `t_step` <= 0
/// selects coefficient_step(lambda, max_freq).
Complex fourier_coefficient_numeric(const ComplexFunction& f, double lambda, double t_horizon,
                                    double t_step = 0.0, double max_freq = 0.0);

/// Merges terms with equal frequencies by adding their coefficients.
APSeries collapse_ties(const APSeries& series);

struct BesselReport {
    double lhs = 0.0;    // sum_k |f^(lambda_k)|^2 over distinct frequencies
    double rhs = 0.0;    // Stepanov norm squared
    double slack = 0.0;  // rhs - lhs
    bool holds = false;  // lhs <= rhs * (1 + tol)
    double tol = 5e-2;
    NormEstimate stepanov;
};

BesselReport bessel_check(const APSeries& series, double t_horizon, const StepanovParams& params = {},
                          double tol = 5e-2);

}  // namespace apstep
