#include "apstep/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "apstep/error.hpp"
#include "apstep/parallel.hpp"

namespace apstep {

std::string_view to_string(Quadrature q) { return q == Quadrature::Simpson ? "simpson" : "trapezoid"; }

Quadrature quadrature_from_string(std::string_view name) {
    if (name == "simpson") return Quadrature::Simpson;
    if (name == "trapezoid") return Quadrature::Trapezoid;
    throw RangeError("unknown quadrature '" + std::string(name) + "' (expected simpson|trapezoid)");
}

std::size_t window_intervals(double t_step, Quadrature q) {
    if (!(t_step > 0.0) || t_step > 0.5) throw RangeError("t_step must lie in (0, 0.5]");
    auto n = static_cast<std::size_t>(std::ceil(1.0 / t_step - 1e-9));
    if (q == Quadrature::Simpson && n % 2 == 1) ++n;
    return n;
}

namespace {

/// Weighted sum over samples[0..n]; divide by `window_divisor(n, q)` for the integral.
double weighted_sum(const double* samples, std::size_t n, Quadrature q) {
    if (q == Quadrature::Trapezoid) {
        double s = 0.5 * samples[0];
        for (std::size_t j = 1; j < n; ++j) s += samples[j];
        return s + 0.5 * samples[n];
    }
    double s = samples[0];
    for (std::size_t j = 1; j < n; ++j) s += (j % 2 == 1 ? 4.0 : 2.0) * samples[j];
    return s + samples[n];
}

double window_divisor(std::size_t n, Quadrature q) {
    return q == Quadrature::Simpson ? 3.0 * static_cast<double>(n) : static_cast<double>(n);
}

void require_finite(double v, double t) {
    if (!std::isfinite(v)) throw RangeError("non-finite sample at t = " + std::to_string(t));
}

}  // namespace

double window_l2_sq(const SquaredModulus& abs2, double x, double t_step, Quadrature q) {
    const std::size_t n = window_intervals(t_step, q);
    std::vector<double> samples(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double t = x + static_cast<double>(j) / static_cast<double>(n);
        samples[j] = abs2(t);
        require_finite(samples[j], t);
    }
    return std::sqrt(std::max(0.0, weighted_sum(samples.data(), n, q) / window_divisor(n, q)));
}

double window_l2(const ComplexFunction& f, double x, double t_step, Quadrature q) {
    return window_l2_sq([&](double t) { return std::norm(f(t)); }, x, t_step, q);
}

namespace {

NormEstimate max_over_windows(const std::vector<double>& samples, std::size_t n, std::size_t stride,
                              std::size_t n_windows, Quadrature q, double h, unsigned workers,
                              std::size_t& best_window) {
    std::vector<double> integrals(n_windows);
    parallel_for(n_windows, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t w = begin; w < end; ++w)
            integrals[w] = weighted_sum(samples.data() + w * stride, n, q) / window_divisor(n, q);
    });
    std::size_t best = 0;
    for (std::size_t w = 1; w < n_windows; ++w)
        if (integrals[w] > integrals[best]) best = w;
    NormEstimate est;
    est.value = std::sqrt(std::max(0.0, integrals[best]));
    est.lower_bound_only = true;
    est.quadrature = q;
    est.t_step = h;
    est.x_step = static_cast<double>(stride) * h;
    est.windows = n_windows;
    best_window = best;
    return est;
}

}  // namespace

NormEstimate stepanov_norm(const SquaredModulus& abs2, const StepanovParams& p) {
    if (!std::isfinite(p.x_lo) || !std::isfinite(p.x_hi)) throw RangeError("x range must be finite");
    if (!(p.x_step > 0.0) || p.x_step > 1.0) throw RangeError("x_step must lie in (0, 1]");
    const std::size_t n = window_intervals(p.t_step, p.quadrature);
    const auto nd = static_cast<double>(n);
    const auto first = static_cast<long long>(std::ceil(p.x_lo * nd - 1e-9));
    const auto last = static_cast<long long>(std::floor(p.x_hi * nd + 1e-9));
    if (last < first) throw RangeError("empty x grid: x range contains no window start");
    const auto stride = static_cast<std::size_t>(std::max(1LL, std::llround(p.x_step * nd)));
    const std::size_t n_windows = static_cast<std::size_t>(last - first) / stride + 1;
    const std::size_t n_samples = (n_windows - 1) * stride + n + 1;

    std::vector<double> samples(n_samples);
    parallel_for(n_samples, p.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double t = static_cast<double>(first + static_cast<long long>(i)) / nd;
            samples[i] = abs2(t);
            require_finite(samples[i], t);
        }
    });
    std::size_t best = 0;
    NormEstimate est = max_over_windows(samples, n, stride, n_windows, p.quadrature, 1.0 / nd, p.workers, best);
    est.x_lo = static_cast<double>(first) / nd;
    est.x_hi = static_cast<double>(first + static_cast<long long>((n_windows - 1) * stride)) / nd;
    est.argmax_x = static_cast<double>(first + static_cast<long long>(best * stride)) / nd;
    return est;
}

NormEstimate stepanov_norm(const ComplexFunction& f, const StepanovParams& params) {
    return stepanov_norm(SquaredModulus([&](double t) { return std::norm(f(t)); }), params);
}

NormEstimate stepanov_norm(const APSeries& series, const StepanovParams& params) {
    if (series.freq.size() != series.coeff.size())
        throw InvariantError("frequency and coefficient lengths differ");
    const std::size_t n = series.size();
    return stepanov_norm(SquaredModulus([&](double t) { return std::norm(partial_sum(series, n, t)); }),
                         params);
}

NormEstimate stepanov_norm_maximal(const APSeries& series, std::size_t n_max, const StepanovParams& params) {
    if (n_max == 0 || n_max > series.size())
        throw IndexError("n_max must lie in 1.." + std::to_string(series.size()));
    return stepanov_norm(SquaredModulus([&](double t) {
                             const double m = maximal_abs(series, n_max, t);
                             return m * m;
                         }),
                         params);
}

NormEstimate stepanov_norm(const MaximalField& field, double x_step, Quadrature q) {
    const double h = field.grid.step();
    const auto n = static_cast<std::size_t>(std::llround(1.0 / h));
    if (n < 2 || std::abs(static_cast<double>(n) * h - 1.0) > 1e-9)
        throw RangeError("maximal field grid step must divide the unit window");
    if (q == Quadrature::Simpson && n % 2 == 1)
        throw RangeError("Simpson needs an even number of grid steps per unit window");
    if (field.grid.count() < n + 1) throw RangeError("empty x grid: field shorter than one window");
    if (!(x_step > 0.0) || x_step > 1.0) throw RangeError("x_step must lie in (0, 1]");
    const auto stride = static_cast<std::size_t>(std::max(1LL, std::llround(x_step / h)));
    const std::size_t n_windows = (field.grid.count() - 1 - n) / stride + 1;
    std::vector<double> samples(field.max_abs.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i] = field.max_abs[i] * field.max_abs[i];
        require_finite(samples[i], field.grid[i]);
    }
    std::size_t best = 0;
    NormEstimate est = max_over_windows(samples, n, stride, n_windows, q, h, 1, best);
    est.x_lo = field.grid.t0();
    est.x_hi = field.grid[(n_windows - 1) * stride];
    est.argmax_x = field.grid[best * stride];
    return est;
}

std::vector<double> default_horizons() {
    return {1e2, std::pow(10.0, 2.5), 1e3, std::pow(10.0, 3.5), 1e4};
}

namespace {

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

BesicovitchEstimate besicovitch_seminorm(const APSeries& series, const std::vector<double>& horizons) {
    if (horizons.empty()) throw RangeError("besicovitch_seminorm: empty horizon list");
    if (series.freq.size() != series.coeff.size())
        throw InvariantError("frequency and coefficient lengths differ");
    for (std::size_t i = 0; i < horizons.size(); ++i) {
        if (!(horizons[i] >= 1.0)) throw RangeError("horizons must be >= 1");
        if (i > 0 && !(horizons[i] > horizons[i - 1])) throw RangeError("horizons must be increasing");
    }
    BesicovitchEstimate est;
    est.horizons = horizons;
    const std::size_t n = series.size();
    for (double T : horizons) {
        double diag = 0.0;
        double cross = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            diag += std::norm(series.coeff[j]);
            for (std::size_t k = j + 1; k < n; ++k) {
                const double delta = series.freq[j] - series.freq[k];
                cross += (series.coeff[j] * std::conj(series.coeff[k])).real() * sinc(delta * T);
            }
        }
        est.trace.push_back(std::sqrt(std::max(0.0, diag + 2.0 * cross)));
    }
    const std::size_t tail = (horizons.size() + 1) / 2;
    est.value = *std::max_element(est.trace.end() - static_cast<std::ptrdiff_t>(tail), est.trace.end());
    return est;
}

Complex fourier_coefficient(const APSeries& series, double lambda, double t_horizon) {
    if (series.freq.size() != series.coeff.size())
        throw InvariantError("frequency and coefficient lengths differ");
    if (!(t_horizon >= 1.0)) throw RangeError("t_horizon must be >= 1");
    Complex c{0.0, 0.0};
    for (std::size_t k = 0; k < series.size(); ++k)
        c += series.coeff[k] * sinc((series.freq[k] - lambda) * t_horizon);
    return c;
}

double coefficient_step(double lambda, double max_freq) {
    return std::min(1e-3, 0.1 / (1.0 + std::abs(lambda) + std::abs(max_freq)));
}

Complex fourier_coefficient_numeric(const ComplexFunction& f, double lambda, double t_horizon, double t_step,
                                    double max_freq) {
    if (!(t_horizon >= 1.0)) throw RangeError("t_horizon must be >= 1");
    const double step = t_step > 0.0 ? t_step : coefficient_step(lambda, max_freq);
    auto n = static_cast<std::size_t>(std::ceil(2.0 * t_horizon / step));
    if (n % 2 == 1) ++n;
    const double h = 2.0 * t_horizon / static_cast<double>(n);
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j <= n; ++j) {
        const double x = -t_horizon + static_cast<double>(j) * h;
        const double w = (j == 0 || j == n) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        s += w * f(x) * Complex(std::cos(lambda * x), -std::sin(lambda * x));
    }
    return s * (h / 3.0) / (2.0 * t_horizon);
}

APSeries collapse_ties(const APSeries& series) {
    if (series.freq.size() != series.coeff.size())
        throw InvariantError("frequency and coefficient lengths differ");
    std::vector<double> lambdas;
    CoeffSeq coeffs;
    for (std::size_t k = 0; k < series.size(); ++k) {
        if (!lambdas.empty() && lambdas.back() == series.freq[k]) {
            coeffs.back() += series.coeff[k];
        } else {
            lambdas.push_back(series.freq[k]);
            coeffs.push_back(series.coeff[k]);
        }
    }
    return {FrequencySeq::explicit_values(std::move(lambdas)), std::move(coeffs)};
}

BesselReport bessel_check(const APSeries& series, double t_horizon, const StepanovParams& params, double tol) {
    const APSeries distinct = collapse_ties(series);
    BesselReport r;
    r.tol = tol;
    for (std::size_t k = 0; k < distinct.size(); ++k)
        r.lhs += std::norm(fourier_coefficient(distinct, distinct.freq[k], t_horizon));
    r.stepanov = stepanov_norm(distinct, params);
    r.rhs = r.stepanov.value * r.stepanov.value;
    r.slack = r.rhs - r.lhs;
    r.holds = r.lhs <= r.rhs * (1.0 + tol);
    return r;
}

}  // namespace apstep
