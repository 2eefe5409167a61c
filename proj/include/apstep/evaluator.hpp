#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "apstep/series.hpp"

namespace apstep {

/// a * e^{i lambda t}
inline Complex term_value(Complex a, double lambda, double t) {
    const double phase = lambda * t;
    return a * Complex(std::cos(phase), std::sin(phase));
}

/// S_n(t) = sum_{k=1}^{n} a_k e^{i lambda_k t}, summed in ascending k.
Complex partial_sum(const APSeries& series, std::size_t n, double t);

/// sup_{1<=N<=n_max} |S_N(t)| at a single point.
double maximal_abs(const APSeries& series, std::size_t n_max, double t);

/// sum_{k=1}^{n} a_k k^{it}; bitwise identical to partial_sum over
/// FrequencySeq::natural_log.
Complex dirichlet_partial_sum(const CoeffSeq& coeff, std::size_t n, double t);

/// Maximal function sampled on a grid.
struct MaximalField {
    SampleGrid grid;
    std::vector<double> max_abs;     // sup_{N<=n_max} |S_N(t_i)|
    std::vector<Complex> final_sum;  // S_{n_max}(t_i)
    std::size_t n_max;
};

/// One incremental prefix pass per grid point: O(n_max * count) time,
/// O(count) memory. Grid points are distributed over `workers`.
MaximalField maximal_field(const APSeries& series, const SampleGrid& grid, std::size_t n_max,
                           unsigned workers = 0);

/// Emits `t,re,im,maxabs` rows with a header line.
void write_csv(std::ostream& out, const MaximalField& field);

struct DilatedValue {
    Complex value;
    /// (sum_{k<=n} |alpha_k|) * (sum_{j>J} |beta_j|): bounds the error from
    /// truncating the inner series at J terms.
    double tail_bound;
};

/// sum_{k=1}^{n} alpha_k D_J(lambda_k t) with D_J the inner series cut at J terms.
DilatedValue dilated_eval(const DilatedSeries& ds, std::size_t n, double t, std::size_t inner_trunc);

/// sup over N <= n_max of |sum_{k<=N} alpha_k D_J(lambda_k t)|.
double dilated_maximal_abs(const DilatedSeries& ds, std::size_t n_max, double t, std::size_t inner_trunc);

/// psi(x) = x - floor(x) - 1/2, in [-1/2, 1/2).
double sawtooth_psi(double x);

/// -(1/pi) sum_{j<=j_max} sin(2 pi j x) / j. Converges to sawtooth_psi(x)
/// away from the integers and to 0 at them.
double psi_series_partial(double x, std::size_t j_max);

/// sum_{j<=j_max} sin(2 pi j x) / j without normalization; its limit is
/// -pi * psi(x), kept for comparison with the unnormalized form.
double psi_series_unnormalized(double x, std::size_t j_max);

/// sum_{k<=k_max} psi(k x) / k^alpha.
double phi_alpha(double x, double alpha, std::size_t k_max);

/// True when alpha lies in (1/2, 1], the range where the series of dilates
/// is known to converge almost everywhere.
bool phi_alpha_in_range(double alpha);

}  // namespace apstep
