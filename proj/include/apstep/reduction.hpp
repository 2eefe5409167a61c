#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "apstep/series.hpp"

namespace apstep {

/// floor(2^lambda) is only taken for lambda below this bound (fits in int64).
inline constexpr double kMaxReducibleLambda = 62.0;

/// floor(2^lambda), except that values within 1e-9 (relative) of an integer
/// snap to that integer first, so lambda = 3 gives 8 and log2(k) gives k.
std::uint64_t dyadic_floor(double lambda);

/// A general series transported to Dirichlet form sum_n b_n e^{i t log2 n}:
/// u_l = floor(2^{lambda_l}), v = distinct values of u, b_{v_k} = sum_{l : u_l = v_k} a_l.
struct ReducedSeries {
    std::vector<std::uint64_t> v;  // strictly increasing
    CoeffSeq b;                    // b[k] is the coefficient at index v[k]
    std::vector<std::uint64_t> u;  // u[l-1] for each original term l

    /// b_n, zero when n is not one of the v_k.
    Complex b_at(std::uint64_t n) const;
    /// Terms with lambda = log2(v_k), ready for the evaluator and condition checks.
    APSeries as_series() const;
};

ReducedSeries reduce_to_dirichlet(const APSeries& series);

/// |e^{i t lambda} - e^{i t log2 u}|
double phase_gap(double lambda, std::uint64_t u, double t);

struct DiscrepancyReport {
    double measured = 0.0;
    double bound = 0.0;
    bool holds = false;
};

/// Compares the original partial block sum_{k=p}^{q} a_k e^{i t lambda_k}
/// with the reduced block over u_p <= v_m <= u_q. The bound adds the l1 mass
/// of both boundary collision classes to the phase-gap sum
/// sum_{k : u_p <= u_k <= u_q} |a_k| |e^{i t lambda_k} - e^{i t log2 u_k}|.
/// p and q are 1-based with p <= q.
DiscrepancyReport reduction_discrepancy(const APSeries& series, const ReducedSeries& reduced, double t,
                                        std::size_t p, std::size_t q);

/// One dyadic block 2^n <= k <= 2^{n+1} - 1 of the Abel decomposition.
struct AbelBlock {
    unsigned n = 0;
    std::uint64_t first = 1;             // 2^n
    std::vector<Complex> prefix;         // S_{k,n} for k = first .. 2^{n+1} - 1
    double l1 = 0.0;                     // sum_{k in block} |a_k|

    std::uint64_t last() const { return first + prefix.size() - 1; }
    /// S_{2^{n+1}-1, n}, the coefficient of 2^{(n+1) i t}.
    Complex carleson_coefficient() const { return prefix.back(); }
    /// S_{k,n} / k, coefficient of the Dirichlet remainder at k.
    Complex dirichlet_coefficient(std::uint64_t k) const;
};

struct AbelDecomposition {
    std::vector<AbelBlock> blocks;  // n = 0 .. top_block

    std::vector<Complex> carleson_coefficients() const;
    std::size_t length() const;  // number of coefficients covered
};

/// u_k(t) = k^{it} (1 - e^{i t ln(1 + 1/k)} + i t / k), evaluated without
/// cancellation in 1 - e^{i theta}.
Complex abel_remainder_kernel(std::uint64_t k, double t);

/// Blocks 0..top_block, covering a_1 .. a_{2^{top_block+1}-1}.
AbelDecomposition abel_decompose(const CoeffSeq& coeff, unsigned top_block);

/// sum over blocks of sum_k S_{k,n} (u_k(t) - (i t / k) k^{it}) + 2^{(n+1) i t} S_{2^{n+1}-1,n};
/// algebraically equal to the Dirichlet partial sum over the covered range.
Complex abel_recompose(const AbelDecomposition& decomp, double t);

struct UkProbeReport {
    double constant = 0.0;  // max of |u_k(t)| k^2 / (t + t^2) over the probe
    std::vector<std::uint64_t> ks;
    std::vector<double> max_ratio_per_k;
    bool bounded = false;  // ratio at the largest k <= 1.5 * ratio at the smallest k
};

double uk_ratio(std::uint64_t k, double t);

/// Probes k log-spaced on [k_lo, k_hi] and t log-spaced on [t_lo, t_hi].
UkProbeReport uk_bound_probe(std::uint64_t k_lo, std::uint64_t k_hi, double t_lo, double t_hi,
                             std::size_t k_points = 16, std::size_t t_points = 32);

}  // namespace apstep
