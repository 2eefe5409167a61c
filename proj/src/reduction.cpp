#include "apstep/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "apstep/error.hpp"
#include "apstep/evaluator.hpp"

namespace apstep {

std::uint64_t dyadic_floor(double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw RangeError("reduction needs finite lambda >= 0, got " + std::to_string(lambda));
    if (lambda >= kMaxReducibleLambda)
        throw RangeError("2^lambda overflows for lambda = " + std::to_string(lambda) +
                         "; max admissible lambda is below " + std::to_string(kMaxReducibleLambda));
    const double x = std::exp2(lambda);
    const double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, r)) return static_cast<std::uint64_t>(r);
    return static_cast<std::uint64_t>(std::floor(x));
}

Complex ReducedSeries::b_at(std::uint64_t n) const {
    auto it = std::lower_bound(v.begin(), v.end(), n);
    if (it == v.end() || *it != n) return {0.0, 0.0};
    return b[static_cast<std::size_t>(it - v.begin())];
}

APSeries ReducedSeries::as_series() const {
    std::vector<double> lambdas;
    lambdas.reserve(v.size());
    for (auto n : v) lambdas.push_back(std::log2(static_cast<double>(n)));
    return {FrequencySeq::explicit_values(std::move(lambdas)), b};
}

ReducedSeries reduce_to_dirichlet(const APSeries& series) {
    if (series.freq.size() != series.coeff.size())
        throw InvariantError("frequency and coefficient lengths differ");
    ReducedSeries r;
    r.u.reserve(series.size());
    for (std::size_t l = 0; l < series.size(); ++l) {
        const std::uint64_t u = dyadic_floor(series.freq[l]);
        if (!r.u.empty() && u < r.u.back())
            throw InvariantError("frequencies must be nondecreasing (term " + std::to_string(l + 1) + ")");
        r.u.push_back(u);
        if (r.v.empty() || r.v.back() != u) {
            r.v.push_back(u);
            r.b.push_back(series.coeff[l]);
        } else {
            r.b.back() += series.coeff[l];
        }
    }
    return r;
}

double phase_gap(double lambda, std::uint64_t u, double t) {
    return std::abs(term_value(1.0, lambda, t) - term_value(1.0, std::log2(static_cast<double>(u)), t));
}

DiscrepancyReport reduction_discrepancy(const APSeries& series, const ReducedSeries& reduced, double t,
                                        std::size_t p, std::size_t q) {
    const std::size_t n = series.size();
    if (reduced.u.size() != n) throw InvariantError("reduced series does not match the original length");
    if (p == 0 || q > n || p > q)
        throw IndexError("need 1 <= p <= q <= " + std::to_string(n) + ", got p = " + std::to_string(p) +
                         ", q = " + std::to_string(q));
    const std::uint64_t up = reduced.u[p - 1];
    const std::uint64_t uq = reduced.u[q - 1];

    Complex original{0.0, 0.0};
    for (std::size_t k = p - 1; k < q; ++k) original += term_value(series.coeff[k], series.freq[k], t);

    Complex transported{0.0, 0.0};
    for (std::size_t m = 0; m < reduced.v.size(); ++m) {
        const std::uint64_t vm = reduced.v[m];
        if (vm < up || vm > uq) continue;
        transported += term_value(reduced.b[m], std::log2(static_cast<double>(vm)), t);
    }

    double boundary_p = 0.0;
    double boundary_q = 0.0;
    double gap_sum = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t uk = reduced.u[k];
        const double ak = std::abs(series.coeff[k]);
        if (uk == up) boundary_p += ak;
        if (uk == uq) boundary_q += ak;
        if (uk >= up && uk <= uq) {
            gap_sum += ak * phase_gap(series.freq[k], uk, t);
            scale += ak;
        }
    }
    DiscrepancyReport rep;
    rep.measured = std::abs(original - transported);
    rep.bound = boundary_p + boundary_q + gap_sum;
    // Both sides are sums of O(n) rounded terms; allow that much slack.
    rep.holds = rep.measured <= rep.bound + 64.0 * static_cast<double>(n) * 0x1.0p-52 * (1.0 + scale);
    return rep;
}

Complex AbelBlock::dirichlet_coefficient(std::uint64_t k) const {
    if (k < first || k > last()) throw IndexError("index " + std::to_string(k) + " outside block");
    return prefix[k - first] / static_cast<double>(k);
}

std::vector<Complex> AbelDecomposition::carleson_coefficients() const {
    std::vector<Complex> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(b.carleson_coefficient());
    return out;
}

std::size_t AbelDecomposition::length() const {
    return blocks.empty() ? 0 : static_cast<std::size_t>(blocks.back().last());
}

Complex abel_remainder_kernel(std::uint64_t k, double t) {
    const auto kd = static_cast<double>(k);
    const double theta = t * std::log1p(1.0 / kd);
    const double half = std::sin(0.5 * theta);
    // 1 - e^{i theta} + i t / k = 2 sin^2(theta/2) + i (t/k - sin theta)
    const Complex inner(2.0 * half * half, t / kd - std::sin(theta));
    return term_value(1.0, std::log(kd), t) * inner;
}

AbelDecomposition abel_decompose(const CoeffSeq& coeff, unsigned top_block) {
    if (top_block >= 62) throw RangeError("top block too large");
    const std::uint64_t needed = (std::uint64_t{1} << (top_block + 1)) - 1;
    if (coeff.size() < needed)
        throw RangeError("abel_decompose: need at least " + std::to_string(needed) + " coefficients, got " +
                         std::to_string(coeff.size()));
    AbelDecomposition d;
    d.blocks.reserve(top_block + 1);
    for (unsigned n = 0; n <= top_block; ++n) {
        AbelBlock b;
        b.n = n;
        b.first = std::uint64_t{1} << n;
        const std::uint64_t last = (std::uint64_t{1} << (n + 1)) - 1;
        b.prefix.reserve(last - b.first + 1);
        Complex s{0.0, 0.0};
        for (std::uint64_t k = b.first; k <= last; ++k) {
            s += coeff[k - 1];
            b.prefix.push_back(s);
            b.l1 += std::abs(coeff[k - 1]);
        }
        d.blocks.push_back(std::move(b));
    }
    return d;
}

Complex abel_recompose(const AbelDecomposition& decomp, double t) {
    const Complex i_unit(0.0, 1.0);
    Complex total{0.0, 0.0};
    for (const auto& b : decomp.blocks) {
        Complex block{0.0, 0.0};
        for (std::uint64_t k = b.first; k <= b.last(); ++k) {
            const auto kd = static_cast<double>(k);
            const Complex diff = abel_remainder_kernel(k, t) - i_unit * (t / kd) * term_value(1.0, std::log(kd), t);
            block += b.prefix[k - b.first] * diff;
        }
        block += term_value(b.carleson_coefficient(), static_cast<double>(b.n + 1) * std::numbers::ln2, t);
        total += block;
    }
    return total;
}

double uk_ratio(std::uint64_t k, double t) {
    return std::abs(abel_remainder_kernel(k, t)) * static_cast<double>(k) * static_cast<double>(k) / (t + t * t);
}

UkProbeReport uk_bound_probe(std::uint64_t k_lo, std::uint64_t k_hi, double t_lo, double t_hi,
                             std::size_t k_points, std::size_t t_points) {
    if (k_lo < 2 || k_hi < k_lo) throw RangeError("uk_bound_probe: need 2 <= k_lo <= k_hi");
    if (!(t_lo > 0.0) || t_hi < t_lo) throw RangeError("uk_bound_probe: need 0 < t_lo <= t_hi");
    if (k_points == 0 || t_points == 0) throw RangeError("uk_bound_probe: empty probe");
    UkProbeReport rep;
    const double lk0 = std::log(static_cast<double>(k_lo));
    const double lk1 = std::log(static_cast<double>(k_hi));
    const double lt0 = std::log(t_lo);
    const double lt1 = std::log(t_hi);
    for (std::size_t i = 0; i < k_points; ++i) {
        const double frac = k_points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(k_points - 1);
        const auto k = static_cast<std::uint64_t>(std::llround(std::exp(lk0 + frac * (lk1 - lk0))));
        if (!rep.ks.empty() && rep.ks.back() == k) continue;
        double best = 0.0;
        for (std::size_t j = 0; j < t_points; ++j) {
            const double g = t_points == 1 ? 0.0 : static_cast<double>(j) / static_cast<double>(t_points - 1);
            best = std::max(best, uk_ratio(k, std::exp(lt0 + g * (lt1 - lt0))));
        }
        rep.ks.push_back(k);
        rep.max_ratio_per_k.push_back(best);
        rep.constant = std::max(rep.constant, best);
    }
    rep.bounded = std::isfinite(rep.constant) && rep.max_ratio_per_k.back() <= 1.5 * rep.max_ratio_per_k.front();
    return rep;
}

}  // namespace apstep
