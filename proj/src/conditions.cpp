#include "apstep/conditions.hpp"

#include <cmath>

#include "apstep/error.hpp"

namespace apstep {

double BlockSums::total() const {
    double s = 0.0;
    for (const auto& [n, b] : entries) s += b;
    return s;
}

BlockSums block_sums(const FrequencySeq& freq, const CoeffSeq& coeff) {
    if (freq.size() != coeff.size()) throw InvariantError("frequency and coefficient lengths differ");
    BlockSums bs;
    for (std::size_t k = 0; k < freq.size(); ++k) {
        const double lambda = freq[k];
        if (!std::isfinite(lambda)) throw RangeError("non-finite frequency (term " + std::to_string(k + 1) + ")");
        if (lambda < 0.0) throw RangeError("negative frequency (term " + std::to_string(k + 1) + ")");
        bs.entries[static_cast<long long>(std::floor(lambda))] += std::abs(coeff[k]);
    }
    return bs;
}

BlockSums block_sums(const APSeries& series) { return block_sums(series.freq, series.coeff); }

namespace {

double block_power(double b, double p) {
    if (p == 1.0) return b;
    if (p == 2.0) return b * b;
    return std::pow(b, p);
}

void check_p(double p) {
    if (!(p >= 1.0 && p <= 2.0)) throw RangeError("exponent p must lie in [1, 2]");
}

double power_sum_below(const BlockSums& bs, double p, long long cutoff) {
    double s = 0.0;
    for (const auto& [n, b] : bs.entries) {
        if (n >= cutoff) break;
        s += block_power(b, p);
    }
    return s;
}

long long half_cutoff(const BlockSums& bs) {
    if (bs.empty()) return 0;
    const long long lo = bs.entries.begin()->first;
    const long long hi = bs.entries.rbegin()->first;
    return lo + (hi - lo + 1) / 2;
}

double hs_prefix(const CoeffSeq& coeff, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += static_cast<double>(k + 1) * std::norm(coeff[k]);
    return s;
}

}  // namespace

double power_sum(const BlockSums& bs, double p) {
    check_p(p);
    double s = 0.0;
    for (const auto& [n, b] : bs.entries) s += block_power(b, p);
    return s;
}

double hs_sum(const CoeffSeq& coeff) { return hs_prefix(coeff, coeff.size()); }

bool check_interpolation_pair(double p, double q, double tol) {
    if (!(tol >= 0.0)) throw RangeError("tolerance must be non-negative");
    if (!(p >= 1.0 && p <= 2.0 && q >= 1.0 && q <= 2.0)) return false;
    return std::abs(1.0 / p + 1.0 / q - 1.5) <= tol;
}

std::string_view to_string(Trend t) { return t == Trend::Diverging ? "diverging" : "converging"; }

Trend divergence_trend(double half_value, double value) {
    return (value - half_value) > 0.05 * value ? Trend::Diverging : Trend::Converging;
}

namespace {

ConditionEntry block_entry(std::string name, const BlockSums& bs, double p, std::string feeds) {
    ConditionEntry e;
    e.name = std::move(name);
    e.value = power_sum(bs, p);
    e.half_value = power_sum_below(bs, p, half_cutoff(bs));
    e.trend = divergence_trend(e.half_value, e.value);
    e.feeds = std::move(feeds);
    return e;
}

}  // namespace

ConditionReport condition_report(const APSeries& series, double p, double q, double tol) {
    check_p(p);
    check_p(q);
    ConditionReport r;
    r.p = p;
    r.q = q;
    const BlockSums bs = block_sums(series);
    auto w2 = block_entry("wiener_p2", bs, 2.0, "maximal inequality for sum a_n e^{i lambda_n t} (block l2 of B_n)");
    auto wp = block_entry("wiener_p", bs, p, "outer factor of the (p,q) interpolation inequality for dilates");
    ConditionEntry hs;
    hs.name = "hs";
    hs.value = hs_sum(series.coeff);
    hs.half_value = hs_prefix(series.coeff, series.size() / 2);
    hs.trend = divergence_trend(hs.half_value, hs.value);
    hs.feeds = "Dirichlet maximal inequality under sum n |a_n|^2 < infinity";
    r.wiener_p2 = w2.value;
    r.wiener_p = wp.value;
    r.trend = w2.trend;
    r.hs = hs.value;
    r.interp_valid = check_interpolation_pair(p, q, tol);
    r.conditions = {std::move(w2), std::move(wp), std::move(hs)};
    return r;
}

ConditionReport condition_report(const DilatedSeries& ds, double p, double q, double tol) {
    ConditionReport r = condition_report(APSeries{ds.outer_freq, ds.outer_coeff}, p, q, tol);
    r.dilated = true;
    const BlockSums inner_bs = block_sums(ds.inner);
    auto wq = block_entry("inner_wiener_q", inner_bs, q, "inner factor of the (p,q) interpolation inequality");
    r.inner_wiener_q = wq.value;
    r.inner_l1 = l1_norm(ds.inner.coeff);
    r.rhs_l1_dilated = r.inner_l1 * std::sqrt(r.wiener_p2);
    r.rhs_interp = std::pow(r.wiener_p, 1.0 / p) * std::pow(r.inner_wiener_q, 1.0 / q);
    r.conditions.push_back(std::move(wq));
    return r;
}

}  // namespace apstep
