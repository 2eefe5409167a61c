#include "apstep/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "apstep/error.hpp"
#include "apstep/parallel.hpp"

namespace apstep {

DifferenceMultiset pairwise_differences(const FrequencySeq& freq) {
    const std::size_t n = freq.size();
    if (n < 2) throw RangeError("pairwise differences need at least 2 frequencies, got " + std::to_string(n));
    DifferenceMultiset dm;
    dm.diffs.reserve(n * (n - 1));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            if (k != l) dm.diffs.push_back(freq[k] - freq[l]);
    std::sort(dm.diffs.begin(), dm.diffs.end());
    dm.prefix_d.assign(dm.diffs.size() + 1, 0.0L);
    dm.prefix_d2.assign(dm.diffs.size() + 1, 0.0L);
    for (std::size_t i = 0; i < dm.diffs.size(); ++i) {
        const long double d = dm.diffs[i];
        dm.prefix_d[i + 1] = dm.prefix_d[i] + d;
        dm.prefix_d2[i + 1] = dm.prefix_d2[i] + d * d;
    }
    return dm;
}

double triangle_kernel(double x) { return std::max(0.0, 1.0 - std::abs(x)); }

double quadruple_sum_naive(const FrequencySeq& freq) {
    const std::size_t n = freq.size();
    if (n > kNaiveQuadrupleLimit)
        throw RangeError("naive quadruple sum is limited to N <= " + std::to_string(kNaiveQuadrupleLimit) +
                         ", got " + std::to_string(n));
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (k == l) continue;
            const double d = freq[k] - freq[l];
            for (std::size_t k2 = 0; k2 < n; ++k2)
                for (std::size_t l2 = 0; l2 < n; ++l2) {
                    if (k2 == l2 || (k2 == k && l2 == l)) continue;
                    const double w = triangle_kernel(d - (freq[k2] - freq[l2]));
                    total += w * w;
                }
        }
    return total;
}

double quadruple_sum_fast(const FrequencySeq& freq, unsigned workers) {
    return quadruple_sum_fast(pairwise_differences(freq), workers);
}

double quadruple_sum_fast(const DifferenceMultiset& dm, unsigned workers) {
    const auto& d = dm.diffs;
    const std::size_t m = d.size();
    constexpr std::size_t kChunk = 4096;
    const std::size_t n_chunks = (m + kChunk - 1) / kChunk;
    std::vector<long double> partial(n_chunks, 0.0L);
    parallel_for(n_chunks, workers, [&](std::size_t cb, std::size_t ce) {
        for (std::size_t c = cb; c < ce; ++c) {
            long double acc = 0.0L;
            const std::size_t end = std::min(m, (c + 1) * kChunk);
            for (std::size_t i = c * kChunk; i < end; ++i) {
                const double di = d[i];
                // (1 - |d_i - d_j|)^2 over d_j in (d_i - 1, d_i] and (d_i, d_i + 1)
                const std::size_t lo = static_cast<std::size_t>(
                    std::upper_bound(d.begin(), d.end(), di - 1.0) - d.begin());
                const std::size_t mid = static_cast<std::size_t>(
                    std::upper_bound(d.begin(), d.end(), di) - d.begin());
                const std::size_t hi = static_cast<std::size_t>(
                    std::lower_bound(d.begin(), d.end(), di + 1.0) - d.begin());
                const long double cl = 1.0L - di;
                const long double nl = static_cast<long double>(mid - lo);
                const long double s1l = dm.prefix_d[mid] - dm.prefix_d[lo];
                const long double s2l = dm.prefix_d2[mid] - dm.prefix_d2[lo];
                acc += nl * cl * cl + 2.0L * cl * s1l + s2l;
                if (hi > mid) {
                    const long double cr = 1.0L + di;
                    const long double nr = static_cast<long double>(hi - mid);
                    const long double s1r = dm.prefix_d[hi] - dm.prefix_d[mid];
                    const long double s2r = dm.prefix_d2[hi] - dm.prefix_d2[mid];
                    acc += nr * cr * cr - 2.0L * cr * s1r + s2r;
                }
            }
            partial[c] = acc;
        }
    });
    long double total = 0.0L;
    for (long double p : partial) total += p;
    total -= static_cast<long double>(m);
    return std::max(0.0, static_cast<double>(total));
}

SidonResult sidon_check(const FrequencySeq& freq) {
    const std::size_t n = freq.size();
    std::vector<long long> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = freq[i];
        if (!std::isfinite(x) || x != std::floor(x) || std::abs(x) > 0x1.0p52)
            throw RangeError("sidon_check needs integer values; term " + std::to_string(i + 1) + " is " +
                             std::to_string(x));
        v[i] = static_cast<long long>(x);
        if (i > 0 && v[i] <= v[i - 1])
            throw InvariantError("sidon_check needs strictly increasing values (term " + std::to_string(i + 1) + ")");
    }
    std::unordered_map<long long, std::pair<std::size_t, std::size_t>> seen;
    seen.reserve(n * (n + 1) / 2);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            const long long s = v[k] + v[l];
            auto [it, inserted] = seen.try_emplace(s, k, l);
            if (!inserted) {
                SidonResult r;
                r.is_sidon = false;
                r.witness = SidonWitness{it->second.first + 1, it->second.second + 1, k + 1, l + 1, s};
                return r;
            }
        }
    return {};
}

std::size_t block_count_bound(const FrequencySeq& freq) {
    std::unordered_map<double, std::size_t> counts;
    std::size_t best = 0;
    for (double x : freq.values()) best = std::max(best, ++counts[std::floor(x)]);
    return best;
}

double tau_density(double t) {
    if (std::abs(t) < 1e-6) return (0.5 - t * t / 24.0) / std::numbers::pi;
    const double s = std::sin(0.5 * t);
    return 2.0 * s * s / (std::numbers::pi * t * t);
}

namespace {

// Simpson on [a, b] with an even number of panels of width <= step.
void simpson_period(double x, double a, double b, double step, long double& re, long double& im) {
    auto panels = static_cast<std::size_t>(std::ceil((b - a) / step));
    if (panels < 2) panels = 2;
    if (panels % 2 != 0) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    long double sc = 0.0L;
    long double ss = 0.0L;
    for (std::size_t j = 0; j <= panels; ++j) {
        const double t = j == panels ? b : a + static_cast<double>(j) * h;
        const double w = (j == 0 || j == panels) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        const double tau = tau_density(t);
        sc += w * std::cos(x * t) * tau;
        ss += w * std::sin(x * t) * tau;
    }
    re += sc * h / 3.0L;
    im += ss * h / 3.0L;
}

}  // namespace

TauTransform tau_fourier_numeric(double x, double horizon, double step) {
    if (!(horizon >= 1e3)) throw RangeError("tau_fourier_numeric needs horizon >= 1e3");
    if (!(step > 0.0) || !std::isfinite(step)) throw RangeError("tau_fourier_numeric needs a positive step");
    const double period = 2.0 * std::numbers::pi;
    long double re = 0.0L;
    long double im = 0.0L;
    for (double a = 0.0; a < horizon; a += period) {
        const double b = std::min(horizon, a + period);
        simpson_period(x, a, b, step, re, im);
        simpson_period(x, -b, -a, step, re, im);
    }
    return {static_cast<double>(re), static_cast<double>(im), 2.0 / (std::numbers::pi * horizon)};
}

double exp_quadruple_inner(const FrequencySeq& freq, std::size_t k, std::size_t l, std::size_t k2, std::size_t l2) {
    const std::size_t n = freq.size();
    for (std::size_t idx : {k, l, k2, l2})
        if (idx == 0 || idx > n)
            throw IndexError("index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    return triangle_kernel((freq.at1(k) - freq.at1(l)) - (freq.at1(k2) - freq.at1(l2)));
}

namespace {

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

}  // namespace

BellmanBoasReport bellman_boas_check(const std::vector<Complex>& x, const std::vector<std::vector<Complex>>& ys) {
    if (ys.empty()) throw RangeError("bellman_boas_check needs at least one y");
    for (std::size_t i = 0; i < ys.size(); ++i)
        if (ys[i].size() != x.size())
            throw InvariantError("dimension mismatch: y_" + std::to_string(i + 1) + " has " +
                                 std::to_string(ys[i].size()) + " entries, x has " + std::to_string(x.size()));
    BellmanBoasReport r;
    double x_sq = 0.0;
    for (const auto& c : x) x_sq += std::norm(c);
    double cross_sq = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        r.lhs += std::norm(inner(x, ys[i]));
        r.max_norm_sq = std::max(r.max_norm_sq, inner(ys[i], ys[i]).real());
        for (std::size_t j = 0; j < ys.size(); ++j)
            if (i != j) cross_sq += std::norm(inner(ys[i], ys[j]));
    }
    r.cross = std::sqrt(cross_sq);
    r.rhs = x_sq * (r.max_norm_sq + r.cross);
    r.holds = r.lhs <= r.rhs * (1.0 + 1e-12);
    return r;
}

}  // namespace apstep
