#include <doctest.h>

#include <cmath>

#include "apstep/conditions.hpp"
#include "apstep/error.hpp"
#include "apstep/experiments.hpp"
#include "apstep/random.hpp"
#include "support.hpp"

using namespace apstep;
using apstep::test::same_bits;

namespace {

APSeries dyadic_ones() { return {FrequencySeq::log2(8), CoeffSeq(8, 1.0)}; }

double entry(const ConditionReport& r, const std::string& name, bool half = false) {
    for (const auto& c : r.conditions)
        if (c.name == name) return half ? c.half_value : c.value;
    FAIL("missing condition " << name);
    return 0.0;
}

}  // namespace

TEST_CASE("block sums on log2 frequencies") {
    const BlockSums bs = block_sums(dyadic_ones());
    CHECK(bs.entries == std::map<long long, double>{{0, 1}, {1, 2}, {2, 4}, {3, 1}});
    CHECK(power_sum(bs, 2.0) == 22.0);
    CHECK(power_sum(bs, 1.0) == 8.0);
}

TEST_CASE("half-open blocks") {
    const APSeries s{FrequencySeq::explicit_values({1.0, 1.999, 2.0}), CoeffSeq(3, 1.0)};
    CHECK(block_sums(s).entries == std::map<long long, double>{{1, 2}, {2, 1}});
    CHECK(block_sums(APSeries{}).empty());
    CHECK_THROWS_AS(block_sums(APSeries{FrequencySeq::explicit_values({-1.0}), {1.0}}), RangeError);
}

TEST_CASE("power sums") {
    BlockSums single;
    single.entries[4] = 0.7;
    for (double p : {1.0, 1.25, 4.0 / 3.0, 2.0}) CHECK(power_sum(single, p) == doctest::Approx(std::pow(0.7, p)));
    CHECK_THROWS_AS(power_sum(single, 0.5), RangeError);
    CHECK_THROWS_AS(power_sum(single, 2.5), RangeError);
}

TEST_CASE("hs sum") {
    CHECK(hs_sum({1.0, 0.5, 1.0 / 3.0}) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
    CHECK(hs_sum(CoeffSeq(5, 0.0)) == 0.0);

    CoeffSeq sparse(1 << 10, 0.0);
    std::vector<double> b{0.5, -1.0, 0.25, 2.0, 0.125, 1.5, -0.75, 0.3, 0.9, -0.2, 0.6};
    double loop = 0.0;
    for (std::size_t j = 0; j < b.size() - 1; ++j) {
        sparse[(std::size_t{1} << j) - 1] = b[j];
        loop += static_cast<double>(std::size_t{1} << j) * b[j] * b[j];
    }
    CHECK(hs_sum(sparse) == doctest::Approx(loop).epsilon(1e-15));
}

TEST_CASE("interpolation pairs") {
    CHECK(check_interpolation_pair(4.0 / 3.0, 4.0 / 3.0, 1e-12));
    CHECK(check_interpolation_pair(1.0, 2.0, 0.0));
    CHECK(check_interpolation_pair(2.0, 1.0, 0.0));
    CHECK_FALSE(check_interpolation_pair(2.0, 2.0, 1e-6));
    CHECK_FALSE(check_interpolation_pair(0.9, 4.0, 1.0));
    CHECK(check_interpolation_pair(1.3333333, 1.3333333, 1e-6));
    CHECK_FALSE(check_interpolation_pair(1.3333333, 1.3333333, 1e-9));
}

TEST_CASE("condition reports and trends") {
    CoeffSeq inv_sq(200);
    for (std::size_t n = 1; n <= inv_sq.size(); ++n) inv_sq[n - 1] = 1.0 / static_cast<double>(n * n);
    const ConditionReport conv = condition_report(APSeries{FrequencySeq::identity(200), inv_sq}, 2.0, 2.0);
    CHECK(std::isfinite(conv.wiener_p2));
    CHECK(std::isfinite(conv.hs));
    CHECK(conv.trend == Trend::Converging);
    for (const auto& c : conv.conditions) CHECK(c.trend == Trend::Converging);

    const std::size_t n_max = std::size_t{1} << 16;
    const ConditionReport div =
        condition_report(APSeries{FrequencySeq::log2(n_max), prop27_coefficients(n_max, 42)}, 2.0, 2.0);
    CHECK(div.trend == Trend::Diverging);
    CHECK(entry(div, "wiener_p2") > 1.05 * entry(div, "wiener_p2", true));

    const ConditionReport zero = condition_report(APSeries{FrequencySeq::identity(10), CoeffSeq(10, 0.0)}, 2, 2);
    CHECK(zero.wiener_p2 == 0.0);
    CHECK(zero.hs == 0.0);
    for (const auto& c : zero.conditions) CHECK(c.trend == Trend::Converging);
    CHECK(zero.block_convention == "half-open [n, n+1)");
}

TEST_CASE("dilated report carries both right-hand sides") {
    DilatedSeries ds;
    ds.outer_freq = FrequencySeq::explicit_values({1, 1.5, 2.25});
    ds.outer_coeff = {1.0, 0.5, Complex(0, 0.25)};
    ds.inner = {FrequencySeq::explicit_values({1, 2}), {1.0, -0.5}};
    const ConditionReport r = condition_report(ds, 4.0 / 3.0, 4.0 / 3.0);
    CHECK(r.dilated);
    CHECK(r.interp_valid);
    CHECK(r.inner_l1 == doctest::Approx(1.5));
    // B(alpha) = {1.5, 0.25}, B(beta) = {1, 0.5}
    CHECK(r.rhs_l1_dilated == doctest::Approx(1.5 * std::sqrt(1.5 * 1.5 + 0.25 * 0.25)));
    const double p = 4.0 / 3.0;
    const double outer = std::pow(std::pow(1.5, p) + std::pow(0.25, p), 1 / p);
    const double inner = std::pow(1.0 + std::pow(0.5, p), 1 / p);
    CHECK(r.rhs_interp == doctest::Approx(outer * inner));
}

TEST_CASE("partition, modulus-only and monotonicity properties") {
    CounterRng rng(17, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        std::vector<double> lam(n);
        double x = rng.uniform(0, 3);
        for (auto& l : lam) l = (x += rng.uniform(0, 0.8));
        CoeffSeq a(n);
        for (auto& z : a) z = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const APSeries s{FrequencySeq::explicit_values(lam), a};

        const BlockSums bs = block_sums(s);
        CHECK(bs.total() == doctest::Approx(l1_norm(a)).epsilon(1e-12));

        APSeries rotated = s;
        const Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        for (auto& z : rotated.coeff) z *= quarter[rng() % 4];
        const ConditionReport r0 = condition_report(s, 1.5, 1.5);
        const ConditionReport r1 = condition_report(rotated, 1.5, 1.5);
        CHECK(same_bits(r0.wiener_p2, r1.wiener_p2));
        CHECK(same_bits(r0.wiener_p, r1.wiener_p));
        CHECK(same_bits(r0.hs, r1.hs));

        lam.push_back(x + rng.uniform(0, 2));
        a.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const BlockSums longer = block_sums(APSeries{FrequencySeq::explicit_values(lam), a});
        for (double p : {1.0, 1.5, 2.0}) CHECK(power_sum(longer, p) >= power_sum(bs, p));
    }
}

TEST_CASE("log2 blocks reproduce the dyadic Wiener sum exactly") {
    CounterRng rng(18, 0);
    const std::size_t n = 4095;
    CoeffSeq a(n);
    for (auto& z : a) z = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    double dyadic = 0.0;
    for (std::size_t lo = 1; lo <= n; lo *= 2) {
        double b = 0.0;
        for (std::size_t k = lo; k < 2 * lo && k <= n; ++k) b += std::abs(a[k - 1]);
        dyadic += b * b;
    }
    CHECK(same_bits(power_sum(block_sums(APSeries{FrequencySeq::log2(n), a}), 2.0), dyadic));
}
