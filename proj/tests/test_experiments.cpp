#include <doctest.h>

#include <cmath>
#include <numbers>

#include "apstep/error.hpp"
#include "apstep/experiments.hpp"
#include "support.hpp"

using namespace apstep;

TEST_CASE("Halasz experiment for a single term") {
    const TrialReport r = halasz_experiment({1}, 8, SampleGrid(0, 10, 0.5), 42, 1);
    CHECK(r.estimates == std::vector<double>{1.0});
    CHECK(r.ratios[0] == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(r.per_trial.size() == 8);
    CHECK(r.grid_count == 21);
}

TEST_CASE("Halasz experiment at t = 0 matches the random walk mean") {
    const std::size_t n = 10000;
    const TrialReport r = halasz_experiment({n}, 1000, SampleGrid(0, 0, 1), 11, 0);
    const double expected = std::sqrt(2.0 * n / std::numbers::pi);
    CHECK(std::abs(r.estimates[0] - expected) <= 0.1 * expected);
}

TEST_CASE("Halasz experiment is reproducible across worker counts") {
    const SampleGrid grid(0, 20, 0.01);
    const TrialReport a = halasz_experiment({16, 64, 256}, 12, grid, 42, 1);
    const TrialReport b = halasz_experiment({16, 64, 256}, 12, grid, 42, 3);
    CHECK(a == b);
    CHECK(a == halasz_experiment({16, 64, 256}, 12, grid, 42, 1));
    CHECK_FALSE(a == halasz_experiment({16, 64, 256}, 12, grid, 43, 1));
    for (std::size_t i = 0; i < a.n_values.size(); ++i) {
        CHECK(a.ratios[i] > 0.0);
        CHECK(a.ratios[i] <= 10.0);
    }
}

TEST_CASE("a finer or wider grid never lowers the estimate") {
    const TrialReport small = halasz_experiment({32, 128}, 10, SampleGrid(0, 10, 0.02), 5, 0);
    const TrialReport wide = halasz_experiment({32, 128}, 10, SampleGrid(0, 20, 0.02), 5, 0);
    const TrialReport fine = halasz_experiment({32, 128}, 10, SampleGrid(0, 10, 0.01), 5, 0);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(wide.estimates[i] >= small.estimates[i]);
        CHECK(fine.estimates[i] >= small.estimates[i]);
        for (std::size_t j = 0; j < 10; ++j) {
            CHECK(wide.per_trial[j][i] >= small.per_trial[j][i]);
            CHECK(fine.per_trial[j][i] >= small.per_trial[j][i]);
        }
    }
}

TEST_CASE("Halasz experiment rejects bad input") {
    CHECK_THROWS_AS(halasz_experiment({64, 16}, 4, SampleGrid(0, 1, 0.1), 1), InvariantError);
    CHECK_THROWS_AS(halasz_experiment({}, 4, SampleGrid(0, 1, 0.1), 1), RangeError);
    CHECK_THROWS_AS(halasz_experiment({16}, 0, SampleGrid(0, 1, 0.1), 1), RangeError);
}

TEST_CASE("prop27 coefficients") {
    const CoeffSeq a = prop27_coefficients(100, 42);
    REQUIRE(a.size() == 100);
    for (std::size_t n = 1; n <= 100; ++n) {
        const double mag = 1.0 / (static_cast<double>(n) * std::sqrt(std::log(static_cast<double>(n) + 1)));
        CHECK(std::abs(a[n - 1]) == doctest::Approx(mag).epsilon(1e-15));
        CHECK(a[n - 1].imag() == 0.0);
    }
    CHECK(a == prop27_coefficients(100, 42));
    CHECK_FALSE(a == prop27_coefficients(100, 43));
}

TEST_CASE("prop27 experiment") {
    Prop27Params params;
    params.max_block = 4;
    params.stepanov.x_hi = 5.0;
    const Prop27Report r = prop27_experiment(1 << 16, 42, params);
    CHECK(r.trend == Trend::Diverging);
    CHECK(r.wiener_increment > 0.05);
    CHECK(r.within_block_holds);
    REQUIRE(r.probes.size() == 16);
    CHECK(r.probes[0].n == 1);
    CHECK(r.probes[0].l1 == doctest::Approx(0.9572015617359809).epsilon(1e-14));
    CHECK(r.probes[0].bound == doctest::Approx(2.0));
    for (const auto& p : r.probes) CHECK(p.l1 <= p.bound);
    REQUIRE(r.blocks.size() == 4);
    for (const auto& b : r.blocks) {
        CHECK(b.stepanov > 0.0);
        CHECK(b.stepanov <= b.l1 * (1 + 1e-12));
        CHECK(b.l1 <= b.bound);
    }
    for (std::size_t i = 1; i < r.wiener_partial.size(); ++i) CHECK(r.wiener_partial[i] >= r.wiener_partial[i - 1]);
    CHECK(r.wiener_partial.back() == r.wiener_value);

    Prop27Params threaded = params;
    threaded.stepanov.workers = 3;
    CHECK(r == prop27_experiment(1 << 16, 42, threaded));
    CHECK_THROWS_AS(prop27_experiment(512, 42), RangeError);
}

TEST_CASE("inequality names") {
    for (Inequality i : {Inequality::Gen, Inequality::Dilated, Inequality::Interp})
        CHECK(inequality_from_string(to_string(i)) == i);
    CHECK_THROWS_AS(inequality_from_string("other"), ParseError);
}

TEST_CASE("a single exponential has constant one") {
    StepanovParams params{0.0, 5.0, 0.05, 1e-3, Quadrature::Simpson, 1};
    const APSeries one{FrequencySeq::explicit_values({2.5}), {Complex(0.6, 0.8)}};
    const ConstantTrial t = maximal_constant_trial(one, params);
    CHECK(t.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.rhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(t.ratio == doctest::Approx(1.0).epsilon(1e-12));

    const DilatedSeries d{{Complex(1, 0)}, FrequencySeq::explicit_values({1.0}),
                          APSeries{FrequencySeq::explicit_values({1.0}), {Complex(1, 0)}}};
    for (Inequality i : {Inequality::Dilated, Inequality::Interp}) {
        const ConstantTrial dt = maximal_constant_trial(d, i, 4.0 / 3.0, 4.0 / 3.0, params);
        CHECK(dt.ratio == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("random instances are valid and seeded") {
    const ConstantGenerator gen;
    const APSeries g = random_gen_instance(gen, 7, 3);
    CHECK(g.size() == gen.n_terms);
    CHECK(validate(g, Usage::Plain).empty());
    CHECK(g == random_gen_instance(gen, 7, 3));
    CHECK_FALSE(g == random_gen_instance(gen, 7, 4));
    for (double l : g.freq.values()) {
        CHECK(l >= 1.0);
        CHECK(l < 1.0 + gen.n_terms / 4.0);
    }
    const DilatedSeries d = random_dilated_instance(gen, 7, 3);
    CHECK(d.size() == gen.outer_terms);
    CHECK(d.inner.size() == gen.inner_terms);
    CHECK(validate(d).empty());
    for (double m : d.inner.freq.values()) {
        CHECK(m >= 1.0);
        CHECK(m < 3.0);
    }
}

TEST_CASE("constant estimates are deterministic") {
    ConstantGenerator gen;
    gen.n_terms = 32;
    gen.stepanov.x_hi = 4.0;
    for (Inequality i : {Inequality::Gen, Inequality::Dilated, Inequality::Interp}) {
        const ConstantReport a = maximal_constant_estimate(gen, i, 6, 7, 1);
        const ConstantReport b = maximal_constant_estimate(gen, i, 6, 7, 3);
        CHECK(a == b);
        REQUIRE(a.trials.size() == 6);
        double mx = 0.0;
        for (const auto& t : a.trials) {
            CHECK(t.ratio == t.lhs / t.rhs);
            mx = std::max(mx, t.ratio);
        }
        CHECK(a.max_ratio == mx);
        CHECK(a.max_ratio <= 50.0);
    }
}
