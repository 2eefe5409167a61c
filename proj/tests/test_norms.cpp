#include <doctest.h>

#include <cmath>
#include <numbers>

#include "apstep/error.hpp"
#include "apstep/norms.hpp"
#include "apstep/random.hpp"
#include "support.hpp"

using namespace apstep;
using apstep::test::same_bits;

namespace {

StepanovParams small(double x_hi, double x_step = 0.05, double t_step = 1e-3) {
    StepanovParams p;
    p.x_hi = x_hi;
    p.x_step = x_step;
    p.t_step = t_step;
    return p;
}

// Frequencies with consecutive gaps in [sep, sep + 1) starting at 1.
APSeries separated_series(std::size_t n, double sep, CounterRng& rng) {
    std::vector<double> lam(n);
    double x = 1.0;
    for (auto& l : lam) {
        l = x;
        x += sep + rng.uniform();
    }
    CoeffSeq c(n);
    for (auto& z : c) z = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return {FrequencySeq::explicit_values(lam), c};
}

double l2(const CoeffSeq& c) {
    double s = 0.0;
    for (const auto& z : c) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("window L2 of simple functions") {
    const ComplexFunction one = [](double) { return Complex(1, 0); };
    for (auto q : {Quadrature::Trapezoid, Quadrature::Simpson})
        for (double x : {0.0, 0.37, -5.0, 123.25}) CHECK(window_l2(one, x, 1e-3, q) == 1.0);

    const ComplexFunction pure = [](double t) { return std::exp(Complex(0, 2.7 * t)); };
    CHECK(window_l2(pure, 1.3, 1e-3, Quadrature::Simpson) == doctest::Approx(1.0).epsilon(1e-13));

    const ComplexFunction two = [](double t) { return std::exp(Complex(0, t)) + std::exp(Complex(0, 2 * t)); };
    const double oracle = std::sqrt(2.0 + 2.0 * std::sin(1.0));  // int_0^1 (2 + 2 cos t) dt
    CHECK(std::abs(window_l2(two, 0.0, 1e-3, Quadrature::Simpson) - oracle) < 1e-6);
    CHECK(std::abs(window_l2(two, 0.0, 1e-3, Quadrature::Trapezoid) - oracle) < 1e-6);
    CHECK_THROWS_AS(window_l2(two, 0.0, 0.0, Quadrature::Simpson), RangeError);
}

TEST_CASE("Stepanov norm of constants and single terms") {
    for (Complex c : {Complex(3, 0), Complex(0, -0.5), Complex(0.6, 0.8)}) {
        const APSeries s{FrequencySeq::explicit_values({0}), {c}};
        const NormEstimate e = stepanov_norm(s, small(10));
        CHECK(e.value == doctest::Approx(std::abs(c)).epsilon(1e-14));
        CHECK(e.lower_bound_only);
    }
    const APSeries pure{FrequencySeq::explicit_values({4.2}), {1.0}};
    CHECK(stepanov_norm(pure, small(10)).value == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("Stepanov norm against a dense search of the window integral") {
    const APSeries s{FrequencySeq::explicit_values({1, 2}), {1.0, 1.0}};
    StepanovParams p = small(2 * std::numbers::pi, 0.01);
    const NormEstimate e = stepanov_norm(s, p);
    double best = 0.0;
    for (double x = 0.0; x <= 2 * std::numbers::pi; x += 1e-4)
        best = std::max(best, 2.0 + 2.0 * (std::sin(x + 1.0) - std::sin(x)));
    CHECK(std::abs(e.value - std::sqrt(best)) < 1e-4);
    CHECK(std::abs(e.argmax_x - (2 * std::numbers::pi - 0.5)) < 0.01);
    CHECK(e.x_lo == 0.0);
    CHECK(e.x_hi <= 2 * std::numbers::pi);
}

TEST_CASE("grid nesting is monotone") {
    CounterRng rng(3, 0);
    const APSeries s = separated_series(12, 0.3, rng);
    const double coarse = stepanov_norm(s, small(10, 0.1)).value;
    const double fine = stepanov_norm(s, small(10, 0.05)).value;
    const double wide = stepanov_norm(s, small(20, 0.05)).value;
    CHECK(fine >= coarse);
    CHECK(wide >= fine);
    StepanovParams shifted = small(20, 0.05);
    shifted.x_lo = -5.0;
    CHECK(stepanov_norm(s, shifted).value >= wide);
}

TEST_CASE("translation near-invariance for integer frequencies") {
    const APSeries s{FrequencySeq::explicit_values({0, 1, 3}), {1.0, 0.5, Complex(0, -0.3)}};
    const double period = 7.0;
    StepanovParams base = small(period, 1e-3, 1e-3);
    const double ref = stepanov_norm(s, base).value;
    for (double c : {2 * std::numbers::pi, 10.0, 3.3}) {
        StepanovParams p = base;
        p.x_lo = c;
        p.x_hi = c + period;
        CHECK(std::abs(stepanov_norm(s, p).value - ref) < 1e-6);
    }
}

TEST_CASE("scaling") {
    CounterRng rng(4, 0);
    const APSeries s = separated_series(9, 0.5, rng);
    const double base = stepanov_norm(s, small(10)).value;
    for (Complex c : {Complex(2, 0), Complex(-0.5, 0), Complex(0, 2)}) {
        APSeries scaled = s;
        for (auto& a : scaled.coeff) a *= c;
        CHECK(same_bits(stepanov_norm(scaled, small(10)).value, std::abs(c) * base));
    }
    APSeries odd = s;
    for (auto& a : odd.coeff) a *= Complex(0.3, -1.7);
    CHECK(stepanov_norm(odd, small(10)).value == doctest::Approx(std::abs(Complex(0.3, -1.7)) * base).epsilon(1e-13));
}

TEST_CASE("maximal field overload matches the direct maximal estimate") {
    CounterRng rng(5, 0);
    const APSeries s = separated_series(10, 0.2, rng);
    const NormEstimate direct = stepanov_norm_maximal(s, 10, small(5));
    const MaximalField f = maximal_field(s, SampleGrid(0.0, 6.0, 1e-3), 10);
    const NormEstimate via_field = stepanov_norm(f, 0.05, Quadrature::Simpson);
    CHECK(via_field.value == doctest::Approx(direct.value).epsilon(1e-12));
    CHECK(direct.value >= stepanov_norm(s, small(5)).value);
}

TEST_CASE("Besicovitch seminorm") {
    const APSeries pure{FrequencySeq::explicit_values({2}), {1.0}};
    const BesicovitchEstimate b1 = besicovitch_seminorm(pure, default_horizons());
    CHECK(b1.value == doctest::Approx(1.0).epsilon(1e-15));
    for (double v : b1.trace) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

    const APSeries pair{FrequencySeq::explicit_values({1, 1.5}), {3.0, Complex(0, 4)}};
    CHECK(std::abs(besicovitch_seminorm(pair, {1e3}).value - 5.0) <= 1e-2);

    CounterRng rng(6, 0);
    const APSeries s = separated_series(10, 1.0, rng);
    CHECK(std::abs(besicovitch_seminorm(s, {1e4}).value - l2(s.coeff)) <= 1e-3);
    CHECK_THROWS_AS(besicovitch_seminorm(s, {10, 5}), RangeError);
}

TEST_CASE("Fourier coefficients") {
    const APSeries one{FrequencySeq::explicit_values({3}), {2.0}};
    CHECK(std::abs(fourier_coefficient(one, 3, 1e4) - Complex(2, 0)) < 1e-3);
    CHECK(std::abs(fourier_coefficient(one, 5, 1e4)) <= 1e-4);

    const APSeries two{FrequencySeq::explicit_values({3, 3.5}), {2.0, Complex(0, 1)}};
    CHECK(std::abs(fourier_coefficient(two, 3, 1e4) - Complex(2, 0)) < 1e-3);

    const ComplexFunction f = [&](double t) { return partial_sum(two, 2, t); };
    for (double lam : {3.0, 3.5, 0.7})
        CHECK(std::abs(fourier_coefficient_numeric(f, lam, 50.0, 0.0, 3.5) - fourier_coefficient(two, lam, 50.0)) <
              1e-9);
    CHECK(coefficient_step(0.0, 0.0) == 1e-3);
    CHECK(coefficient_step(10.0, 89.0) == doctest::Approx(0.001));
    CHECK(coefficient_step(100.0, 899.0) == doctest::Approx(1e-4));
}

TEST_CASE("Bessel check") {
    const APSeries one{FrequencySeq::explicit_values({1}), {1.0}};
    const BesselReport r1 = bessel_check(one, 1e4, small(10));
    CHECK(r1.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.rhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.holds);

    const APSeries unit{FrequencySeq::explicit_values({1, 2, 3, 4, 5}), CoeffSeq(5, 1.0)};
    const BesselReport r5 = bessel_check(unit, 1e4, small(10));
    CHECK(r5.lhs == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(r5.holds);
    CHECK(r5.rhs >= r5.lhs);

    const APSeries zero{FrequencySeq::explicit_values({1, 2}), CoeffSeq(2, 0.0)};
    const BesselReport r0 = bessel_check(zero, 1e4, small(10));
    CHECK(r0.lhs == 0.0);
    CHECK(r0.rhs == 0.0);
    CHECK(r0.holds);

    CounterRng rng(8, 0);
    int held = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng() % 32;
        const APSeries s = separated_series(n, 0.5, rng);
        held += bessel_check(s, 1e4, small(20, 0.05, 2e-3)).holds ? 1 : 0;
    }
    CHECK(held == 200);
}

TEST_CASE("ties are merged before the Bessel sum") {
    const APSeries tied{FrequencySeq::explicit_values({1, 1, 2}), {1.0, 1.0, 1.0}};
    const APSeries merged = collapse_ties(tied);
    CHECK(merged.freq.values() == std::vector<double>{1, 2});
    CHECK(merged.coeff == CoeffSeq{2.0, 1.0});
    const BesselReport r = bessel_check(tied, 1e4, small(10));
    CHECK(r.lhs == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(r.holds);
}
