#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "apstep/conditions.hpp"
#include "apstep/error.hpp"
#include "apstep/evaluator.hpp"
#include "apstep/random.hpp"
#include "support.hpp"

using namespace apstep;
using apstep::test::same_bits;

namespace {

// Term-by-term sum in extended precision.
Complex oracle_sum(const APSeries& s, std::size_t n, double t) {
    long double re = 0.0L, im = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
        const long double ph = static_cast<long double>(s.freq[k]) * t;
        const long double c = std::cos(ph), sn = std::sin(ph);
        re += s.coeff[k].real() * c - s.coeff[k].imag() * sn;
        im += s.coeff[k].real() * sn + s.coeff[k].imag() * c;
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

APSeries random_series(std::size_t n, std::uint64_t seed, double spread) {
    CounterRng rng(seed, 0);
    std::vector<double> lam(n);
    double x = 0.0;
    for (auto& l : lam) l = (x += rng.uniform(0.0, spread));
    CoeffSeq c(n);
    for (auto& z : c) z = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return {FrequencySeq::explicit_values(lam), c};
}

}  // namespace

TEST_CASE("partial sums") {
    const APSeries one{FrequencySeq::explicit_values({1}), {1.0}};
    CHECK(partial_sum(one, 1, 0.0) == Complex(1, 0));
    CHECK(partial_sum(one, 0, 5.0) == Complex(0, 0));

    const APSeries two{FrequencySeq::explicit_values({1, 2}), {1.0, 1.0}};
    const Complex z = partial_sum(two, 2, std::numbers::pi);
    CHECK(std::abs(z) < 1e-15);

    const APSeries three{FrequencySeq::explicit_values({1, 2, 3}), {1.0, Complex(0, 1), -1.0}};
    CHECK(std::abs(partial_sum(three, 3, 0.7) - oracle_sum(three, 3, 0.7)) < 1e-12);
    CHECK_THROWS_AS(partial_sum(three, 4, 0.0), IndexError);
}

TEST_CASE("prefix consistency and periodicity") {
    const APSeries s = random_series(40, 5, 1.0);
    for (double t : {0.3, 2.0, 17.5})
        for (std::size_t n = 1; n <= s.size(); ++n)
            CHECK(same_bits(partial_sum(s, n, t), partial_sum(s, n - 1, t) + term_value(s.coeff[n - 1], s.freq[n - 1], t)));

    const APSeries integer{FrequencySeq::identity(25), random_series(25, 6, 1.0).coeff};
    for (double t : {0.1, 1.3, 4.0})
        CHECK(std::abs(partial_sum(integer, 25, t + 2 * std::numbers::pi) - partial_sum(integer, 25, t)) < 1e-10);
}

TEST_CASE("maximal field") {
    const APSeries single{FrequencySeq::explicit_values({2.5}), {Complex(0.6, -0.8)}};
    const MaximalField f1 = maximal_field(single, SampleGrid(0, 10, 0.1), 1);
    for (double m : f1.max_abs) CHECK(m == doctest::Approx(1.0).epsilon(1e-15));

    const APSeries tele{FrequencySeq::explicit_values({1, 1}), {1.0, -1.0}};
    const MaximalField f2 = maximal_field(tele, SampleGrid(0, 10, 0.1), 2);
    for (std::size_t i = 0; i < f2.max_abs.size(); ++i) {
        CHECK(f2.max_abs[i] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(f2.final_sum[i] == Complex(0, 0));
    }

    const APSeries s = random_series(64, 9, 0.7);
    const SampleGrid grid(0, 10, 0.01);
    const MaximalField f = maximal_field(s, grid, 64, 3);
    for (std::size_t i = 0; i < grid.count(); i += 7) {
        double brute = 0.0;
        for (std::size_t n = 1; n <= 64; ++n) brute = std::max(brute, std::abs(oracle_sum(s, n, grid[i])));
        CHECK(f.max_abs[i] == doctest::Approx(brute).epsilon(1e-12));
        CHECK(f.max_abs[i] >= std::abs(f.final_sum[i]));
        CHECK(f.max_abs[i] >= std::abs(s.coeff[0]));
    }
    const MaximalField serial = maximal_field(s, grid, 64, 1);
    CHECK(same_bits(serial.max_abs, f.max_abs));
}

TEST_CASE("csv output has the mandatory header") {
    const APSeries s{FrequencySeq::identity(2), {1.0, 1.0}};
    std::ostringstream out;
    write_csv(out, maximal_field(s, SampleGrid(0, 1, 0.5), 2));
    CHECK(out.str().rfind("t,re,im,maxabs\n0,2,0,2\n", 0) == 0);
}

TEST_CASE("dirichlet partial sums") {
    CHECK(dirichlet_partial_sum({1.0}, 1, 3.7) == Complex(1, 0));
    const Complex z = dirichlet_partial_sum({0.0, 1.0}, 2, std::numbers::pi / std::numbers::ln2);
    CHECK(z.real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(z.imag()) < 1e-14);

    const CoeffSeq a = random_series(100, 12, 1.0).coeff;
    const APSeries as_series{FrequencySeq::natural_log(100), a};
    for (int i = 0; i <= 50; ++i) {
        const double t = 0.2 * i;
        CHECK(same_bits(dirichlet_partial_sum(a, 100, t), partial_sum(as_series, 100, t)));
        CHECK(std::abs(dirichlet_partial_sum(a, 100, t) - oracle_sum(as_series, 100, t)) < 1e-12);
    }
}

TEST_CASE("dilated evaluation") {
    DilatedSeries ds;
    ds.outer_coeff = {1.0};
    ds.outer_freq = FrequencySeq::explicit_values({2});
    ds.inner = {FrequencySeq::explicit_values({1}), {1.0}};
    const DilatedValue v = dilated_eval(ds, 1, 0.4, 1);
    CHECK(std::abs(v.value - std::exp(Complex(0, 0.8))) < 1e-15);
    CHECK(v.tail_bound == 0.0);

    DilatedSeries d2;
    d2.outer_coeff = {1.0, 1.0};
    d2.outer_freq = FrequencySeq::explicit_values({1, 2});
    d2.inner = {FrequencySeq::explicit_values({1, 2}), {1.0, 0.5}};
    CHECK(dilated_eval(d2, 2, 0.0, 2).value == Complex(3, 0));
    CHECK(dilated_eval(d2, 2, 0.0, 1).tail_bound == doctest::Approx(2 * 0.5));

    const APSeries outer = random_series(12, 21, 1.0);
    const APSeries inner = random_series(7, 22, 0.5);
    DilatedSeries r{outer.coeff, FrequencySeq::explicit_values([&] {
                        auto v = outer.freq.values();
                        for (auto& x : v) x += 1.0;
                        return v;
                    }()),
                    APSeries{FrequencySeq::explicit_values([&] {
                                 auto v = inner.freq.values();
                                 for (auto& x : v) x += 1.0;
                                 return v;
                             }()),
                             inner.coeff}};
    for (double t : {0.0, 0.37, 3.1}) {
        long double re = 0.0L, im = 0.0L;
        double best = 0.0;
        for (std::size_t k = 0; k < r.size(); ++k) {
            for (std::size_t j = 0; j < r.inner.size(); ++j) {
                const long double ph = static_cast<long double>(r.inner.freq[j]) * r.outer_freq[k] * t;
                const Complex ab = r.outer_coeff[k] * r.inner.coeff[j];
                re += ab.real() * std::cos(ph) - ab.imag() * std::sin(ph);
                im += ab.real() * std::sin(ph) + ab.imag() * std::cos(ph);
            }
            best = std::max(best, std::hypot(static_cast<double>(re), static_cast<double>(im)));
        }
        const Complex got = dilated_eval(r, r.size(), t, r.inner.size()).value;
        CHECK(std::abs(got - Complex(static_cast<double>(re), static_cast<double>(im))) < 1e-12);
        CHECK(dilated_maximal_abs(r, r.size(), t, r.inner.size()) == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("sawtooth and sine series") {
    CHECK(sawtooth_psi(0.25) == -0.25);
    CHECK(sawtooth_psi(3.0) == -0.5);
    CHECK(sawtooth_psi(-0.25) == 0.25);
    for (std::size_t j : {1, 10, 1000}) {
        CHECK(std::abs(psi_series_partial(0.5, j)) < 1e-12);
        CHECK(psi_series_partial(0.0, j) == 0.0);
    }
    CHECK(std::abs(psi_series_partial(0.25, 10000) - sawtooth_psi(0.25)) < 1e-2);
    // The unnormalized series tends to -pi psi(x): +pi/4 at x = 1/4, the opposite sign of psi.
    CHECK(psi_series_unnormalized(0.25, 10000) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-3));
    for (double x : {0.1, 0.3, 0.77})
        CHECK(std::abs(psi_series_partial(x, 20000) - sawtooth_psi(x)) < 1e-3);
}

TEST_CASE("phi alpha") {
    CHECK(phi_alpha(0.5, 1.0, 4) == -0.375);
    double zeta_part = 0.0;
    for (int k = 1; k <= 50; ++k) zeta_part += std::pow(k, -0.75);
    CHECK(phi_alpha(3.0, 0.75, 50) == doctest::Approx(-0.5 * zeta_part).epsilon(1e-14));

    CounterRng rng(31, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const double x = rng.uniform(-10, 10);
        long double oracle = 0.0L;
        for (int k = 1; k <= 1000; ++k) {
            const long double kx = static_cast<long double>(k) * x;
            oracle += (kx - std::floor(kx) - 0.5L) / std::pow(static_cast<long double>(k), 0.75L);
        }
        CHECK(phi_alpha(x, 0.75, 1000) == doctest::Approx(static_cast<double>(oracle)).epsilon(1e-12));
    }
    CHECK(phi_alpha_in_range(1.0));
    CHECK(phi_alpha_in_range(0.75));
    CHECK_FALSE(phi_alpha_in_range(0.5));
}

TEST_CASE("modulus invariance of the Wiener right-hand side") {
    const APSeries s = random_series(50, 40, 0.4);
    APSeries rotated = s;
    CounterRng rng(41, 0);
    const Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (auto& a : rotated.coeff) a *= quarter[rng() % 4];
    CHECK(same_bits(power_sum(block_sums(s), 2.0), power_sum(block_sums(rotated), 2.0)));
}
