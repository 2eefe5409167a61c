#include "apstep/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "apstep/error.hpp"
#include "apstep/evaluator.hpp"
#include "apstep/parallel.hpp"
#include "apstep/random.hpp"

namespace apstep {

TrialReport halasz_experiment(const std::vector<std::size_t>& n_values, std::size_t trials, const SampleGrid& grid,
                              std::uint64_t seed, unsigned workers) {
    if (trials == 0) throw RangeError("halasz_experiment needs trials >= 1");
    if (n_values.empty()) throw RangeError("halasz_experiment needs at least one n");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] == 0) throw RangeError("n values must be positive");
        if (i > 0 && n_values[i] <= n_values[i - 1]) throw InvariantError("n values must be strictly increasing");
    }
    const std::size_t n_max = n_values.back();
    std::vector<double> log_k(n_max);
    for (std::size_t k = 0; k < n_max; ++k) log_k[k] = std::log(static_cast<double>(k + 1));

    TrialReport rep;
    rep.seed = seed;
    rep.n_values = n_values;
    rep.grid_t0 = grid.t0();
    rep.grid_t1 = grid.t1();
    rep.grid_step = grid.step();
    rep.grid_count = grid.count();
    rep.trials = trials;
    rep.per_trial.assign(trials, std::vector<double>(n_values.size(), 0.0));

    parallel_for(trials, workers, [&](std::size_t begin, std::size_t end) {
        std::vector<double> eps(n_max);
        for (std::size_t j = begin; j < end; ++j) {
            CounterRng rng(seed, j);
            for (auto& e : eps) e = rng.rademacher();
            auto& best = rep.per_trial[j];
            for (std::size_t g = 0; g < grid.count(); ++g) {
                const double t = grid[g];
                Complex s{0.0, 0.0};
                std::size_t next = 0;
                for (std::size_t k = 0; k < n_max; ++k) {
                    s += term_value(eps[k], log_k[k], t);
                    if (k + 1 == n_values[next]) {
                        best[next] = std::max(best[next], std::abs(s));
                        ++next;
                    }
                }
            }
        }
    });

    for (std::size_t i = 0; i < n_values.size(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < trials; ++j) sum += rep.per_trial[j][i];
        const double est = sum / static_cast<double>(trials);
        const auto n = static_cast<double>(n_values[i]);
        rep.estimates.push_back(est);
        rep.ratios.push_back(est * std::log(n + 1.0) / n);
    }
    return rep;
}

CoeffSeq prop27_coefficients(std::size_t n_max, std::uint64_t seed) {
    CounterRng rng(seed, 0);
    CoeffSeq a(n_max);
    for (std::size_t k = 0; k < n_max; ++k) {
        const double n = static_cast<double>(k + 1);
        a[k] = rng.rademacher() / (n * std::sqrt(std::log(n + 1.0)));
    }
    return a;
}

Prop27Report prop27_experiment(std::size_t n_max, std::uint64_t seed, const Prop27Params& params) {
    if (n_max < 1024) throw RangeError("prop27_experiment needs n_max >= 2^10");
    if ((std::size_t{2} << params.max_block) > n_max)
        throw RangeError("prop27_experiment: max_block needs 2^(max_block+1) <= n_max");
    Prop27Report rep;
    rep.seed = seed;
    rep.n_max = n_max;
    rep.stepanov = params.stepanov;

    const CoeffSeq a = prop27_coefficients(n_max, seed);
    const APSeries dyadic{FrequencySeq::log2(n_max), a};
    const BlockSums bs = block_sums(dyadic);
    double running = 0.0;
    for (const auto& [n, b] : bs.entries) {
        running += b * b;
        rep.wiener_partial.push_back(running);
    }
    const ConditionReport cr = condition_report(dyadic, 2.0, 2.0);
    for (const auto& c : cr.conditions)
        if (c.name == "wiener_p2") {
            rep.wiener_value = c.value;
            rep.wiener_half = c.half_value;
            rep.trend = c.trend;
        }
    rep.wiener_increment = rep.wiener_value > 0.0 ? (rep.wiener_value - rep.wiener_half) / rep.wiener_value : 0.0;

    rep.within_block_holds = true;
    for (unsigned n = 1; n <= params.max_probe; ++n) {
        Prop27Probe pr;
        pr.n = n;
        const std::uint64_t lo = std::uint64_t{1} << n;
        for (std::uint64_t l = lo; l <= 2 * lo; ++l) {
            const auto ld = static_cast<double>(l);
            pr.l1 += 1.0 / (ld * std::sqrt(std::log(ld + 1.0)));
        }
        pr.bound = 2.0 / std::sqrt(static_cast<double>(n));
        pr.holds = pr.l1 <= pr.bound;
        rep.within_block_holds = rep.within_block_holds && pr.holds;
        rep.probes.push_back(pr);
    }

    for (unsigned j = 1; j <= params.max_block; ++j) {
        const std::size_t lo = std::size_t{1} << j;  // terms lo+1 .. 2 lo
        std::vector<double> lambda;
        CoeffSeq coeff;
        Prop27Block blk;
        blk.j = j;
        for (std::size_t k = lo + 1; k <= 2 * lo; ++k) {
            lambda.push_back(std::log(static_cast<double>(k)));
            coeff.push_back(a[k - 1]);
            blk.l1 += std::abs(a[k - 1]);
        }
        const APSeries diff{FrequencySeq::explicit_values(std::move(lambda)), std::move(coeff)};
        blk.stepanov = stepanov_norm(diff, params.stepanov).value;
        blk.bound = 2.0 / std::sqrt(static_cast<double>(j));
        rep.blocks.push_back(blk);
    }
    return rep;
}

std::string_view to_string(Inequality ineq) {
    switch (ineq) {
        case Inequality::Gen: return "gen";
        case Inequality::Dilated: return "dilated";
        case Inequality::Interp: return "interp";
    }
    return "gen";
}

Inequality inequality_from_string(std::string_view name) {
    if (name == "gen") return Inequality::Gen;
    if (name == "dilated") return Inequality::Dilated;
    if (name == "interp") return Inequality::Interp;
    throw ParseError("unknown inequality '" + std::string(name) + "' (expected gen, dilated or interp)", 0, "inequality");
}

namespace {

std::vector<double> sorted_uniform(CounterRng& rng, std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform(lo, hi);
    std::sort(v.begin(), v.end());
    return v;
}

CoeffSeq uniform_coefficients(CounterRng& rng, std::size_t n) {
    CoeffSeq c(n);
    for (auto& z : c) {
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        z = {re, im};
    }
    return c;
}

void require_finite_ratio(const ConstantTrial& t) {
    if (!std::isfinite(t.lhs) || !std::isfinite(t.rhs) || !(t.rhs > 0.0))
        throw RangeError("inadmissible instance: condition value is not a positive finite number");
}

}  // namespace

APSeries random_gen_instance(const ConstantGenerator& gen, std::uint64_t seed, std::uint64_t trial) {
    CounterRng rng(seed, trial);
    auto lambda = sorted_uniform(rng, gen.n_terms, 1.0, 1.0 + static_cast<double>(gen.n_terms) / 4.0);
    auto coeff = uniform_coefficients(rng, gen.n_terms);
    return {FrequencySeq::explicit_values(std::move(lambda)), std::move(coeff)};
}

DilatedSeries random_dilated_instance(const ConstantGenerator& gen, std::uint64_t seed, std::uint64_t trial) {
    CounterRng rng(seed, trial);
    DilatedSeries ds;
    ds.outer_freq = FrequencySeq::explicit_values(
        sorted_uniform(rng, gen.outer_terms, 1.0, 1.0 + static_cast<double>(gen.outer_terms) / 4.0));
    ds.outer_coeff = uniform_coefficients(rng, gen.outer_terms);
    ds.inner.freq = FrequencySeq::explicit_values(sorted_uniform(rng, gen.inner_terms, 1.0, 3.0));
    ds.inner.coeff = uniform_coefficients(rng, gen.inner_terms);
    return ds;
}

ConstantTrial maximal_constant_trial(const APSeries& series, const StepanovParams& params) {
    require_valid(series, Usage::Plain);
    ConstantTrial t;
    t.rhs = std::sqrt(power_sum(block_sums(series), 2.0));
    t.lhs = stepanov_norm_maximal(series, series.size(), params).value;
    require_finite_ratio(t);
    t.ratio = t.lhs / t.rhs;
    return t;
}

ConstantTrial maximal_constant_trial(const DilatedSeries& ds, Inequality ineq, double p, double q,
                                     const StepanovParams& params) {
    require_valid(ds);
    const ConditionReport cr = condition_report(ds, p, q);
    ConstantTrial t;
    if (ineq == Inequality::Interp) {
        if (!cr.interp_valid) throw RangeError("(p, q) does not satisfy 1/p + 1/q = 3/2 with 1 <= p, q <= 2");
        t.rhs = cr.rhs_interp;
    } else {
        t.rhs = cr.rhs_l1_dilated;
    }
    const std::size_t n = ds.size();
    const std::size_t inner = ds.inner.size();
    t.lhs = stepanov_norm(SquaredModulus([&](double x) {
                              const double m = dilated_maximal_abs(ds, n, x, inner);
                              return m * m;
                          }),
                          params)
                .value;
    require_finite_ratio(t);
    t.ratio = t.lhs / t.rhs;
    return t;
}

ConstantReport maximal_constant_estimate(const ConstantGenerator& gen, Inequality ineq, std::size_t trials,
                                         std::uint64_t seed, unsigned workers) {
    if (trials == 0) throw RangeError("maximal_constant_estimate needs trials >= 1");
    ConstantReport rep;
    rep.inequality = ineq;
    rep.seed = seed;
    rep.trials.resize(trials);
    StepanovParams serial = gen.stepanov;
    serial.workers = 1;
    parallel_for(trials, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            if (ineq == Inequality::Gen)
                rep.trials[j] = maximal_constant_trial(random_gen_instance(gen, seed, j), serial);
            else
                rep.trials[j] =
                    maximal_constant_trial(random_dilated_instance(gen, seed, j), ineq, gen.p, gen.q, serial);
        }
    });
    for (const auto& t : rep.trials) rep.max_ratio = std::max(rep.max_ratio, t.ratio);
    return rep;
}

}  // namespace apstep
