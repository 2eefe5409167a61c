#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apstep/conditions.hpp"
#include "apstep/norms.hpp"
#include "apstep/series.hpp"

namespace apstep {

/// Monte-Carlo estimate of E sup_t |sum_{k<=n} eps_k k^{it}| over a finite grid.
struct TrialReport {
    std::uint64_t seed = 0;
    std::vector<std::size_t> n_values;
    std::vector<double> estimates;  // mean over trials of the grid maximum
    std::vector<double> ratios;     // estimate * ln(n + 1) / n
    double grid_t0 = 0.0;
    double grid_t1 = 0.0;
    double grid_step = 0.0;
    std::size_t grid_count = 0;
    std::size_t trials = 0;
    /// per_trial[j][i]: grid maximum of trial j at n_values[i]
    std::vector<std::vector<double>> per_trial;

    friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// Trial j draws eps_1..eps_{max n} from stream j of `seed`. The grid
/// maximum is a lower bound for the supremum over the real line.
TrialReport halasz_experiment(const std::vector<std::size_t>& n_values, std::size_t trials, const SampleGrid& grid,
                              std::uint64_t seed, unsigned workers = 0);

struct Prop27Block {
    unsigned j = 0;                // difference S_{2^{j+1}} - S_{2^j}
    double stepanov = 0.0;         // estimated Stepanov norm of the difference
    double l1 = 0.0;               // sum of |a_k| over 2^j < k <= 2^{j+1}
    double bound = 0.0;            // 2 / sqrt(j)

    friend bool operator==(const Prop27Block&, const Prop27Block&) = default;
};

struct Prop27Probe {
    unsigned n = 0;
    double l1 = 0.0;     // sum_{l=2^n}^{2^{n+1}} 1 / (l sqrt(ln(l + 1)))
    double bound = 0.0;  // 2 / sqrt(n)
    bool holds = false;

    friend bool operator==(const Prop27Probe&, const Prop27Probe&) = default;
};

struct Prop27Report {
    std::uint64_t seed = 0;
    std::size_t n_max = 0;
    std::vector<double> wiener_partial;  // sum_{i<=j} B_i^2 over dyadic blocks j = 0, 1, ...
    double wiener_value = 0.0;
    double wiener_half = 0.0;
    double wiener_increment = 0.0;  // (value - half) / value
    Trend trend = Trend::Converging;
    std::vector<Prop27Probe> probes;  // within-block bound for n = 1..16
    bool within_block_holds = false;
    std::vector<Prop27Block> blocks;
    StepanovParams stepanov;

    friend bool operator==(const Prop27Report& a, const Prop27Report& b) {
        return a.seed == b.seed && a.n_max == b.n_max && a.wiener_partial == b.wiener_partial &&
               a.wiener_value == b.wiener_value && a.wiener_half == b.wiener_half &&
               a.wiener_increment == b.wiener_increment && a.trend == b.trend && a.probes == b.probes &&
               a.within_block_holds == b.within_block_holds && a.blocks == b.blocks;
    }
};

struct Prop27Params {
    unsigned max_block = 8;  // Stepanov norms of differences for j = 1..max_block
    unsigned max_probe = 16;
    StepanovParams stepanov{0.0, 20.0, 0.05, 1e-3, Quadrature::Simpson, 0};
};

/// a_n = eps_n / (n sqrt(ln(n + 1))), eps from stream 0 of `seed`.
CoeffSeq prop27_coefficients(std::size_t n_max, std::uint64_t seed);

Prop27Report prop27_experiment(std::size_t n_max, std::uint64_t seed, const Prop27Params& params = {});

enum class Inequality { Gen, Dilated, Interp };
std::string_view to_string(Inequality ineq);
Inequality inequality_from_string(std::string_view name);

/// Random instance generator for the maximal-inequality constants.
struct ConstantGenerator {
    std::size_t n_terms = 128;     // gen: lambda sorted uniform on [1, 1 + n_terms / 4)
    std::size_t outer_terms = 16;  // dilated/interp: lambda sorted uniform on [1, 1 + outer_terms / 4)
    std::size_t inner_terms = 8;   // mu sorted uniform on [1, 3)
    double p = 4.0 / 3.0;
    double q = 4.0 / 3.0;
    StepanovParams stepanov{0.0, 20.0, 0.05, 1e-3, Quadrature::Simpson, 1};
};

struct ConstantTrial {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;

    friend bool operator==(const ConstantTrial&, const ConstantTrial&) = default;
};

struct ConstantReport {
    Inequality inequality = Inequality::Gen;
    std::uint64_t seed = 0;
    std::vector<ConstantTrial> trials;
    double max_ratio = 0.0;

    friend bool operator==(const ConstantReport&, const ConstantReport&) = default;
};

APSeries random_gen_instance(const ConstantGenerator& gen, std::uint64_t seed, std::uint64_t trial);
DilatedSeries random_dilated_instance(const ConstantGenerator& gen, std::uint64_t seed, std::uint64_t trial);

/// LHS of a single instance: Stepanov estimate of the maximal field.
ConstantTrial maximal_constant_trial(const APSeries& series, const StepanovParams& params);
ConstantTrial maximal_constant_trial(const DilatedSeries& ds, Inequality ineq, double p, double q,
                                     const StepanovParams& params);

/// Trial j uses stream j of `seed`; trials run in parallel, each with a
/// serial Stepanov estimate, and are reported in index order.
ConstantReport maximal_constant_estimate(const ConstantGenerator& gen, Inequality ineq, std::size_t trials,
                                         std::uint64_t seed, unsigned workers = 0);

}  // namespace apstep
