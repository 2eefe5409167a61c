// Command-line driver: one subcommand per library operation.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "apstep/conditions.hpp"
#include "apstep/correlation.hpp"
#include "apstep/error.hpp"
#include "apstep/evaluator.hpp"
#include "apstep/experiments.hpp"
#include "apstep/keyvalue.hpp"
#include "apstep/norms.hpp"
#include "apstep/reduction.hpp"
#include "apstep/report.hpp"
#include "apstep/series_io.hpp"

namespace {

using namespace apstep;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Config files use the series key-value grammar: `key = value` entries, with
// `[sub]` or `[sub.subsub]` sections addressing subcommand options.
class KvConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override { return {}; }

    std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
        std::stringstream buf;
        buf << in.rdbuf();
        kv::Document doc;
        try {
            doc = kv::parse(buf.str());
        } catch (const apstep::Error& e) {
            throw CLI::ConfigError(std::string("config: ") + e.what());
        }
        std::vector<CLI::ConfigItem> items;
        for (const auto& sec : doc.sections) {
            if (!sec.records.empty())
                throw CLI::ConfigError("config: line " + std::to_string(sec.records.front().line) +
                                       ": expected 'key = value'");
            std::vector<std::string> parents;
            if (!sec.name.empty()) {
                std::stringstream ss(sec.name);
                for (std::string part; std::getline(ss, part, '.');) parents.push_back(part);
            }
            for (const auto& e : sec.entries) {
                CLI::ConfigItem item;
                item.parents = parents;
                item.name = e.key;
                item.inputs = kv::split_ws(e.value);
                items.push_back(std::move(item));
            }
        }
        return items;
    }
};

struct Globals {
    std::string format;  // empty: subcommand default
    std::string out;
    std::uint64_t seed = 42;
    unsigned workers = 0;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw apstep::Error("cannot write '" + g.out + "'");
    f << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw apstep::Error("cannot write '" + path + "'");
    f << text;
}

std::string scalar_csv(const Json& v) {
    if (v.is_number_float()) return kv::format_double(v.get<double>());
    if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        }
        return s;
    }
    if (v.is_null()) return "";
    return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::string>& keys,
             std::vector<std::string>& values) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        const Json& v = it.value();
        if (v.is_object()) {
            flatten(v, key, keys, values);
        } else if (v.is_array()) {
            std::string joined;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) joined += ';';
                joined += v[i].is_structured() ? v[i].dump() : scalar_csv(v[i]);
            }
            keys.push_back(key);
            values.push_back(joined.find(',') != std::string::npos ? "\"" + joined + "\"" : joined);
        } else {
            keys.push_back(key);
            values.push_back(scalar_csv(v));
        }
    }
}

/// One-record report: compact JSON line, or a two-line CSV (header, values).
std::string render(const Json& j, const std::string& format) {
    if (format == "csv") {
        std::vector<std::string> keys, values;
        flatten(j, "", keys, values);
        std::string out;
        for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
        out += '\n';
        for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i];
        return out + '\n';
    }
    return j.dump() + '\n';
}

struct StepanovFlags {
    StepanovParams p;
    std::string quadrature = "simpson";

    void add(CLI::App* sub) {
        sub->add_option("--x-lo", p.x_lo, "first window start")->capture_default_str();
        sub->add_option("--x-hi", p.x_hi, "last window start")->capture_default_str();
        sub->add_option("--x-step", p.x_step, "spacing of window starts")->capture_default_str();
        sub->add_option("--t-step", p.t_step, "quadrature step inside a window")->capture_default_str();
        sub->add_option("--quadrature", quadrature, "simpson or trapezoid")
            ->check(CLI::IsMember({"simpson", "trapezoid"}))
            ->capture_default_str();
    }
    StepanovParams resolve(unsigned workers) const {
        StepanovParams r = p;
        r.quadrature = quadrature_from_string(quadrature);
        r.workers = workers;
        return r;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Almost-periodic series in the Stepanov space: evaluation, norms, conditions, "
                 "reductions, correlation sums and experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.config_formatter(std::make_shared<KvConfig>());
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "key-value config file; command-line flags take precedence");

    Globals g;
    app.add_option("--format", g.format, "output format: json or csv (default depends on the subcommand)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "output path (default: standard output)");
    app.add_option("--seed", g.seed, "seed for randomized subcommands")->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads, 0 = machine parallelism")->capture_default_str();

    // norm
    auto* norm = app.add_subcommand("norm", "Stepanov / Besicovitch norms and the Bessel check of a series");
    std::string norm_series, norm_section, norm_mode = "stepanov";
    std::size_t norm_nmax = 0;
    std::vector<double> norm_horizons = default_horizons();
    double norm_horizon = 1e4, norm_tol = 5e-2;
    StepanovFlags norm_sp;
    norm->add_option("--series", norm_series, "series file")->required()->check(CLI::ExistingFile);
    norm->add_option("--section", norm_section, "section name inside the file");
    norm->add_option("--mode", norm_mode, "stepanov, maximal, besicovitch or bessel")
        ->check(CLI::IsMember({"stepanov", "maximal", "besicovitch", "bessel"}))
        ->capture_default_str();
    norm->add_option("--n-max", norm_nmax, "partial sums considered by --mode maximal (0 = all terms)");
    norm->add_option("--horizons", norm_horizons, "horizons T for --mode besicovitch")->delimiter(',');
    norm->add_option("--horizon", norm_horizon, "horizon T for --mode bessel")->capture_default_str();
    norm->add_option("--tol", norm_tol, "relative tolerance for --mode bessel")->capture_default_str();
    norm_sp.add(norm);

    // eval
    auto* eval = app.add_subcommand("eval", "Partial sums and maximal function on a grid (CSV: t,re,im,maxabs)");
    std::string eval_series, eval_section, eval_dilated;
    double eval_t0 = 0.0, eval_t1 = 10.0, eval_step = 0.01;
    std::size_t eval_nmax = 0, eval_inner = 0;
    auto* eval_series_opt = eval->add_option("--series", eval_series, "series file")->check(CLI::ExistingFile);
    eval->add_option("--section", eval_section, "section name inside the file");
    auto* eval_dilated_opt =
        eval->add_option("--dilated", eval_dilated, "dilated series file ([outer] and [inner] sections)")
            ->check(CLI::ExistingFile);
    eval_series_opt->excludes(eval_dilated_opt);
    eval->add_option("--t0", eval_t0, "grid start")->capture_default_str();
    eval->add_option("--t1", eval_t1, "grid end")->capture_default_str();
    eval->add_option("--step", eval_step, "grid step")->capture_default_str();
    eval->add_option("--n-max", eval_nmax, "number of terms (0 = all)");
    eval->add_option("--inner-trunc", eval_inner, "inner terms kept for dilated series (0 = all)");

    // maximal
    auto* maximal = app.add_subcommand("maximal", "Ratio of a maximal inequality on one instance");
    std::string max_series, max_section, max_dilated, max_ineq;
    double max_p = 4.0 / 3.0, max_q = 4.0 / 3.0;
    StepanovFlags max_sp;
    auto* max_series_opt = maximal->add_option("--series", max_series, "series file (inequality gen)")
                               ->check(CLI::ExistingFile);
    maximal->add_option("--section", max_section, "section name inside the file");
    auto* max_dilated_opt = maximal->add_option("--dilated", max_dilated, "dilated series file")
                                ->check(CLI::ExistingFile);
    max_series_opt->excludes(max_dilated_opt);
    maximal->add_option("--inequality", max_ineq, "dilated or interp for dilated input (default dilated)")
        ->check(CLI::IsMember({"gen", "dilated", "interp"}));
    maximal->add_option("--p", max_p, "outer exponent for interp")->capture_default_str();
    maximal->add_option("--q", max_q, "inner exponent for interp")->capture_default_str();
    max_sp.add(maximal);

    // check
    auto* check = app.add_subcommand("check", "Sufficient convergence conditions");
    std::string check_kind = "all", check_series, check_section, check_dilated;
    double check_p = 4.0 / 3.0, check_q = 4.0 / 3.0, check_tol = 1e-6;
    check->add_option("kind", check_kind, "wiener, hs, interp or all")
        ->check(CLI::IsMember({"wiener", "hs", "interp", "all"}))
        ->capture_default_str();
    auto* check_series_opt = check->add_option("--series", check_series, "series file")->check(CLI::ExistingFile);
    check->add_option("--section", check_section, "section name inside the file");
    auto* check_dilated_opt =
        check->add_option("--dilated", check_dilated, "dilated series file")->check(CLI::ExistingFile);
    check_series_opt->excludes(check_dilated_opt);
    check->add_option("--p", check_p, "outer exponent")->capture_default_str();
    check->add_option("--q", check_q, "inner exponent")->capture_default_str();
    check->add_option("--tol", check_tol, "tolerance on 1/p + 1/q = 3/2")->capture_default_str();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Frequency-to-Dirichlet reduction and Abel decomposition");
    std::string red_series, red_section;
    std::optional<double> red_t;
    std::size_t red_p = 1, red_q = 0;
    std::optional<unsigned> red_abel;
    reduce->add_option("--series", red_series, "series file")->required()->check(CLI::ExistingFile);
    reduce->add_option("--section", red_section, "section name inside the file");
    reduce->add_option("--t", red_t, "report the reduction discrepancy (or Abel recomposition) at t");
    reduce->add_option("--p", red_p, "first term of the discrepancy block (1-based)")->capture_default_str();
    reduce->add_option("--q", red_q, "last term of the discrepancy block (0 = last term)");
    reduce->add_option("--abel-blocks", red_abel,
                       "Abel decomposition with blocks 0..N of the coefficients instead of the reduction");

    // quad
    auto* quad = app.add_subcommand("quad", "Quadruple triangle-kernel sum M of a frequency set");
    std::string quad_freq, quad_section, quad_method = "fast";
    quad->add_option("--freq", quad_freq, "frequency file")->required()->check(CLI::ExistingFile);
    quad->add_option("--section", quad_section, "section name inside the file");
    quad->add_option("--method", quad_method, "naive or fast")
        ->check(CLI::IsMember({"naive", "fast"}))
        ->capture_default_str();

    // sidon
    auto* sidon = app.add_subcommand("sidon", "Sidon (B2) test of an integer frequency set");
    std::string sidon_freq, sidon_section;
    sidon->add_option("--freq", sidon_freq, "frequency file")->required()->check(CLI::ExistingFile);
    sidon->add_option("--section", sidon_section, "section name inside the file");

    // tau
    auto* tau = app.add_subcommand("tau", "Fourier transform of the tau density at x");
    double tau_x = 0.0, tau_horizon = 1e4, tau_step = 0.01;
    tau->add_option("--x", tau_x, "argument of the transform")->capture_default_str();
    tau->add_option("--horizon", tau_horizon, "integration horizon T (>= 1e3)")->capture_default_str();
    tau->add_option("--step", tau_step, "quadrature step")->capture_default_str();

    // experiment
    auto* exper = app.add_subcommand("experiment", "Seeded Monte-Carlo studies");
    exper->require_subcommand(1);
    exper->fallthrough();

    auto* halasz = exper->add_subcommand("halasz", "Grid maximum of random Dirichlet polynomials");
    std::vector<std::size_t> hal_n{64, 256, 1024};
    std::size_t hal_trials = 64;
    double hal_t0 = 0.0, hal_t1 = 200.0, hal_step = 0.005;
    std::string hal_trace;
    halasz->add_option("--n", hal_n, "strictly increasing polynomial lengths")->delimiter(',');
    halasz->add_option("--trials", hal_trials, "trials per n")->capture_default_str();
    halasz->add_option("--t0", hal_t0, "grid start")->capture_default_str();
    halasz->add_option("--t1", hal_t1, "grid end")->capture_default_str();
    halasz->add_option("--step", hal_step, "grid step")->capture_default_str();
    halasz->add_option("--trace", hal_trace, "also write the per-trial CSV trace here");

    auto* prop27 = exper->add_subcommand("prop27", "Random series in S^2 violating the Wiener condition");
    std::size_t p27_nmax = std::size_t{1} << 16;
    Prop27Params p27_params;
    std::string p27_trace;
    prop27->add_option("--n-max", p27_nmax, "number of coefficients (>= 1024)")->capture_default_str();
    prop27->add_option("--max-block", p27_params.max_block, "Stepanov norms of S_{2^{j+1}} - S_{2^j} for j <= this")
        ->capture_default_str();
    prop27->add_option("--x-hi", p27_params.stepanov.x_hi, "last window start for the Stepanov norms")
        ->capture_default_str();
    prop27->add_option("--t-step", p27_params.stepanov.t_step, "quadrature step")->capture_default_str();
    prop27->add_option("--trace", p27_trace, "also write the CSV trace here");

    auto* constants = exper->add_subcommand("constants", "Empirical maximal-inequality ratios");
    std::string c_ineq = "gen", c_trace;
    std::size_t c_trials = 50;
    ConstantGenerator c_gen;
    constants->add_option("--inequality", c_ineq, "gen, dilated or interp")
        ->check(CLI::IsMember({"gen", "dilated", "interp"}))
        ->capture_default_str();
    constants->add_option("--trials", c_trials, "number of random instances")->capture_default_str();
    constants->add_option("--n-terms", c_gen.n_terms, "terms of gen instances")->capture_default_str();
    constants->add_option("--outer-terms", c_gen.outer_terms, "outer terms of dilated instances")
        ->capture_default_str();
    constants->add_option("--inner-terms", c_gen.inner_terms, "inner terms of dilated instances")
        ->capture_default_str();
    constants->add_option("--p", c_gen.p, "outer exponent for interp")->capture_default_str();
    constants->add_option("--q", c_gen.q, "inner exponent for interp")->capture_default_str();
    constants->add_option("--x-hi", c_gen.stepanov.x_hi, "last window start")->capture_default_str();
    constants->add_option("--t-step", c_gen.stepanov.t_step, "quadrature step")->capture_default_str();
    constants->add_option("--trace", c_trace, "also write the per-trial CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const auto usage_error = [&](const std::string& msg) {
        std::cerr << "usage error: " << msg << "\nRun with --help for more information.\n";
        return kExitUsage;
    };

    try {
        const std::string fmt = g.format;
        if (*norm) {
            const APSeries s = load_series(norm_series, norm_section);
            const StepanovParams sp = norm_sp.resolve(g.workers);
            Json j;
            if (norm_mode == "stepanov")
                j = to_json(stepanov_norm(s, sp));
            else if (norm_mode == "maximal")
                j = to_json(stepanov_norm_maximal(s, norm_nmax == 0 ? s.size() : norm_nmax, sp));
            else if (norm_mode == "besicovitch")
                j = to_json(besicovitch_seminorm(s, norm_horizons));
            else
                j = to_json(bessel_check(s, norm_horizon, sp, norm_tol));
            emit(g, render(j, fmt));
        } else if (*eval) {
            if (eval_series.empty() && eval_dilated.empty()) return usage_error("eval needs --series or --dilated");
            const SampleGrid grid(eval_t0, eval_t1, eval_step);
            std::vector<double> ts, re, im, mx;
            if (!eval_series.empty()) {
                const APSeries s = load_series(eval_series, eval_section);
                const std::size_t n = eval_nmax == 0 ? s.size() : eval_nmax;
                if (n > s.size()) throw RangeError("--n-max exceeds the number of terms");
                const MaximalField f = maximal_field(s, grid, n, g.workers);
                if (fmt != "json") {
                    std::ostringstream out;
                    write_csv(out, f);
                    emit(g, out.str());
                    return 0;
                }
                for (std::size_t i = 0; i < grid.count(); ++i) {
                    ts.push_back(grid[i]);
                    re.push_back(f.final_sum[i].real());
                    im.push_back(f.final_sum[i].imag());
                    mx.push_back(f.max_abs[i]);
                }
            } else {
                const DilatedSeries ds = load_dilated(eval_dilated);
                const std::size_t n = eval_nmax == 0 ? ds.size() : eval_nmax;
                const std::size_t inner = eval_inner == 0 ? ds.inner.size() : eval_inner;
                if (n > ds.size()) throw RangeError("--n-max exceeds the number of outer terms");
                std::ostringstream out;
                out << "t,re,im,maxabs\n";
                for (std::size_t i = 0; i < grid.count(); ++i) {
                    const double t = grid[i];
                    const DilatedValue v = dilated_eval(ds, n, t, inner);
                    ts.push_back(t);
                    re.push_back(v.value.real());
                    im.push_back(v.value.imag());
                    mx.push_back(dilated_maximal_abs(ds, n, t, inner));
                    out << kv::format_double(t) << ',' << kv::format_double(re.back()) << ','
                        << kv::format_double(im.back()) << ',' << kv::format_double(mx.back()) << '\n';
                }
                if (fmt != "json") {
                    emit(g, out.str());
                    return 0;
                }
            }
            emit(g, Json{{"t", ts}, {"re", re}, {"im", im}, {"maxabs", mx}}.dump() + "\n");
        } else if (*maximal) {
            if (max_series.empty() && max_dilated.empty()) return usage_error("maximal needs --series or --dilated");
            const StepanovParams sp = max_sp.resolve(g.workers);
            Json j;
            if (!max_series.empty()) {
                if (!max_ineq.empty() && max_ineq != "gen")
                    return usage_error("--inequality " + max_ineq + " needs --dilated input");
                j = to_json(maximal_constant_trial(load_series(max_series, max_section), sp));
                j["inequality"] = "gen";
            } else {
                const Inequality ineq = max_ineq.empty() ? Inequality::Dilated : inequality_from_string(max_ineq);
                if (ineq == Inequality::Gen) return usage_error("--inequality gen needs --series input");
                j = to_json(maximal_constant_trial(load_dilated(max_dilated), ineq, max_p, max_q, sp));
                j["inequality"] = std::string(to_string(ineq));
            }
            emit(g, render(j, fmt));
        } else if (*check) {
            Json j;
            if (check_series.empty() && check_dilated.empty()) {
                if (check_kind != "interp") return usage_error("check " + check_kind + " needs --series or --dilated");
                j = Json{{"p", check_p}, {"q", check_q},
                         {"interp_valid", check_interpolation_pair(check_p, check_q, check_tol)}};
            } else {
                const ConditionReport r =
                    check_series.empty()
                        ? condition_report(load_dilated(check_dilated), check_p, check_q, check_tol)
                        : condition_report(load_series(check_series, check_section), check_p, check_q, check_tol);
                const Json full = to_json(r);
                if (check_kind == "all") {
                    j = full;
                } else if (check_kind == "wiener") {
                    j = Json{{"wiener_p2", r.wiener_p2}, {"wiener_p", r.wiener_p}, {"p", r.p},
                             {"trend", std::string(to_string(r.trend))}, {"block_convention", r.block_convention}};
                } else if (check_kind == "hs") {
                    j = Json{{"hs", r.hs}};
                    for (const auto& c : r.conditions)
                        if (c.name == "hs") j["trend"] = std::string(to_string(c.trend));
                } else {
                    j = Json{{"p", r.p}, {"q", r.q}, {"interp_valid", r.interp_valid}};
                    if (r.dilated) j["rhs_interp"] = r.rhs_interp;
                }
            }
            emit(g, render(j, fmt));
        } else if (*reduce) {
            const APSeries s = load_series(red_series, red_section);
            if (red_abel) {
                const AbelDecomposition d = abel_decompose(s.coeff, *red_abel);
                Json j{{"blocks", d.blocks.size()}, {"length", d.length()}};
                Json carl = Json::array();
                for (const auto& c : d.carleson_coefficients()) carl.push_back(to_json(c));
                j["carleson_coefficients"] = std::move(carl);
                if (red_t) {
                    const Complex rec = abel_recompose(d, *red_t);
                    const Complex direct = dirichlet_partial_sum(s.coeff, d.length(), *red_t);
                    j["t"] = *red_t;
                    j["recomposed"] = to_json(rec);
                    j["direct"] = to_json(direct);
                    j["error"] = std::abs(rec - direct);
                }
                emit(g, render(j, fmt));
                return 0;
            }
            const ReducedSeries r = reduce_to_dirichlet(s);
            if (red_t) {
                const std::size_t q = red_q == 0 ? s.size() : red_q;
                Json j = to_json(reduction_discrepancy(s, r, *red_t, red_p, q));
                j["t"] = *red_t;
                j["p"] = red_p;
                j["q"] = q;
                emit(g, render(j, fmt));
            } else if (fmt.empty()) {
                emit(g, serialize(r));
            } else {
                emit(g, render(to_json(r), fmt));
            }
        } else if (*quad) {
            const FrequencySeq f = load_frequencies(quad_freq, quad_section);
            const double m = quad_method == "naive" ? quadruple_sum_naive(f) : quadruple_sum_fast(f, g.workers);
            emit(g, render(Json{{"M", m}, {"method", quad_method}, {"n", f.size()}}, fmt));
        } else if (*sidon) {
            emit(g, render(to_json(sidon_check(load_frequencies(sidon_freq, sidon_section))), fmt));
        } else if (*tau) {
            const TauTransform tr = tau_fourier_numeric(tau_x, tau_horizon, tau_step);
            const double exact = triangle_kernel(tau_x);
            Json j{{"x", tau_x}, {"horizon", tau_horizon}};
            const Json parts = to_json(tr);
            for (auto it = parts.begin(); it != parts.end(); ++it) j[it.key()] = it.value();
            j["exact"] = exact;
            j["abs_error"] = std::abs(tr.value - exact);
            emit(g, render(j, fmt));
        } else if (*halasz) {
            const TrialReport r = halasz_experiment(hal_n, hal_trials, SampleGrid(hal_t0, hal_t1, hal_step), g.seed,
                                                    g.workers);
            std::ostringstream trace;
            write_csv(trace, r);
            if (!hal_trace.empty()) write_file(hal_trace, trace.str());
            emit(g, fmt == "csv" ? trace.str() : to_json(r).dump() + "\n");
        } else if (*prop27) {
            p27_params.stepanov.workers = g.workers;
            const Prop27Report r = prop27_experiment(p27_nmax, g.seed, p27_params);
            std::ostringstream trace;
            write_csv(trace, r);
            if (!p27_trace.empty()) write_file(p27_trace, trace.str());
            emit(g, fmt == "csv" ? trace.str() : to_json(r).dump() + "\n");
        } else if (*constants) {
            const ConstantReport r =
                maximal_constant_estimate(c_gen, inequality_from_string(c_ineq), c_trials, g.seed, g.workers);
            std::ostringstream trace;
            write_csv(trace, r);
            if (!c_trace.empty()) write_file(c_trace, trace.str());
            emit(g, fmt == "csv" ? trace.str() : to_json(r).dump() + "\n");
        }
    } catch (const apstep::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
