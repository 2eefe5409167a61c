#include "apstep/report.hpp"

#include <ostream>
#include <sstream>

#include "apstep/keyvalue.hpp"
#include "apstep/series_io.hpp"

namespace apstep {

namespace {

Json complex_list(const std::vector<Complex>& zs) {
    Json arr = Json::array();
    for (const auto& z : zs) arr.push_back(to_json(z));
    return arr;
}

const std::string& csv(double x, std::string& buf) { return buf = kv::format_double(x); }

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const NormEstimate& e) {
    return Json{{"value", e.value},         {"lower_bound_only", e.lower_bound_only},
                {"x_lo", e.x_lo},           {"x_hi", e.x_hi},
                {"x_step", e.x_step},       {"t_step", e.t_step},
                {"quadrature", std::string(to_string(e.quadrature))},
                {"argmax_x", e.argmax_x},   {"windows", e.windows}};
}

Json to_json(const BesicovitchEstimate& e) {
    return Json{{"value", e.value}, {"horizons", e.horizons}, {"trace", e.trace}};
}

Json to_json(const BesselReport& r) {
    return Json{{"lhs", r.lhs},   {"rhs", r.rhs}, {"slack", r.slack},
                {"holds", r.holds}, {"tol", r.tol}, {"stepanov", to_json(r.stepanov)}};
}

Json to_json(const ConditionReport& r) {
    Json j{{"p", r.p},
           {"q", r.q},
           {"wiener_p2", r.wiener_p2},
           {"wiener_p", r.wiener_p},
           {"hs", r.hs},
           {"interp_valid", r.interp_valid},
           {"trend", std::string(to_string(r.trend))},
           {"block_convention", r.block_convention}};
    Json conds = Json::array();
    for (const auto& c : r.conditions)
        conds.push_back(Json{{"name", c.name},
                             {"value", c.value},
                             {"half_value", c.half_value},
                             {"trend", std::string(to_string(c.trend))},
                             {"feeds", c.feeds}});
    j["conditions"] = std::move(conds);
    if (r.dilated) {
        j["inner_wiener_q"] = r.inner_wiener_q;
        j["inner_l1"] = r.inner_l1;
        j["rhs_l1_dilated"] = r.rhs_l1_dilated;
        j["rhs_interp"] = r.rhs_interp;
    }
    return j;
}

Json to_json(const ReducedSeries& r) {
    return Json{{"v", r.v}, {"b", complex_list(r.b)}, {"u", r.u}};
}

Json to_json(const DiscrepancyReport& r) {
    return Json{{"measured", r.measured}, {"bound", r.bound}, {"holds", r.holds}};
}

Json to_json(const SidonResult& r) {
    Json j{{"is_sidon", r.is_sidon}};
    if (r.witness) {
        const auto& w = *r.witness;
        j["witness"] = Json{{"pair1", {w.k, w.l}}, {"pair2", {w.k2, w.l2}}, {"sum", w.sum}};
    }
    return j;
}

Json to_json(const TauTransform& r) {
    return Json{{"value", r.value}, {"imag", r.imag}, {"tail_bound", r.tail_bound}};
}

Json to_json(const BellmanBoasReport& r) {
    return Json{{"lhs", r.lhs},
                {"rhs", r.rhs},
                {"max_norm_sq", r.max_norm_sq},
                {"cross", r.cross},
                {"holds", r.holds}};
}

Json to_json(const UkProbeReport& r) {
    return Json{{"constant", r.constant}, {"ks", r.ks}, {"max_ratio_per_k", r.max_ratio_per_k}, {"bounded", r.bounded}};
}

Json to_json(const TrialReport& r) {
    return Json{{"seed", r.seed},
                {"n_values", r.n_values},
                {"estimates", r.estimates},
                {"ratios", r.ratios},
                {"grid", Json{{"t0", r.grid_t0}, {"t1", r.grid_t1}, {"step", r.grid_step}, {"count", r.grid_count}}},
                {"trials", r.trials}};
}

Json to_json(const Prop27Report& r) {
    Json probes = Json::array();
    for (const auto& p : r.probes)
        probes.push_back(Json{{"n", p.n}, {"l1", p.l1}, {"bound", p.bound}, {"holds", p.holds}});
    Json blocks = Json::array();
    for (const auto& b : r.blocks)
        blocks.push_back(Json{{"j", b.j}, {"stepanov", b.stepanov}, {"l1", b.l1}, {"bound", b.bound}});
    return Json{{"seed", r.seed},
                {"n_max", r.n_max},
                {"wiener_partial", r.wiener_partial},
                {"wiener_value", r.wiener_value},
                {"wiener_half", r.wiener_half},
                {"wiener_increment", r.wiener_increment},
                {"trend", std::string(to_string(r.trend))},
                {"within_block_holds", r.within_block_holds},
                {"probes", std::move(probes)},
                {"blocks", std::move(blocks)},
                {"stepanov", Json{{"x_lo", r.stepanov.x_lo},
                                  {"x_hi", r.stepanov.x_hi},
                                  {"x_step", r.stepanov.x_step},
                                  {"t_step", r.stepanov.t_step}}}};
}

Json to_json(const ConstantTrial& t) { return Json{{"lhs", t.lhs}, {"rhs", t.rhs}, {"ratio", t.ratio}}; }

Json to_json(const ConstantReport& r) {
    std::vector<double> ratios;
    for (const auto& t : r.trials) ratios.push_back(t.ratio);
    return Json{{"inequality", std::string(to_string(r.inequality))},
                {"seed", r.seed},
                {"trials", r.trials.size()},
                {"ratios", ratios},
                {"max_ratio", r.max_ratio}};
}

std::string serialize(const ReducedSeries& r) {
    std::ostringstream out;
    out << "# reduced Dirichlet form: lambda_k = log2(v_k)\n# v =";
    for (auto v : r.v) out << ' ' << v;
    out << "\n# u =";
    for (auto u : r.u) out << ' ' << u;
    out << '\n' << serialize(r.as_series());
    return out.str();
}

void write_csv(std::ostream& out, const TrialReport& r) {
    std::string buf;
    out << "n,trial,grid_max\n";
    for (std::size_t i = 0; i < r.n_values.size(); ++i)
        for (std::size_t j = 0; j < r.per_trial.size(); ++j)
            out << r.n_values[i] << ',' << j << ',' << csv(r.per_trial[j][i], buf) << '\n';
}

void write_csv(std::ostream& out, const Prop27Report& r) {
    std::string b1, b2, b3;
    out << "section,index,value,aux,bound\n";
    for (std::size_t j = 0; j < r.wiener_partial.size(); ++j)
        out << "wiener," << j << ',' << csv(r.wiener_partial[j], b1) << ",,\n";
    for (const auto& p : r.probes)
        out << "probe," << p.n << ',' << csv(p.l1, b1) << ",," << csv(p.bound, b3) << '\n';
    for (const auto& b : r.blocks)
        out << "block," << b.j << ',' << csv(b.stepanov, b1) << ',' << csv(b.l1, b2) << ',' << csv(b.bound, b3)
            << '\n';
}

void write_csv(std::ostream& out, const ConstantReport& r) {
    std::string b1, b2, b3;
    out << "trial,lhs,rhs,ratio\n";
    for (std::size_t j = 0; j < r.trials.size(); ++j)
        out << j << ',' << csv(r.trials[j].lhs, b1) << ',' << csv(r.trials[j].rhs, b2) << ','
            << csv(r.trials[j].ratio, b3) << '\n';
}

}  // namespace apstep
