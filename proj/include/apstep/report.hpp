#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "apstep/conditions.hpp"
#include "apstep/correlation.hpp"
#include "apstep/experiments.hpp"
#include "apstep/norms.hpp"
#include "apstep/reduction.hpp"

namespace apstep {

using Json = nlohmann::ordered_json;

// One-record JSON objects; fields carry the names of the report structs.
// Complex values are [re, im] pairs.
Json to_json(Complex z);
Json to_json(const NormEstimate& e);
Json to_json(const BesicovitchEstimate& e);
Json to_json(const BesselReport& r);
Json to_json(const ConditionReport& r);
Json to_json(const ReducedSeries& r);
Json to_json(const DiscrepancyReport& r);
Json to_json(const SidonResult& r);
Json to_json(const TauTransform& r);
Json to_json(const BellmanBoasReport& r);
Json to_json(const UkProbeReport& r);
Json to_json(const TrialReport& r);
Json to_json(const Prop27Report& r);
Json to_json(const ConstantTrial& t);
Json to_json(const ConstantReport& r);

/// Series file for the reduced Dirichlet form: explicit kind with
/// lambda_k = log2(v_k), preceded by `# v = ...` and `# u = ...` comments.
std::string serialize(const ReducedSeries& r);

// CSV traces; every number uses 17 significant digits.
void write_csv(std::ostream& out, const TrialReport& r);     // n,trial,grid_max
void write_csv(std::ostream& out, const Prop27Report& r);    // section,index,value,aux,bound
void write_csv(std::ostream& out, const ConstantReport& r);  // trial,lhs,rhs,ratio

}  // namespace apstep
