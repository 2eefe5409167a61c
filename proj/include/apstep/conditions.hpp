#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "apstep/series.hpp"

namespace apstep {

/// B_n = sum_{k : n <= lambda_k < n+1} |a_k|. Blocks are half-open, so every
/// coefficient lands in exactly one block.
struct BlockSums {
    std::map<long long, double> entries;

    double total() const;
    bool empty() const noexcept { return entries.empty(); }
};

BlockSums block_sums(const APSeries& series);
BlockSums block_sums(const FrequencySeq& freq, const CoeffSeq& coeff);

/// sum_n B_n^p for p in [1, 2].
double power_sum(const BlockSums& bs, double p);

/// sum_n n |a_n|^2 (1-based n).
double hs_sum(const CoeffSeq& coeff);

/// 1 <= p, q <= 2 and |1/p + 1/q - 3/2| <= tol.
bool check_interpolation_pair(double p, double q, double tol);

enum class Trend { Converging, Diverging };
std::string_view to_string(Trend t);

/// Flags "diverging" when value - half_value > 0.05 * value.
Trend divergence_trend(double half_value, double value);

struct ConditionEntry {
    std::string name;
    double value = 0.0;
    double half_value = 0.0;  // same functional on the first half of the data
    Trend trend = Trend::Converging;
    std::string feeds;  // the maximal inequality this condition controls
};

struct ConditionReport {
    double p = 2.0;
    double q = 2.0;
    double wiener_p2 = 0.0;
    double wiener_p = 0.0;
    double hs = 0.0;
    bool interp_valid = false;
    Trend trend = Trend::Converging;  // trend of wiener_p2
    std::string block_convention = "half-open [n, n+1)";
    std::vector<ConditionEntry> conditions;

    bool dilated = false;
    double inner_wiener_q = 0.0;  // sum_n B_n(beta)^q
    double inner_l1 = 0.0;        // sum_j |beta_j|
    double rhs_l1_dilated = 0.0;  // (sum|beta|) (sum B(alpha)^2)^{1/2}
    double rhs_interp = 0.0;      // (sum B(alpha)^p)^{1/p} (sum B(beta)^q)^{1/q}
};

/// Block functionals are halved by block index (blocks below the midpoint of
/// the occupied block range); hs is halved by coefficient index.
ConditionReport condition_report(const APSeries& series, double p, double q, double tol = 1e-6);
ConditionReport condition_report(const DilatedSeries& ds, double p, double q, double tol = 1e-6);

}  // namespace apstep
