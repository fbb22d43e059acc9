#ifndef RARNET_RAR_HPP
#define RARNET_RAR_HPP

#include "rarnet/series.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace rarnet {

/// Candidate term dictionary: all lags 1..max_lag, optionally an intercept.
/// Exhaustive search walks all 2^max_lag lag subsets, so max_lag is capped.
struct LagDictionary {
    int max_lag = 1;
    bool include_intercept = true;
};

inline constexpr int kMaxLagLimit = 30;

/// Strictly increasing lags, each in 1..max_lag. May be empty.
using LagSubset = std::vector<int>;

/// A reduced autoregressive model
///   x(t) = a0 + sum_i a_i x(t - l_i) + eps(t)
/// fit by least squares on the fixed rows t = max_lag+1 .. n.
struct FittedModel {
    bool has_intercept = false;
    double intercept = 0.0;
    LagSubset lags;
    Eigen::VectorXd coefficients;  // aligned with lags
    Eigen::VectorXd residuals;     // over the n_eff regression rows
    double sse = 0.0;
    Eigen::Index n_eff = 0;
    int k = 0;  // estimated parameters, intercept included
    double sic = 0.0;
    bool perfect_fit = false;  // sse == 0; sic is -infinity
};

struct SicScore {
    double value = 0.0;
    bool perfect_fit = false;
};

struct SelectionResult {
    FittedModel best;
    std::vector<FittedModel> ranked;  // ascending SIC, best first, top_k entries
    std::uint64_t subsets_evaluated = 0;
    std::uint64_t subsets_rank_deficient = 0;
    double wall_time_seconds = 0.0;
};

void validate_dictionary(const LagDictionary& dict);
void validate_subset(const LagSubset& subset, const LagDictionary& dict);

/// Schwarz information criterion n*ln(sse/n) + k*ln(n). A perfect fit
/// (sse == 0) is reported as -infinity with the perfect_fit flag set
/// instead of evaluating ln(0).
SicScore sic_score(std::int64_t n_eff, int k, double sse);

/// Least-squares fit of one lag subset. Rows are t = dict.max_lag+1 .. n
/// regardless of the subset, so SIC values are comparable across subsets.
/// Throws NumericError on rank deficiency (naming the offending column)
/// or insufficient rows.
FittedModel fit_ols(const TimeSeries& series, const LagSubset& subset, const LagDictionary& dict);

/// SIC-minimizing exhaustive search over all 2^max_lag lag subsets.
/// Rank-deficient subsets are recorded and skipped. The result is
/// independent of worker count: candidates are merged under the total
/// order (finite before perfect fits, then SIC, then k, then
/// lexicographically smallest lag list).
SelectionResult exhaustive_search(const TimeSeries& series, const LagDictionary& dict,
                                  int top_k = 5, int workers = 1);

/// Renders the model equation with 4-decimal coefficients, e.g.
/// "x(t) = 1.0100·x(t−1) − 0.6100·x(t−3) + 0.1100·x(t−6) + ε(t)".
std::string model_report(const FittedModel& model);

} // namespace rarnet

#endif
