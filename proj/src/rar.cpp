#include "rarnet/rar.hpp"

#include "rarnet/errors.hpp"
#include "rarnet/gram.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

namespace rarnet {

namespace {

using Mask = std::uint32_t;

LagSubset mask_to_lags(Mask mask, int max_lag) {
    LagSubset lags;
    for (int l = 1; l <= max_lag; ++l)
        if (mask >> (l - 1) & 1u) lags.push_back(l);
    return lags;
}

// One evaluated subset, kept light during the search; models worth
// returning are refit afterwards to attach residuals.
struct Candidate {
    double sic = 0.0;
    double sse = 0.0;
    Mask mask = 0;
    int k = 0;
    bool perfect_fit = false;
};

// Total order used for ranking and for the deterministic parallel merge:
// finite-SIC models first, then ascending SIC, ties by smaller k, then
// lexicographically smallest lag list.
bool candidate_less(const Candidate& a, const Candidate& b, int max_lag) {
    if (a.perfect_fit != b.perfect_fit) return !a.perfect_fit;
    if (!a.perfect_fit && a.sic != b.sic) return a.sic < b.sic;
    if (a.k != b.k) return a.k < b.k;
    if (a.mask == b.mask) return false;
    const LagSubset la = mask_to_lags(a.mask, max_lag);
    const LagSubset lb = mask_to_lags(b.mask, max_lag);
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

// Bounded sorted insert; keeps the top_k best candidates.
void insert_candidate(std::vector<Candidate>& top, const Candidate& c, std::size_t top_k, int max_lag) {
    auto less = [max_lag](const Candidate& x, const Candidate& y) { return candidate_less(x, y, max_lag); };
    if (top.size() == top_k && !less(c, top.back())) return;
    top.insert(std::upper_bound(top.begin(), top.end(), c, less), c);
    if (top.size() > top_k) top.pop_back();
}

} // namespace

void validate_dictionary(const LagDictionary& dict) {
    if (dict.max_lag < 1 || dict.max_lag > kMaxLagLimit) {
        throw InputError("max_lag must be in 1.." + std::to_string(kMaxLagLimit) + ", got " +
                         std::to_string(dict.max_lag));
    }
}

void validate_subset(const LagSubset& subset, const LagDictionary& dict) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > dict.max_lag) {
            throw InputError("lag " + std::to_string(subset[i]) + " outside dictionary range 1.." +
                             std::to_string(dict.max_lag));
        }
        if (i > 0 && subset[i] <= subset[i - 1]) {
            throw InputError("lag subset must be strictly increasing");
        }
    }
}

SicScore sic_score(std::int64_t n_eff, int k, double sse) {
    if (n_eff < 1) throw NumericError("sic_score: n_eff must be positive");
    if (sse < 0.0 || !std::isfinite(sse)) throw NumericError("sic_score: invalid sse");
    if (sse == 0.0) {
        return {-std::numeric_limits<double>::infinity(), true};
    }
    const double n = static_cast<double>(n_eff);
    return {n * std::log(sse / n) + k * std::log(n), false};
}

namespace {

// Completes a FittedModel from a subset solution: explicit residuals,
// sse from the residuals themselves, and the SIC score.
FittedModel finish_model(const TimeSeries& series, const LagSubset& lags, const LagDictionary& dict,
                         const Eigen::VectorXd& coeffs_with_intercept) {
    const Eigen::Index n = series.size();
    const Eigen::Index n_eff = n - dict.max_lag;
    const auto& x = series.values;

    FittedModel m;
    m.has_intercept = dict.include_intercept;
    m.lags = lags;
    m.n_eff = n_eff;
    m.k = static_cast<int>(lags.size()) + (dict.include_intercept ? 1 : 0);

    const int off = dict.include_intercept ? 1 : 0;
    if (dict.include_intercept) m.intercept = coeffs_with_intercept(0);
    m.coefficients = coeffs_with_intercept.segment(off, static_cast<Eigen::Index>(lags.size()));

    Eigen::VectorXd pred = Eigen::VectorXd::Constant(n_eff, dict.include_intercept ? m.intercept : 0.0);
    for (std::size_t i = 0; i < lags.size(); ++i) {
        pred += m.coefficients(static_cast<Eigen::Index>(i)) * x.segment(dict.max_lag - lags[i], n_eff);
    }
    m.residuals = x.segment(dict.max_lag, n_eff) - pred;
    m.sse = m.residuals.squaredNorm();

    const SicScore s = sic_score(n_eff, m.k, m.sse);
    m.sic = s.value;
    m.perfect_fit = s.perfect_fit;
    return m;
}

void check_rows(const TimeSeries& series, const LagDictionary& dict, int k) {
    const Eigen::Index n_eff = series.size() - dict.max_lag;
    if (n_eff <= k) {
        throw InputError("insufficient rows: " + std::to_string(series.size()) + " observations leave " +
                         std::to_string(std::max<Eigen::Index>(n_eff, 0)) + " regression rows for " +
                         std::to_string(k) + " parameters (max_lag " + std::to_string(dict.max_lag) + ")");
    }
}

std::string column_name(int col) {
    return col == 0 ? std::string("intercept") : "lag " + std::to_string(col);
}

} // namespace

FittedModel fit_ols(const TimeSeries& series, const LagSubset& subset, const LagDictionary& dict) {
    validate_dictionary(dict);
    validate_subset(subset, dict);
    const int k = static_cast<int>(subset.size()) + (dict.include_intercept ? 1 : 0);
    check_rows(series, dict, k);

    const auto sys = build_gram_system(series.values, dict.max_lag);
    const auto sol = solve_subset(sys, std::span<const int>(subset), dict.include_intercept);
    if (sol.rank_deficient) {
        throw NumericError("rank-deficient design: " + column_name(sol.deficient_column) +
                           " is collinear with the preceding columns");
    }
    return finish_model(series, subset, dict, sol.coeffs);
}

SelectionResult exhaustive_search(const TimeSeries& series, const LagDictionary& dict,
                                  int top_k, int workers) {
    validate_dictionary(dict);
    if (top_k < 1) throw InputError("top_k must be positive");
    check_rows(series, dict, dict.max_lag + (dict.include_intercept ? 1 : 0));

    const auto t0 = std::chrono::steady_clock::now();
    const auto sys = build_gram_system(series.values, dict.max_lag);
    const int w = dict.max_lag;
    const std::uint64_t total = std::uint64_t(1) << w;
    const std::size_t keep = static_cast<std::size_t>(top_k);

    if (workers < 1) workers = 1;
    const int nthreads = static_cast<int>(std::min<std::uint64_t>(workers, total));

    std::vector<std::vector<Candidate>> tops(nthreads);
    std::vector<std::uint64_t> deficient(nthreads, 0);

    // Masks are split into contiguous chunks; each worker reduces its chunk
    // to a local top-k under the same total order, so the merged result is
    // identical for any worker count.
    auto run_chunk = [&](int tid, std::uint64_t begin, std::uint64_t end) {
        std::vector<int> lags;
        lags.reserve(w);
        auto& top = tops[tid];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            lags.clear();
            for (int l = 1; l <= w; ++l)
                if (mask >> (l - 1) & 1u) lags.push_back(l);
            const auto sol = solve_subset(sys, std::span<const int>(lags), dict.include_intercept);
            if (sol.rank_deficient) {
                ++deficient[tid];
                continue;
            }
            Candidate c;
            c.mask = static_cast<Mask>(mask);
            c.k = static_cast<int>(lags.size()) + (dict.include_intercept ? 1 : 0);
            c.sse = sol.sse;
            const SicScore s = sic_score(sys.n_eff, c.k, sol.sse);
            c.sic = s.value;
            c.perfect_fit = s.perfect_fit;
            insert_candidate(top, c, keep, w);
        }
    };

    if (nthreads == 1) {
        run_chunk(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            const std::uint64_t begin = std::min<std::uint64_t>(t * chunk, total);
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
            pool.emplace_back(run_chunk, t, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<Candidate> merged;
    for (const auto& top : tops)
        for (const auto& c : top) insert_candidate(merged, c, keep, w);

    SelectionResult result;
    result.subsets_evaluated = total;
    for (auto d : deficient) result.subsets_rank_deficient += d;
    if (merged.empty()) {
        throw NumericError("exhaustive search failed: every subset was rank-deficient");
    }

    result.ranked.reserve(merged.size());
    for (const auto& c : merged) {
        result.ranked.push_back(fit_ols(series, mask_to_lags(c.mask, w), dict));
    }
    // The refit models carry sse from explicit residuals, which can differ
    // from the Gram-identity value in the last bits; re-sorting keeps the
    // returned list consistent with its own sic fields.
    std::sort(result.ranked.begin(), result.ranked.end(), [](const FittedModel& a, const FittedModel& b) {
        if (a.perfect_fit != b.perfect_fit) return !a.perfect_fit;
        if (!a.perfect_fit && a.sic != b.sic) return a.sic < b.sic;
        if (a.k != b.k) return a.k < b.k;
        return std::lexicographical_compare(a.lags.begin(), a.lags.end(), b.lags.begin(), b.lags.end());
    });
    result.best = result.ranked.front();
    result.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::string model_report(const FittedModel& model) {
    char buf[64];
    auto fixed4 = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.4f", v);
        return std::string(buf);
    };

    std::string eq = "x(t) = ";
    bool first = true;
    if (model.has_intercept) {
        if (model.intercept < 0.0) eq += "−" + fixed4(-model.intercept);
        else eq += fixed4(model.intercept);
        first = false;
    }
    for (std::size_t i = 0; i < model.lags.size(); ++i) {
        const double a = model.coefficients(static_cast<Eigen::Index>(i));
        if (first) {
            eq += (a < 0.0 ? "−" : "") + fixed4(std::abs(a));
            first = false;
        } else {
            eq += (a < 0.0 ? " − " : " + ") + fixed4(std::abs(a));
        }
        eq += "·x(t−" + std::to_string(model.lags[i]) + ")";
    }
    eq += first ? "ε(t)" : " + ε(t)";
    return eq;
}

} // namespace rarnet
