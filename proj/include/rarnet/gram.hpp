#ifndef RARNET_GRAM_HPP
#define RARNET_GRAM_HPP

#include <Eigen/Core>

#include <cassert>
#include <cmath>
#include <span>
#include <vector>

namespace rarnet {

/// Precomputed normal-equation data for lagged least squares on a series
/// x(1..n), regression rows fixed at t = max_lag+1 .. n for every subset.
///
/// Column 0 of the design is the all-ones intercept column; column j
/// (1 <= j <= max_lag) is the lag-j regressor x(t-j). `gram` holds X^T X
/// over all max_lag+1 columns, `moment` holds X^T y and `yty` holds y^T y,
/// so any lag subset can be fit by solving the corresponding principal
/// submatrix without another pass over the data.
template <typename Scalar>
struct GramSystem {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram;
    Eigen::Vector<Scalar, Eigen::Dynamic> moment;
    Scalar yty = Scalar(0);
    Eigen::Index n_eff = 0;
    int max_lag = 0;
};

/// Least-squares solution for one lag subset, solved from a GramSystem.
template <typename Scalar>
struct SubsetSolution {
    Eigen::Vector<Scalar, Eigen::Dynamic> coeffs;  // intercept first when present
    Scalar sse = Scalar(0);
    bool rank_deficient = false;
    int deficient_column = -1;  // design column index: 0 = intercept, j = lag j
};

/// Builds the shared Gram system for all subsets of lags 1..max_lag.
/// Requires x.size() > max_lag.
template <typename Derived>
GramSystem<typename Derived::Scalar> build_gram_system(const Eigen::MatrixBase<Derived>& x, int max_lag) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = x.size();
    assert(max_lag >= 1 && n > max_lag);
    const Eigen::Index n_eff = n - max_lag;
    const int cols = max_lag + 1;

    // Lagged columns as views into the series; col 0 is the intercept.
    GramSystem<Scalar> sys;
    sys.max_lag = max_lag;
    sys.n_eff = n_eff;
    sys.gram.setZero(cols, cols);
    sys.moment.setZero(cols);

    auto column = [&](int j) { return x.segment(max_lag - j, n_eff); };
    auto y = x.segment(max_lag, n_eff);

    sys.yty = y.squaredNorm();
    sys.gram(0, 0) = Scalar(n_eff);
    sys.moment(0) = y.sum();
    for (int j = 1; j < cols; ++j) {
        sys.gram(0, j) = column(j).sum();
        sys.gram(j, 0) = sys.gram(0, j);
        sys.moment(j) = column(j).dot(y);
        for (int i = 1; i <= j; ++i) {
            sys.gram(i, j) = column(i).dot(column(j));
            sys.gram(j, i) = sys.gram(i, j);
        }
    }
    return sys;
}

namespace detail {

/// In-place LDL^T factorization of a symmetric positive semidefinite matrix
/// with a relative pivot test: pivot < tol * max(diag) flags rank deficiency.
/// Returns the index of the offending column, or -1 on success.
template <typename Scalar>
int ldlt_factor(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a, Scalar pivot_tol) {
    const int k = static_cast<int>(a.rows());
    Scalar max_diag = Scalar(0);
    for (int i = 0; i < k; ++i) max_diag = std::max(max_diag, a(i, i));
    const Scalar floor = pivot_tol * max_diag;

    // Lower triangle becomes L (unit diagonal implicit); diagonal becomes D.
    for (int j = 0; j < k; ++j) {
        Scalar d = a(j, j);
        for (int m = 0; m < j; ++m) d -= a(j, m) * a(j, m) * a(m, m);
        if (!(d > floor)) return j;
        a(j, j) = d;
        for (int i = j + 1; i < k; ++i) {
            Scalar s = a(i, j);
            for (int m = 0; m < j; ++m) s -= a(i, m) * a(j, m) * a(m, m);
            a(i, j) = s / d;
        }
    }
    return -1;
}

/// Solves L D L^T beta = rhs for a factorization produced by ldlt_factor.
template <typename Scalar>
void ldlt_solve(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                Eigen::Vector<Scalar, Eigen::Dynamic>& rhs) {
    const int k = static_cast<int>(a.rows());
    for (int i = 0; i < k; ++i)
        for (int m = 0; m < i; ++m) rhs(i) -= a(i, m) * rhs(m);
    for (int i = 0; i < k; ++i) rhs(i) /= a(i, i);
    for (int i = k - 1; i >= 0; --i)
        for (int m = i + 1; m < k; ++m) rhs(i) -= a(m, i) * rhs(m);
}

} // namespace detail

/// Solves the normal equations for the given lag subset (ascending lags,
/// each in 1..max_lag). sse comes from the Gram identity
/// y^T y - moment^T beta, clamped at zero.
template <typename Scalar>
SubsetSolution<Scalar> solve_subset(const GramSystem<Scalar>& sys, std::span<const int> lags,
                                    bool intercept, Scalar pivot_tol = Scalar(1e-10)) {
    const int k = static_cast<int>(lags.size()) + (intercept ? 1 : 0);
    SubsetSolution<Scalar> sol;
    if (k == 0) {
        // No parameters at all: residuals are y itself.
        sol.coeffs.resize(0);
        sol.sse = sys.yty;
        return sol;
    }

    std::vector<int> idx;
    idx.reserve(k);
    if (intercept) idx.push_back(0);
    for (int lag : lags) idx.push_back(lag);

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(k, k);
    Eigen::Vector<Scalar, Eigen::Dynamic> rhs(k);
    for (int j = 0; j < k; ++j) {
        rhs(j) = sys.moment(idx[j]);
        for (int i = 0; i < k; ++i) a(i, j) = sys.gram(idx[i], idx[j]);
    }

    const int bad = detail::ldlt_factor(a, pivot_tol);
    if (bad >= 0) {
        sol.rank_deficient = true;
        sol.deficient_column = idx[bad];
        return sol;
    }
    Eigen::Vector<Scalar, Eigen::Dynamic> beta = rhs;
    detail::ldlt_solve(a, beta);

    sol.coeffs = beta;
    sol.sse = sys.yty - rhs.dot(beta);
    if (sol.sse < Scalar(0)) sol.sse = Scalar(0);
    return sol;
}

} // namespace rarnet

#endif
