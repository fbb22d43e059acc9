#ifndef RARNET_DISTANCE_HPP
#define RARNET_DISTANCE_HPP

#include "rarnet/errors.hpp"

#include <Eigen/Core>

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace rarnet {

/// Per-lag angles and direct distances derived from model coefficients.
/// The angle between the modeled term and the lag-i term is
///   theta_i = arccos(a_i / ||a||)
/// and the direct distance is d_i = |tan(theta_i)|, computed in the
/// algebraically equal but better conditioned form
///   d_i = sqrt(sum_{j != i} a_j^2) / |a_i|.
/// The intercept and the noise term carry no time information and are
/// excluded from the input.
template <typename Scalar = double>
struct DistanceVector {
    std::vector<int> lags;
    Eigen::Vector<Scalar, Eigen::Dynamic> angles;     // in [0, pi]
    Eigen::Vector<Scalar, Eigen::Dynamic> distances;  // positive unless degenerate
    bool degenerate = false;  // single-term model: its distance is exactly 0
};

template <typename Derived>
DistanceVector<typename Derived::Scalar> direct_distances(const Eigen::MatrixBase<Derived>& coefficients,
                                                          std::span<const int> lags) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index m = coefficients.size();
    if (m == 0) throw InputError("direct distances need at least one coefficient");
    if (static_cast<Eigen::Index>(lags.size()) != m) {
        throw InputError("coefficient/lag length mismatch");
    }
    for (Eigen::Index i = 0; i < m; ++i) {
        if (coefficients(i) == Scalar(0) || !std::isfinite(coefficients(i))) {
            throw InputError("coefficient for lag " + std::to_string(lags[i]) +
                             " is zero or non-finite; distance undefined");
        }
    }

    DistanceVector<Scalar> dv;
    dv.lags.assign(lags.begin(), lags.end());
    dv.angles.resize(m);
    dv.distances.resize(m);

    const Scalar norm2 = coefficients.squaredNorm();
    const Scalar norm = std::sqrt(norm2);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Scalar a = coefficients(i);
        const Scalar c = std::clamp(a / norm, Scalar(-1), Scalar(1));
        dv.angles(i) = std::acos(c);
        const Scalar rest = std::max(norm2 - a * a, Scalar(0));
        dv.distances(i) = std::sqrt(rest) / std::abs(a);
        if (dv.distances(i) == Scalar(0)) dv.degenerate = true;
    }
    return dv;
}

} // namespace rarnet

#endif
