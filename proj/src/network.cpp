#include "rarnet/network.hpp"

#include "rarnet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace rarnet {

std::vector<int> TemporalNetwork::initial_times() const {
    std::vector<int> times(static_cast<std::size_t>(std::min(max_lag, window)));
    std::iota(times.begin(), times.end(), 1);
    return times;
}

double TemporalNetwork::weight_of_lag(int lag) const {
    for (std::size_t i = 0; i < model_lags.size(); ++i)
        if (model_lags[i] == lag) return lag_weights[i];
    throw InputError("lag " + std::to_string(lag) + " not in model");
}

int default_window(int max_lag) {
    return std::max(max_lag + 1, static_cast<int>(std::ceil(2.5 * max_lag)));
}

TemporalNetwork expand_network(const DistanceVector<double>& distances, int window) {
    if (distances.lags.empty()) throw InputError("cannot expand an empty model");
    if (distances.degenerate) {
        throw InputError("degenerate distance vector: zero-weight edges are not representable");
    }
    const int max_lag = *std::max_element(distances.lags.begin(), distances.lags.end());
    if (window <= max_lag) {
        throw InputError("window (" + std::to_string(window) + ") must exceed the largest lag (" +
                         std::to_string(max_lag) + ")");
    }

    TemporalNetwork net;
    net.window = window;
    net.max_lag = max_lag;
    net.model_lags = distances.lags;
    net.lag_weights.assign(distances.distances.begin(), distances.distances.end());

    for (int tau = 2; tau <= window; ++tau) {
        for (std::size_t i = 0; i < net.model_lags.size(); ++i) {
            const int lag = net.model_lags[i];
            if (tau - lag >= 1) {
                net.edges.push_back({tau - lag, tau, lag, net.lag_weights[i]});
            }
        }
    }
    return net;
}

OptimalPathNetwork optimal_path_network(const TemporalNetwork& network, int target) {
    if (target < 1 || target > network.window) {
        throw InputError("target " + std::to_string(target) + " outside node range 1.." +
                         std::to_string(network.window));
    }
    constexpr double inf = std::numeric_limits<double>::infinity();

    OptimalPathNetwork opn;
    opn.target = target;
    opn.window = network.window;
    opn.max_lag = network.max_lag;
    opn.model_lags = network.model_lags;
    opn.lag_weights = network.lag_weights;
    opn.node_distance.assign(static_cast<std::size_t>(network.window) + 1, inf);
    opn.next_hop.assign(static_cast<std::size_t>(network.window) + 1, 0);
    opn.node_distance[static_cast<std::size_t>(target)] = 0.0;

    // All edges point forward in time, so relaxing nodes in decreasing time
    // below the target settles every distance in one sweep. Lags are walked
    // in ascending order with a strict comparison: equal-cost paths resolve
    // to the smallest lag.
    for (int u = target - 1; u >= 1; --u) {
        double best = inf;
        int best_lag = 0;
        for (std::size_t i = 0; i < network.model_lags.size(); ++i) {
            const int v = u + network.model_lags[i];
            if (v > target) continue;
            const double dv = opn.node_distance[static_cast<std::size_t>(v)];
            if (dv == inf) continue;
            const double cost = network.lag_weights[i] + dv;
            if (cost < best) {
                best = cost;
                best_lag = network.model_lags[i];
            }
        }
        if (best_lag != 0) {
            opn.node_distance[static_cast<std::size_t>(u)] = best;
            opn.next_hop[static_cast<std::size_t>(u)] = u + best_lag;
        }
    }

    for (int u = 1; u <= network.window; ++u) {
        const int v = opn.next_hop[static_cast<std::size_t>(u)];
        if (v != 0) {
            opn.tree_edges.push_back({u, v, v - u, network.weight_of_lag(v - u)});
        }
    }
    return opn;
}

NodeStats node_statistics(const OptimalPathNetwork& opn) {
    NodeStats stats;
    stats.in_degree.assign(static_cast<std::size_t>(opn.window) + 1, 0);
    stats.out_degree.assign(static_cast<std::size_t>(opn.window) + 1, 0);
    for (const auto& e : opn.tree_edges) {
        ++stats.out_degree[static_cast<std::size_t>(e.source)];
        ++stats.in_degree[static_cast<std::size_t>(e.target)];
    }
    for (int u = 1; u <= opn.window; ++u) {
        if (stats.in_degree[static_cast<std::size_t>(u)] > 0) {
            stats.hubs.emplace_back(u, stats.in_degree[static_cast<std::size_t>(u)]);
        }
    }
    std::sort(stats.hubs.begin(), stats.hubs.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    stats.max_in_degree = stats.hubs.empty() ? 0 : stats.hubs.front().second;
    return stats;
}

std::vector<std::pair<int, int>> chain_profile(const OptimalPathNetwork& opn) {
    std::map<int, int> hist;
    for (const auto& e : opn.tree_edges) ++hist[e.lag];
    return {hist.begin(), hist.end()};
}

} // namespace rarnet
