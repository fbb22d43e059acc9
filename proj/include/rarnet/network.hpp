#ifndef RARNET_NETWORK_HPP
#define RARNET_NETWORK_HPP

#include "rarnet/distance.hpp"

#include <utility>
#include <vector>

namespace rarnet {

/// A directed lag edge between temporal nodes: target - source = lag,
/// weight = direct distance of that lag.
struct LagEdge {
    int source = 0;
    int target = 0;
    int lag = 0;
    double weight = 0.0;
};

/// Time-indexed expansion of a model over nodes 1..window: node tau
/// receives one in-edge per model lag whenever tau - lag >= 1. The first
/// max_lag nodes are the initial nodes (incomplete in-neighborhood).
struct TemporalNetwork {
    int window = 0;
    int max_lag = 0;
    std::vector<int> model_lags;
    std::vector<double> lag_weights;  // aligned with model_lags
    std::vector<LagEdge> edges;       // ordered by (target, lag)

    std::vector<int> initial_times() const;
    double weight_of_lag(int lag) const;
};

/// Union of shortest paths from every node into one target node.
/// node_distance and next_hop are indexed by node time (entry 0 unused);
/// unreachable nodes carry +infinity and next hop 0.
struct OptimalPathNetwork {
    int target = 0;
    int window = 0;
    int max_lag = 0;
    std::vector<int> model_lags;
    std::vector<double> lag_weights;
    std::vector<LagEdge> tree_edges;    // one outgoing edge per reachable non-target node
    std::vector<double> node_distance;  // size window + 1
    std::vector<int> next_hop;          // size window + 1, 0 = none
};

/// Tree degrees plus the hub ranking (in-tree degree descending, ties to
/// the earlier time).
struct NodeStats {
    std::vector<int> in_degree;   // size window + 1
    std::vector<int> out_degree;  // size window + 1
    std::vector<std::pair<int, int>> hubs;  // (node time, in-tree degree)
    int max_in_degree = 0;
};

/// Default expansion window: ceil(2.5 * max_lag), at least max_lag + 1.
int default_window(int max_lag);

/// Expands a distance vector into the full temporal network over nodes
/// 1..window. Requires window > max lag and strictly positive distances.
TemporalNetwork expand_network(const DistanceVector<double>& distances, int window);

/// Single-target shortest paths over the expanded network. Equal-cost
/// choices prefer the smallest lag, so trees are deterministic.
OptimalPathNetwork optimal_path_network(const TemporalNetwork& network, int target);

NodeStats node_statistics(const OptimalPathNetwork& opn);

/// Histogram of tree-edge lags, ascending by lag.
std::vector<std::pair<int, int>> chain_profile(const OptimalPathNetwork& opn);

} // namespace rarnet

#endif
