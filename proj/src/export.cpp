#include "rarnet/export.hpp"

#include "rarnet/errors.hpp"
#include "rarnet/version.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace rarnet {

using nlohmann::json;

namespace {

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

std::string quoted(const std::string& id) { return "\"" + id + "\""; }

// Target-relative node name: "t", "t-3", "t+2".
std::string relative_name(int node, int target) {
    const int delay = target - node;
    if (delay == 0) return "t";
    if (delay > 0) return "t-" + std::to_string(delay);
    return "t+" + std::to_string(-delay);
}

json edges_to_json(const std::vector<LagEdge>& edges) {
    json arr = json::array();
    for (const auto& e : edges) arr.push_back({e.source, e.target, e.lag, e.weight});
    return arr;
}

std::vector<LagEdge> edges_from_json(const json& arr) {
    std::vector<LagEdge> edges;
    for (const auto& item : arr) {
        edges.push_back({item.at(0).get<int>(), item.at(1).get<int>(), item.at(2).get<int>(),
                         item.at(3).get<double>()});
    }
    return edges;
}

// model_lags / lag_weights / max_lag as recoverable from an edge list.
void recover_lags(const std::vector<LagEdge>& edges, std::vector<int>& lags, std::vector<double>& weights,
                  int& max_lag) {
    lags.clear();
    weights.clear();
    max_lag = 0;
    for (const auto& e : edges) {
        if (std::find(lags.begin(), lags.end(), e.lag) == lags.end()) {
            lags.push_back(e.lag);
            weights.push_back(e.weight);
        }
        max_lag = std::max(max_lag, e.lag);
    }
    std::vector<std::size_t> order(lags.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lags[a] < lags[b]; });
    std::vector<int> sl;
    std::vector<double> sw;
    for (auto i : order) {
        sl.push_back(lags[i]);
        sw.push_back(weights[i]);
    }
    lags = std::move(sl);
    weights = std::move(sw);
}

json model_to_json(const ModelRecord& m) {
    json j;
    if (!m.name.empty()) j["name"] = m.name;
    j["intercept"] = m.intercept ? json(*m.intercept) : json(nullptr);
    j["lags"] = m.lags;
    j["coefficients"] = m.coefficients;
    if (m.fitted) {
        j["sse"] = m.sse;
        j["n_eff"] = m.n_eff;
        j["k"] = m.k;
        // A perfect fit carries sic = -infinity, which JSON cannot hold.
        j["sic"] = std::isfinite(m.sic) ? json(m.sic) : json(nullptr);
    }
    return j;
}

ModelRecord model_from_json(const json& j) {
    ModelRecord m;
    m.name = j.value("name", "");
    if (j.contains("intercept") && !j.at("intercept").is_null()) {
        m.intercept = j.at("intercept").get<double>();
    }
    if (j.contains("lags")) m.lags = j.at("lags").get<std::vector<int>>();
    if (j.contains("coefficients")) m.coefficients = j.at("coefficients").get<std::vector<double>>();
    if (m.lags.size() != m.coefficients.size()) {
        throw InputError("model document: lags and coefficients differ in length");
    }
    for (std::size_t i = 1; i < m.lags.size(); ++i) {
        if (m.lags[i] <= m.lags[i - 1]) throw InputError("model document: lags must be strictly increasing");
    }
    for (int lag : m.lags) {
        if (lag < 1) throw InputError("model document: lags must be positive");
    }
    if (j.contains("sse")) {
        m.fitted = true;
        m.sse = j.at("sse").get<double>();
        m.n_eff = j.value("n_eff", std::int64_t(0));
        m.k = j.value("k", 0);
        if (j.contains("sic") && !j.at("sic").is_null()) {
            m.sic = j.at("sic").get<double>();
        } else {
            m.sic = m.sse == 0.0 ? -std::numeric_limits<double>::infinity() : 0.0;
        }
    }
    return m;
}

} // namespace

ModelRecord to_record(const FittedModel& model, const std::string& name) {
    ModelRecord m;
    m.name = name;
    if (model.has_intercept) m.intercept = model.intercept;
    m.lags = model.lags;
    m.coefficients.assign(model.coefficients.begin(), model.coefficients.end());
    m.fitted = true;
    m.sse = model.sse;
    m.n_eff = model.n_eff;
    m.k = model.k;
    m.sic = model.sic;
    return m;
}

bool operator==(const ExportBundle& a, const ExportBundle& b) {
    auto dv_eq = [](const DistanceVector<double>& x, const DistanceVector<double>& y) {
        return x.lags == y.lags && x.angles == y.angles && x.distances == y.distances &&
               x.degenerate == y.degenerate;
    };
    auto edge_eq = [](const LagEdge& x, const LagEdge& y) {
        return x.source == y.source && x.target == y.target && x.lag == y.lag && x.weight == y.weight;
    };
    auto edges_eq = [&](const std::vector<LagEdge>& x, const std::vector<LagEdge>& y) {
        return std::equal(x.begin(), x.end(), y.begin(), y.end(), edge_eq);
    };
    if (a.tool_version != b.tool_version || a.series_name != b.series_name) return false;
    if (a.dictionary.has_value() != b.dictionary.has_value()) return false;
    if (a.dictionary && (a.dictionary->max_lag != b.dictionary->max_lag ||
                         a.dictionary->include_intercept != b.dictionary->include_intercept))
        return false;
    if (!(a.model == b.model)) return false;
    if (a.distances.has_value() != b.distances.has_value()) return false;
    if (a.distances && !dv_eq(*a.distances, *b.distances)) return false;
    if (a.network.has_value() != b.network.has_value()) return false;
    if (a.network && !(a.network->window == b.network->window && edges_eq(a.network->edges, b.network->edges)))
        return false;
    if (a.tree.has_value() != b.tree.has_value()) return false;
    if (a.tree) {
        if (a.tree->target != b.tree->target || a.tree->window != b.tree->window ||
            !edges_eq(a.tree->tree_edges, b.tree->tree_edges) || a.tree->next_hop != b.tree->next_hop)
            return false;
        const auto& da = a.tree->node_distance;
        const auto& db = b.tree->node_distance;
        if (da.size() != db.size()) return false;
        for (std::size_t i = 0; i < da.size(); ++i) {
            if (da[i] != db[i] && !(std::isinf(da[i]) && std::isinf(db[i]))) return false;
        }
    }
    return true;
}

std::string export_dot(const TemporalNetwork& network, const DotOptions& options) {
    std::ostringstream out;
    out << "digraph rarnet {\n";
    out << "  rankdir=LR;\n";
    for (int tau = 1; tau <= network.window; ++tau) {
        out << "  " << quoted(std::to_string(tau));
        out << (tau <= network.max_lag ? " [shape=box]" : " [shape=circle]");
        out << ";\n";
    }
    for (const auto& e : network.edges) {
        out << "  " << quoted(std::to_string(e.source)) << " -> " << quoted(std::to_string(e.target))
            << " [label=" << quoted(fixed(e.weight, options.label_precision)) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const OptimalPathNetwork& opn, const DotOptions& options) {
    std::ostringstream out;
    out << "digraph rarnet {\n";
    out << "  rankdir=LR;\n";
    out << "  node [style=filled];\n";
    for (int tau = 1; tau <= opn.window; ++tau) {
        const int delay = opn.target - tau;
        const bool model_term =
            delay == 0 || std::find(opn.model_lags.begin(), opn.model_lags.end(), delay) != opn.model_lags.end();
        out << "  " << quoted(relative_name(tau, opn.target))
            << " [fillcolor=" << (model_term ? "gray" : "white") << "];\n";
    }
    for (const auto& e : opn.tree_edges) {
        out << "  " << quoted(relative_name(e.source, opn.target)) << " -> "
            << quoted(relative_name(e.target, opn.target))
            << " [label=" << quoted(fixed(e.weight, options.label_precision));
        if (options.highlight_tree) out << ", style=bold";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const ExportBundle& bundle) {
    json j;
    j["schema_version"] = "1";
    j["metadata"] = {{"tool", "rarnet"}, {"version", bundle.tool_version}};
    j["series"] = {{"name", bundle.series_name}};
    if (bundle.dictionary) {
        j["dictionary"] = {{"max_lag", bundle.dictionary->max_lag},
                           {"include_intercept", bundle.dictionary->include_intercept}};
    }
    j["model"] = model_to_json(bundle.model);
    if (bundle.distances) {
        const auto& dv = *bundle.distances;
        j["distances"] = {{"lags", dv.lags},
                          {"angles", std::vector<double>(dv.angles.begin(), dv.angles.end())},
                          {"values", std::vector<double>(dv.distances.begin(), dv.distances.end())},
                          {"degenerate", dv.degenerate}};
    }
    if (bundle.network) {
        j["network"] = {{"window", bundle.network->window}, {"edges", edges_to_json(bundle.network->edges)}};
    }
    if (bundle.tree) {
        json nd = json::object();
        for (int u = 1; u <= bundle.tree->window; ++u) {
            const double d = bundle.tree->node_distance[static_cast<std::size_t>(u)];
            if (std::isfinite(d)) nd[std::to_string(u)] = d;
        }
        j["tree"] = {{"target", bundle.tree->target},
                     {"window", bundle.tree->window},
                     {"edges", edges_to_json(bundle.tree->tree_edges)},
                     {"node_distances", std::move(nd)}};
    }
    return j.dump(2) + "\n";
}

ExportBundle read_bundle_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("bundle document: ") + e.what());
    }
    ExportBundle b;
    if (j.value("schema_version", "") != "1") {
        throw InputError("bundle document: unsupported schema_version");
    }
    if (j.contains("metadata")) b.tool_version = j["metadata"].value("version", "");
    if (j.contains("series")) b.series_name = j["series"].value("name", "");
    if (j.contains("dictionary")) {
        LagDictionary dict;
        dict.max_lag = j["dictionary"].value("max_lag", 1);
        dict.include_intercept = j["dictionary"].value("include_intercept", true);
        b.dictionary = dict;
    }
    b.model = model_from_json(j.at("model"));
    if (j.contains("distances")) {
        const auto& d = j["distances"];
        DistanceVector<double> dv;
        dv.lags = d.at("lags").get<std::vector<int>>();
        const auto angles = d.at("angles").get<std::vector<double>>();
        const auto values = d.at("values").get<std::vector<double>>();
        dv.angles = Eigen::Map<const Eigen::VectorXd>(angles.data(), static_cast<Eigen::Index>(angles.size()));
        dv.distances = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
        dv.degenerate = d.value("degenerate", false);
        b.distances = std::move(dv);
    }
    if (j.contains("network")) {
        TemporalNetwork net;
        net.window = j["network"].at("window").get<int>();
        net.edges = edges_from_json(j["network"].at("edges"));
        recover_lags(net.edges, net.model_lags, net.lag_weights, net.max_lag);
        b.network = std::move(net);
    }
    if (j.contains("tree")) {
        OptimalPathNetwork opn;
        const auto& t = j["tree"];
        opn.target = t.at("target").get<int>();
        opn.window = t.at("window").get<int>();
        opn.tree_edges = edges_from_json(t.at("edges"));
        recover_lags(opn.tree_edges, opn.model_lags, opn.lag_weights, opn.max_lag);
        opn.node_distance.assign(static_cast<std::size_t>(opn.window) + 1,
                                 std::numeric_limits<double>::infinity());
        opn.next_hop.assign(static_cast<std::size_t>(opn.window) + 1, 0);
        for (const auto& [key, value] : t.at("node_distances").items()) {
            const int node = std::stoi(key);
            if (node < 1 || node > opn.window) throw InputError("bundle document: node_distances key out of range");
            opn.node_distance[static_cast<std::size_t>(node)] = value.get<double>();
        }
        for (const auto& e : opn.tree_edges) opn.next_hop[static_cast<std::size_t>(e.source)] = e.target;
        b.tree = std::move(opn);
    }
    return b;
}

ModelRecord read_model_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("model document: ") + e.what());
    }
    const json& m = j.contains("model") ? j.at("model") : j;
    ModelRecord record = model_from_json(m);
    if (record.lags.empty()) throw InputError("model document: no lag terms");
    return record;
}

ModelRecord load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_model_json(buf.str());
}

std::string selection_to_json(const SelectionResult& result, const std::string& series_name,
                              const LagDictionary& dict) {
    json j;
    j["schema_version"] = "1";
    j["metadata"] = {{"tool", "rarnet"}, {"version", kVersion}};
    j["series"] = {{"name", series_name}};
    j["dictionary"] = {{"max_lag", dict.max_lag}, {"include_intercept", dict.include_intercept}};
    j["best"] = model_to_json(to_record(result.best));
    json ranked = json::array();
    for (const auto& m : result.ranked) ranked.push_back(model_to_json(to_record(m)));
    j["ranked"] = std::move(ranked);
    j["subsets_evaluated"] = result.subsets_evaluated;
    j["subsets_rank_deficient"] = result.subsets_rank_deficient;
    j["timing"] = {{"wall_time_seconds", result.wall_time_seconds}};
    return j.dump(2) + "\n";
}

} // namespace rarnet
