#ifndef RARNET_EXPORT_HPP
#define RARNET_EXPORT_HPP

#include "rarnet/network.hpp"
#include "rarnet/rar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rarnet {

/// Serializable model record: the schema's "model" object. Stats fields
/// (sse, n_eff, k, sic) are present only for models that went through a
/// fit; paper-style coefficient files omit them.
struct ModelRecord {
    std::string name;
    std::optional<double> intercept;
    std::vector<int> lags;
    std::vector<double> coefficients;
    bool fitted = false;
    double sse = 0.0;
    std::int64_t n_eff = 0;
    int k = 0;
    double sic = 0.0;

    bool operator==(const ModelRecord&) const = default;
};

ModelRecord to_record(const FittedModel& model, const std::string& name = "");

/// Everything one run produces, serializable as one JSON document.
struct ExportBundle {
    std::string tool_version;
    std::string series_name;
    std::optional<LagDictionary> dictionary;
    ModelRecord model;
    std::optional<DistanceVector<double>> distances;
    std::optional<TemporalNetwork> network;
    std::optional<OptimalPathNetwork> tree;
};

bool operator==(const ExportBundle& a, const ExportBundle& b);

struct DotOptions {
    int label_precision = 4;
    bool highlight_tree = true;
};

/// Full-window digraph with absolute integer node names; initial nodes
/// are drawn as boxes.
std::string export_dot(const TemporalNetwork& network, const DotOptions& options = {});

/// Optimal-path digraph with target-relative node names ("t", "t-1", ...).
/// Model-term nodes are filled gray, gap-filling nodes white; tree edges
/// are bold when highlighting is on.
std::string export_dot(const OptimalPathNetwork& opn, const DotOptions& options = {});

/// JSON document for the bundle (schema_version "1"). Lossless for all
/// finite numeric fields; unreachable nodes are omitted from
/// tree.node_distances.
std::string export_json(const ExportBundle& bundle);

ExportBundle read_bundle_json(const std::string& text);

/// Reads a model from a JSON document: either a bare model object
/// ({"name", "intercept", "lags", "coefficients", ...}) or a full bundle.
ModelRecord read_model_json(const std::string& text);
ModelRecord load_model_file(const std::string& path);

/// JSON document for a selection run: dictionary, best model, ranked
/// list, subset counts, timing.
std::string selection_to_json(const SelectionResult& result, const std::string& series_name,
                              const LagDictionary& dict);

} // namespace rarnet

#endif
