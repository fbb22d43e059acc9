#include "rarnet/errors.hpp"
#include "rarnet/export.hpp"
#include "rarnet/rar.hpp"
#include "rarnet/series.hpp"
#include "rarnet/version.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace rarnet;

namespace {

SeriesFormat parse_format(const std::string& name) {
    if (name == "single-column") return SeriesFormat::SingleColumn;
    if (name == "two-column") return SeriesFormat::TwoColumn;
    throw InputError("unknown format '" + name + "' (expected single-column or two-column)");
}

struct EmitSet {
    bool dot = true;
    bool json = true;
};

EmitSet parse_emit(const std::string& list) {
    EmitSet e{false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "dot") e.dot = true;
        else if (item == "json") e.json = true;
        else if (!item.empty()) throw InputError("unknown emit format '" + item + "' (expected dot,json)");
    }
    if (!e.dot && !e.json) throw InputError("--emit selected no formats");
    return e;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << content;
}

std::string relative_name(int node, int target) {
    const int delay = target - node;
    if (delay == 0) return "t";
    return delay > 0 ? "t-" + std::to_string(delay) : "t+" + std::to_string(-delay);
}

FittedModel model_from_record(const ModelRecord& record) {
    FittedModel m;
    m.has_intercept = record.intercept.has_value();
    m.intercept = record.intercept.value_or(0.0);
    m.lags = record.lags;
    m.coefficients = Eigen::Map<const Eigen::VectorXd>(record.coefficients.data(),
                                                       static_cast<Eigen::Index>(record.coefficients.size()));
    m.sse = record.sse;
    m.n_eff = record.n_eff;
    m.k = record.k;
    m.sic = record.sic;
    return m;
}

// The human-readable run report: equation, distance table, tree, hubs.
std::string render_report(const ModelRecord& record, const DistanceVector<double>& distances,
                          const OptimalPathNetwork& opn, const std::optional<SeriesSummary>& summary,
                          const std::string& series_name) {
    std::ostringstream out;
    char buf[128];

    if (summary) {
        std::snprintf(buf, sizeof(buf), "series: %s (n=%lld, min=%.4g, max=%.4g, mean=%.4g, sd=%.4g)\n",
                      series_name.c_str(), static_cast<long long>(summary->n), summary->min, summary->max,
                      summary->mean, summary->stddev);
        out << buf;
    } else if (!series_name.empty()) {
        out << "model file: " << series_name << "\n";
    }

    out << "model: " << model_report(model_from_record(record)) << "\n";
    if (record.fitted) {
        std::snprintf(buf, sizeof(buf), "fit: k=%d, n_eff=%lld, sse=%.4f, sic=%.4f\n", record.k,
                      static_cast<long long>(record.n_eff), record.sse, record.sic);
        out << buf;
    }

    out << "\ndirect distances:\n";
    out << "  lag  coefficient    angle  distance\n";
    for (std::size_t i = 0; i < distances.lags.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "  %3d  %11.4f  %7.4f  %8.4f\n", distances.lags[i],
                      record.coefficients[i], distances.angles(static_cast<Eigen::Index>(i)),
                      distances.distances(static_cast<Eigen::Index>(i)));
        out << buf;
    }

    out << "\noptimal path tree (target " << relative_name(opn.target, opn.target) << " at time "
        << opn.target << ", window " << opn.window << "):\n";
    for (const auto& e : opn.tree_edges) {
        std::snprintf(buf, sizeof(buf), "  %-5s -> %-5s  lag %2d  %8.4f\n",
                      relative_name(e.source, opn.target).c_str(), relative_name(e.target, opn.target).c_str(),
                      e.lag, e.weight);
        out << buf;
    }

    out << "\nnode shortest distances:\n";
    for (int u = opn.window; u >= 1; --u) {
        const double d = opn.node_distance[static_cast<std::size_t>(u)];
        if (u == opn.target || !std::isfinite(d)) continue;
        std::snprintf(buf, sizeof(buf), "  %-5s  %8.4f\n", relative_name(u, opn.target).c_str(), d);
        out << buf;
    }

    const NodeStats stats = node_statistics(opn);
    out << "\nhubs (in-tree degree):\n";
    for (const auto& [node, degree] : stats.hubs) {
        out << "  " << relative_name(node, opn.target) << ": " << degree << "\n";
    }

    out << "\ntree lag profile:";
    for (const auto& [lag, count] : chain_profile(opn)) {
        out << "  lag " << lag << " x" << count;
    }
    out << "\n";

    if (stats.max_in_degree <= 1) {
        out << "structure: chain (max in-tree degree " << stats.max_in_degree << ")\n";
    } else {
        out << "structure: branched (max in-tree degree " << stats.max_in_degree << ")\n";
    }
    return out.str();
}

struct NetworkArtifacts {
    DistanceVector<double> distances;
    TemporalNetwork network;
    OptimalPathNetwork tree;
};

NetworkArtifacts build_network(const ModelRecord& record, int window, int target) {
    NetworkArtifacts art;
    art.distances = direct_distances(
        Eigen::Map<const Eigen::VectorXd>(record.coefficients.data(),
                                          static_cast<Eigen::Index>(record.coefficients.size())),
        std::span<const int>(record.lags));
    const int max_lag = record.lags.back();
    const int w = window > 0 ? window : default_window(max_lag);
    art.network = expand_network(art.distances, w);
    art.tree = optimal_path_network(art.network, target > 0 ? target : w);
    return art;
}

void emit_artifacts(const fs::path& out_dir, const EmitSet& emit, const ExportBundle& bundle,
                    const NetworkArtifacts& art) {
    fs::create_directories(out_dir);
    if (emit.dot) {
        write_file(out_dir / "network.dot", export_dot(art.network));
        write_file(out_dir / "tree.dot", export_dot(art.tree));
    }
    if (emit.json) {
        write_file(out_dir / "bundle.json", export_json(bundle));
    }
}

// Deterministic standard normal: explicit Box-Muller over mt19937 so the
// stream does not depend on the standard library's distribution choices.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(static_cast<std::mt19937_64::result_type>(seed)) {}

    double operator()() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    double next_unit() {
        // in (0, 1]
        return (static_cast<double>(rng_()) + 1.0) / (static_cast<double>(std::mt19937_64::max()) + 1.0);
    }
    std::mt19937_64 rng_;
};

TimeSeries synthesize(const ModelRecord& record, Eigen::Index n, std::uint64_t seed, double noise_sd,
                      Eigen::Index burn_in) {
    const int max_lag = record.lags.back();
    if (n < 2) throw InputError("synth: need at least 2 output points");
    NormalSampler normal(seed);

    const Eigen::Index total = burn_in + n;
    std::vector<double> x(static_cast<std::size_t>(max_lag) + total, 0.0);
    for (std::size_t t = static_cast<std::size_t>(max_lag); t < x.size(); ++t) {
        double v = record.intercept.value_or(0.0);
        for (std::size_t i = 0; i < record.lags.size(); ++i) {
            v += record.coefficients[i] * x[t - static_cast<std::size_t>(record.lags[i])];
        }
        v += noise_sd * normal();
        if (!std::isfinite(v)) throw NumericError("synth: model is unstable, series diverged");
        x[t] = v;
    }

    TimeSeries series;
    series.name = record.name.empty() ? "synthetic" : record.name + "-synthetic";
    series.values = Eigen::Map<const Eigen::VectorXd>(x.data() + max_lag + burn_in, n);
    return series;
}

void print_selection_summary(const SelectionResult& result) {
    std::cout << "best model: " << model_report(result.best) << "\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  k=%d  n_eff=%lld  sse=%.4f  sic=%.4f\n", result.best.k,
                  static_cast<long long>(result.best.n_eff), result.best.sse, result.best.sic);
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "subsets evaluated: %llu (%llu rank-deficient), %.3f s\n",
                  static_cast<unsigned long long>(result.subsets_evaluated),
                  static_cast<unsigned long long>(result.subsets_rank_deficient), result.wall_time_seconds);
    std::cout << buf;
    std::cout << "rank   sic          k  lags\n";
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
        const auto& m = result.ranked[i];
        std::snprintf(buf, sizeof(buf), "%4zu   %-12.4f %d  {", i + 1, m.sic, m.k);
        std::cout << buf;
        for (std::size_t l = 0; l < m.lags.size(); ++l) std::cout << (l ? "," : "") << m.lags[l];
        std::cout << "}\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rarnet: reduced autoregressive models as temporal networks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    // Shared option storage.
    std::string input, format = "single-column", model_path, out_dir = ".", emit_list = "dot,json";
    std::string synth_out;
    int max_lag = 15, top_k = 5, workers = 1, window = 0, target = 0;
    bool no_intercept = false;
    std::uint64_t seed = 1;
    long long synth_n = 500;
    double noise_sd = 1.0;
    long long burn_in = 200;

    auto add_series_opts = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "series file")->required();
        cmd->add_option("--format", format, "single-column or two-column")
            ->check(CLI::IsMember({"single-column", "two-column"}));
        cmd->add_option("--max-lag", max_lag, "largest candidate lag (dictionary size)");
        cmd->add_flag("--no-intercept", no_intercept, "fit without intercept");
        cmd->add_option("--top-k", top_k, "ranked models to keep");
        cmd->add_option("--workers", workers, "parallel workers for subset search");
    };

    auto* select = app.add_subcommand("select", "fit the SIC-optimal lag subset by exhaustive search");
    add_series_opts(select);
    select->add_option("--out-dir", out_dir, "output directory");

    auto* network = app.add_subcommand("network", "expand a model into a temporal network and its optimal paths");
    network->add_option("--model", model_path, "model JSON file")->required();
    network->add_option("--window", window, "expansion window (default 2.5x max lag)");
    network->add_option("--target", target, "target node time (default last node)");
    network->add_option("--out-dir", out_dir, "output directory");
    network->add_option("--emit", emit_list, "comma list of dot,json");

    auto* pipeline = app.add_subcommand("pipeline", "load -> select -> network -> report");
    pipeline->add_option("--input", input, "series file");
    pipeline->add_option("--format", format, "single-column or two-column")
        ->check(CLI::IsMember({"single-column", "two-column"}));
    pipeline->add_option("--model", model_path, "model JSON file (skips fitting)");
    pipeline->add_option("--max-lag", max_lag, "largest candidate lag");
    pipeline->add_flag("--no-intercept", no_intercept, "fit without intercept");
    pipeline->add_option("--top-k", top_k, "ranked models to keep");
    pipeline->add_option("--workers", workers, "parallel workers for subset search");
    pipeline->add_option("--window", window, "expansion window");
    pipeline->add_option("--target", target, "target node time");
    pipeline->add_option("--out-dir", out_dir, "output directory");
    pipeline->add_option("--emit", emit_list, "comma list of dot,json");

    auto* synth = app.add_subcommand("synth", "simulate a series from a model file");
    synth->add_option("--model", model_path, "model JSON file")->required();
    synth->add_option("--n", synth_n, "number of output points");
    synth->add_option("--seed", seed, "random seed");
    synth->add_option("--noise-sd", noise_sd, "innovation standard deviation");
    synth->add_option("--burn-in", burn_in, "discarded warm-up points");
    synth->add_option("--out", synth_out, "output file (default stdout)");

    auto* report = app.add_subcommand("report", "print the text report for a model file");
    report->add_option("--model", model_path, "model JSON file")->required();
    report->add_option("--window", window, "expansion window");
    report->add_option("--target", target, "target node time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems map to the input-error exit code
    }

    try {
        if (select->parsed()) {
            const LagDictionary dict{max_lag, !no_intercept};
            validate_dictionary(dict);
            const TimeSeries series = load_series(input, parse_format(format));
            const SelectionResult result = exhaustive_search(series, dict, top_k, workers);
            fs::create_directories(out_dir);
            write_file(fs::path(out_dir) / "selection.json", selection_to_json(result, series.name, dict));
            print_selection_summary(result);
        } else if (network->parsed()) {
            const ModelRecord record = load_model_file(model_path);
            const NetworkArtifacts art = build_network(record, window, target);
            ExportBundle bundle;
            bundle.tool_version = kVersion;
            bundle.series_name = record.name;
            bundle.model = record;
            bundle.distances = art.distances;
            bundle.network = art.network;
            bundle.tree = art.tree;
            emit_artifacts(out_dir, parse_emit(emit_list), bundle, art);
        } else if (pipeline->parsed()) {
            ModelRecord record;
            std::optional<SeriesSummary> summary;
            std::string series_name;
            ExportBundle bundle;
            bundle.tool_version = kVersion;

            if (!model_path.empty()) {
                record = load_model_file(model_path);
                series_name = record.name;
            } else if (!input.empty()) {
                const LagDictionary dict{max_lag, !no_intercept};
                validate_dictionary(dict);
                const TimeSeries series = load_series(input, parse_format(format));
                summary = summarize(series);
                series_name = series.name;
                const SelectionResult result = exhaustive_search(series, dict, top_k, workers);
                fs::create_directories(out_dir);
                write_file(fs::path(out_dir) / "selection.json", selection_to_json(result, series.name, dict));
                record = to_record(result.best, series.name);
                bundle.dictionary = dict;
                if (record.lags.empty()) {
                    throw NumericError("selected model has no lag terms; nothing to expand into a network");
                }
            } else {
                throw InputError("pipeline needs --input or --model");
            }

            const NetworkArtifacts art = build_network(record, window, target);
            bundle.series_name = series_name;
            bundle.model = record;
            bundle.distances = art.distances;
            bundle.network = art.network;
            bundle.tree = art.tree;
            emit_artifacts(out_dir, parse_emit(emit_list), bundle, art);

            const std::string text = render_report(record, art.distances, art.tree, summary, series_name);
            write_file(fs::path(out_dir) / "report.txt", text);
            std::cout << text;
        } else if (synth->parsed()) {
            const ModelRecord record = load_model_file(model_path);
            const TimeSeries series =
                synthesize(record, static_cast<Eigen::Index>(synth_n), seed, noise_sd,
                           static_cast<Eigen::Index>(burn_in));
            if (synth_out.empty()) {
                write_series(std::cout, series);
            } else {
                std::ofstream out(synth_out, std::ios::binary);
                if (!out) throw InputError("cannot write '" + synth_out + "'");
                write_series(out, series);
            }
        } else if (report->parsed()) {
            const ModelRecord record = load_model_file(model_path);
            const NetworkArtifacts art = build_network(record, window, target);
            std::cout << render_report(record, art.distances, art.tree, std::nullopt, record.name);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
