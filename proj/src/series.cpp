#include "rarnet/series.hpp"
#include "rarnet/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace rarnet {

namespace {

// Splits a line on commas and/or whitespace. Empty fields are dropped.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) fields.push_back(std::move(cur));
    return fields;
}

double parse_number(const std::string& token, std::size_t line_no) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw InputError("line " + std::to_string(line_no) + ": non-numeric token '" + token + "'");
    }
    if (!std::isfinite(value)) {
        throw InputError("line " + std::to_string(line_no) + ": non-finite value '" + token + "'");
    }
    return value;
}

} // namespace

void validate_series(const TimeSeries& series) {
    if (series.values.size() < 2) {
        throw InputError("series '" + series.name + "': need at least 2 observations, got " +
                         std::to_string(series.values.size()));
    }
    for (Eigen::Index i = 0; i < series.values.size(); ++i) {
        if (!std::isfinite(series.values[i])) {
            throw InputError("series '" + series.name + "': non-finite value at index " + std::to_string(i));
        }
    }
    if (series.has_labels()) {
        if (series.labels.size() != series.values.size()) {
            throw InputError("series '" + series.name + "': label/value length mismatch");
        }
        for (Eigen::Index i = 1; i < series.labels.size(); ++i) {
            if (!(series.labels[i] > series.labels[i - 1])) {
                throw InputError("series '" + series.name + "': labels not strictly increasing at index " +
                                 std::to_string(i));
            }
        }
    }
}

TimeSeries parse_series(std::istream& in, SeriesFormat format, const std::string& name) {
    std::vector<double> values;
    std::vector<double> labels;
    std::string line;
    std::size_t line_no = 0;
    std::size_t prev_label_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty() || fields[0][0] == '#') continue;

        if (format == SeriesFormat::SingleColumn) {
            if (fields.size() != 1) {
                throw InputError("line " + std::to_string(line_no) + ": expected 1 column, got " +
                                 std::to_string(fields.size()));
            }
            values.push_back(parse_number(fields[0], line_no));
        } else {
            if (fields.size() != 2) {
                throw InputError("line " + std::to_string(line_no) + ": expected 2 columns, got " +
                                 std::to_string(fields.size()));
            }
            double label = parse_number(fields[0], line_no);
            if (!labels.empty() && !(label > labels.back())) {
                throw InputError("line " + std::to_string(line_no) + ": label " + fields[0] +
                                 " not greater than previous label (line " +
                                 std::to_string(prev_label_line) + ")");
            }
            labels.push_back(label);
            values.push_back(parse_number(fields[1], line_no));
            prev_label_line = line_no;
        }
    }

    if (values.size() < 2) {
        throw InputError("series '" + name + "': need at least 2 data rows, got " +
                         std::to_string(values.size()));
    }

    TimeSeries series;
    series.name = name;
    series.values = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
    if (!labels.empty()) {
        series.labels = Eigen::Map<const Eigen::VectorXd>(labels.data(), static_cast<Eigen::Index>(labels.size()));
    }
    validate_series(series);
    return series;
}

TimeSeries load_series(const std::string& path, SeriesFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open series file '" + path + "'");
    }
    // Series name from the file stem.
    std::string name = path;
    if (auto slash = name.find_last_of("/\\"); slash != std::string::npos) name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return parse_series(in, format, name);
}

void write_series(std::ostream& out, const TimeSeries& series) {
    char buf[64];
    for (Eigen::Index i = 0; i < series.values.size(); ++i) {
        if (series.has_labels()) {
            auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), series.labels[i]);
            out.write(buf, p - buf);
            out.put(' ');
        }
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), series.values[i]);
        out.write(buf, p - buf);
        out.put('\n');
    }
}

SeriesSummary summarize(const TimeSeries& series) {
    SeriesSummary s;
    s.n = series.values.size();
    s.min = series.values.minCoeff();
    s.max = series.values.maxCoeff();
    s.mean = series.values.mean();
    if (s.n > 1) {
        s.stddev = std::sqrt((series.values.array() - s.mean).square().sum() / double(s.n - 1));
    }
    return s;
}

} // namespace rarnet
