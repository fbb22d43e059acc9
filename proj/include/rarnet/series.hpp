#ifndef RARNET_SERIES_HPP
#define RARNET_SERIES_HPP

#include <Eigen/Core>

#include <iosfwd>
#include <string>

namespace rarnet {

/// A univariate time series: ordered real observations plus optional,
/// strictly increasing time labels (e.g. years). Immutable by convention
/// once built through one of the loaders below.
struct TimeSeries {
    Eigen::VectorXd values;
    Eigen::VectorXd labels;  // empty when the source has no time column
    std::string name;

    Eigen::Index size() const { return values.size(); }
    bool has_labels() const { return labels.size() > 0; }
};

enum class SeriesFormat {
    SingleColumn,  // one value per line
    TwoColumn,     // label value
};

struct SeriesSummary {
    Eigen::Index n = 0;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation (n-1 denominator)
};

/// Checks the TimeSeries invariants (length >= 2, finite values, strictly
/// increasing labels of matching length). Throws InputError on violation.
void validate_series(const TimeSeries& series);

/// Parses a series from a stream. Lines starting with '#' are comments;
/// fields are separated by commas or whitespace. Errors name the
/// offending 1-based line number.
TimeSeries parse_series(std::istream& in, SeriesFormat format, const std::string& name);

/// Loads and validates a series from a text file.
TimeSeries load_series(const std::string& path, SeriesFormat format);

/// Writes a series back out in full (round-trip exact) precision.
void write_series(std::ostream& out, const TimeSeries& series);

SeriesSummary summarize(const TimeSeries& series);

} // namespace rarnet

#endif
