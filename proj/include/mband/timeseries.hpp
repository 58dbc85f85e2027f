#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mband {

/// Ordered, finite observations x_0..x_K with optional opaque labels.
/// Order is authoritative; labels never affect any computation.
class TimeSeries {
public:
    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> values, std::vector<std::string> labels = {});

    std::span<const double> values() const noexcept { return values_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }
    std::size_t size() const noexcept { return values_.size(); }
    double back() const { return values_.back(); }

    /// Same series shifted by a constant.
    TimeSeries shifted(double offset) const;

private:
    std::vector<double> values_;
    std::vector<std::string> labels_;
};

/// Divisor offset for the error variance: sum of squares / (n - kVarianceDdof).
inline constexpr std::size_t kVarianceDdof = 1;

/// First differences e_k = x_k - x_{k-1} with their summary statistics.
///
/// The variance is taken about the sample mean with divisor n - 1. The mean
/// is reported but never forced to zero, so drift in the data stays visible.
class ErrorSequence {
public:
    /// Wraps an explicit error vector (needs at least one element).
    static ErrorSequence from_errors(std::vector<double> errors);

    std::span<const double> errors() const noexcept { return errors_; }
    std::size_t size() const noexcept { return errors_.size(); }
    double mean() const noexcept { return mean_; }
    double variance() const noexcept { return variance_; }
    double stddev() const noexcept { return stddev_; }
    bool all_equal() const noexcept { return all_equal_; }

private:
    ErrorSequence() = default;

    std::vector<double> errors_;
    double mean_ = 0.0;
    double variance_ = 0.0;
    double stddev_ = 0.0;
    bool all_equal_ = true;
};

/// Throws InvalidArgument when the series has fewer than two points.
ErrorSequence difference(const TimeSeries& series);

/// Inverse of difference(): x_0 followed by the running sums of the errors.
std::vector<double> integrate(double start, std::span<const double> errors);

/// Reads one numeric column of comma-separated UTF-8 text.
///
/// `column` selects by header name; if no header matches and the selector is
/// an integer it is read as a 1-based column index. Without a selector the
/// last column is used. The first row is a header exactly when its selected
/// field is not a number. With two or more columns, labels come from the
/// first column other than the selected one.
TimeSeries load_series(std::istream& in, const std::optional<std::string>& column = std::nullopt);
TimeSeries load_series_file(const std::filesystem::path& path,
                            const std::optional<std::string>& column = std::nullopt);

namespace csv {

/// Splits one line on commas, trimming ASCII whitespace around each field.
std::vector<std::string> split_row(std::string_view line);

/// Reads all non-blank lines, checking UTF-8 and dropping a BOM and trailing CRs.
std::vector<std::string> read_lines(std::istream& in);

/// Full-field parse of a finite real number; std::nullopt otherwise.
std::optional<double> parse_real(std::string_view field);

}  // namespace csv

}  // namespace mband
