#include "mband/timeseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <numeric>

#include "mband/error.hpp"

namespace mband {

TimeSeries::TimeSeries(std::vector<double> values, std::vector<std::string> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != values_.size()) {
        throw InvalidArgument("time series labels (" + std::to_string(labels_.size()) +
                              ") and values (" + std::to_string(values_.size()) +
                              ") differ in length");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw InvalidArgument("time series value " + std::to_string(i) + " is not finite");
        }
    }
}

TimeSeries TimeSeries::shifted(double offset) const {
    std::vector<double> out(values_.begin(), values_.end());
    for (double& v : out) v += offset;
    return TimeSeries(std::move(out), labels_);
}

ErrorSequence ErrorSequence::from_errors(std::vector<double> errors) {
    if (errors.empty()) throw InvalidArgument("error sequence must not be empty");

    ErrorSequence seq;
    seq.errors_ = std::move(errors);
    const auto& e = seq.errors_;
    const std::size_t n = e.size();

    seq.all_equal_ = std::all_of(e.begin(), e.end(), [&](double v) { return v == e.front(); });
    if (seq.all_equal_) {
        seq.mean_ = e.front();
        return seq;
    }

    seq.mean_ = std::accumulate(e.begin(), e.end(), 0.0) / static_cast<double>(n);
    if (n > kVarianceDdof) {
        double ss = 0.0;
        for (double v : e) ss += (v - seq.mean_) * (v - seq.mean_);
        seq.variance_ = ss / static_cast<double>(n - kVarianceDdof);
        seq.stddev_ = std::sqrt(seq.variance_);
    }
    return seq;
}

ErrorSequence difference(const TimeSeries& series) {
    const auto x = series.values();
    if (x.size() < 2) {
        throw InvalidArgument("differencing needs at least 2 values, got " + std::to_string(x.size()));
    }
    std::vector<double> e(x.size() - 1);
    for (std::size_t k = 0; k + 1 < x.size(); ++k) e[k] = x[k + 1] - x[k];
    return ErrorSequence::from_errors(std::move(e));
}

std::vector<double> integrate(double start, std::span<const double> errors) {
    std::vector<double> out;
    out.reserve(errors.size() + 1);
    out.push_back(start);
    for (double e : errors) out.push_back(out.back() + e);
    return out;
}

namespace csv {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t invalid_utf8_at(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) { ++i; continue; }
        if ((c & 0xE0) == 0xC0) { len = 2; cp = c & 0x1F; }
        else if ((c & 0xF0) == 0xE0) { len = 3; cp = c & 0x0F; }
        else if ((c & 0xF8) == 0xF0) { len = 4; cp = c & 0x07; }
        else return i;
        if (i + len > s.size()) return i;
        for (std::size_t j = 1; j < len; ++j) {
            const auto cc = static_cast<unsigned char>(s[i + j]);
            if ((cc & 0xC0) != 0x80) return i;
            cp = (cp << 6) | (cc & 0x3F);
        }
        const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                              (len == 4 && cp < 0x10000);
        if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
        i += len;
    }
    return std::string_view::npos;
}

}  // namespace

std::vector<std::string> split_row(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        const auto field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
        fields.emplace_back(trim(field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::vector<std::string> read_lines(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
    if (const auto bad = invalid_utf8_at(text); bad != std::string_view::npos) {
        throw ParseError("input is not valid UTF-8 (byte offset " + std::to_string(bad) + ")");
    }

    std::vector<std::string> lines;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto nl = rest.find('\n');
        auto line = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;
        lines.emplace_back(line);
    }
    return lines;
}

std::optional<double> parse_real(std::string_view field) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    if (field.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

}  // namespace csv

namespace {

std::optional<std::size_t> parse_index(std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

TimeSeries load_series(std::istream& in, const std::optional<std::string>& column) {
    const auto lines = csv::read_lines(in);
    if (lines.empty()) throw ParseError("empty input: no CSV rows");

    const auto first = csv::split_row(lines.front());
    const std::size_t width = first.size();

    std::size_t col = width - 1;
    bool header = false;
    if (column) {
        const auto named = std::find(first.begin(), first.end(), *column);
        if (named != first.end() && !csv::parse_real(*named)) {
            col = static_cast<std::size_t>(named - first.begin());
            header = true;
        } else if (const auto idx = parse_index(*column); idx && *idx >= 1 && *idx <= width) {
            col = *idx - 1;
            header = !csv::parse_real(first[col]).has_value();
        } else {
            throw ParseError("column '" + *column + "' not found in CSV header");
        }
    } else {
        header = !csv::parse_real(first[col]).has_value();
    }

    std::optional<std::size_t> label_col;
    if (width >= 2) label_col = col == 0 ? 1 : 0;

    const std::string col_name = header ? first[col] : std::to_string(col + 1);
    std::vector<double> values;
    std::vector<std::string> labels;
    std::size_t row = 0;
    for (std::size_t i = header ? 1 : 0; i < lines.size(); ++i) {
        ++row;
        const auto fields = csv::split_row(lines[i]);
        if (fields.size() != width) {
            throw ParseError("data row " + std::to_string(row) + ": expected " + std::to_string(width) +
                                 " fields, found " + std::to_string(fields.size()),
                             row);
        }
        const auto v = csv::parse_real(fields[col]);
        if (!v) {
            throw ParseError("data row " + std::to_string(row) + ": non-numeric value '" + fields[col] +
                                 "' in column '" + col_name + "'",
                             row);
        }
        values.push_back(*v);
        if (label_col) labels.push_back(fields[*label_col]);
    }

    if (values.size() < 2) {
        throw ParseError("need at least 2 data rows, found " + std::to_string(values.size()));
    }
    return TimeSeries(std::move(values), std::move(labels));
}

TimeSeries load_series_file(const std::filesystem::path& path, const std::optional<std::string>& column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return load_series(in, column);
}

}  // namespace mband
