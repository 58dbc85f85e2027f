#include "mband/cost.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "mband/error.hpp"
#include "mband/timeseries.hpp"

namespace mband {
namespace {

void check_months(std::span<const MonthlyEvents> months) {
    if (months.empty()) throw InvalidArgument("cost averages need at least one month of events");
    for (std::size_t k = 0; k < months.size(); ++k) {
        if (months[k].total_interruptions() == 0) {
            throw InvalidArgument("month " + std::to_string(k + 1) +
                                  " has zero interruptions (delays + cancels + diversions + airturnbacks)");
        }
    }
}

template <class Numerator>
double average_per_interruption(std::span<const MonthlyEvents> months, Numerator numerator) {
    check_months(months);
    double sum = 0.0;
    for (const auto& m : months) sum += numerator(m) / static_cast<double>(m.total_interruptions());
    return sum / static_cast<double>(months.size());
}

double count(std::uint64_t v) { return static_cast<double>(v); }

constexpr std::array<std::string_view, 5> kEventColumns = {"delays", "cancels", "diversions",
                                                           "airturnbacks", "spares"};
constexpr std::array<std::string_view, 5> kRateKeys = {"c_delay", "c_cancel", "c_divert", "c_airturnback",
                                                       "c_spare"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double& rate_slot(CostRates& r, std::size_t i) {
    switch (i) {
        case 0: return r.c_delay;
        case 1: return r.c_cancel;
        case 2: return r.c_divert;
        case 3: return r.c_airturnback;
        default: return r.c_spare;
    }
}

// Assigns one "key=value" entry; `where` names the entry in error messages.
void assign_rate(CostRates& rates, std::array<bool, 5>& seen, std::string_view entry, const std::string& where) {
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) throw ParseError(where + ": expected key=value");
    const auto key = trim(entry.substr(0, eq));
    const auto value = trim(entry.substr(eq + 1));
    std::size_t slot = kRateKeys.size();
    for (std::size_t i = 0; i < kRateKeys.size(); ++i) {
        if (kRateKeys[i] == key) slot = i;
    }
    if (slot == kRateKeys.size()) throw ParseError(where + ": unknown rate key '" + std::string(key) + "'");
    if (seen[slot]) throw ParseError(where + ": duplicate rate key '" + std::string(key) + "'");
    const auto v = csv::parse_real(value);
    if (!v || *v < 0.0) {
        throw ParseError(where + ": rate '" + std::string(key) + "' must be a non-negative number");
    }
    rate_slot(rates, slot) = *v;
    seen[slot] = true;
}

void require_all(const std::array<bool, 5>& seen) {
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) throw ParseError("missing rate key '" + std::string(kRateKeys[i]) + "'");
    }
}

}  // namespace

void CostRates::validate() const {
    for (double r : {c_delay, c_cancel, c_divert, c_airturnback, c_spare}) {
        if (!std::isfinite(r) || r < 0.0) throw InvalidArgument("cost rates must be finite and >= 0");
    }
}

double compute_adc(std::span<const MonthlyEvents> months, const CostRates& rates) {
    rates.validate();
    return average_per_interruption(months, [&](const MonthlyEvents& m) {
        return rates.c_delay * count(m.delays) + rates.c_cancel * count(m.cancels) +
               rates.c_divert * count(m.diversions) + rates.c_airturnback * count(m.airturnbacks);
    });
}

double compute_asc(std::span<const MonthlyEvents> months, const CostRates& rates) {
    rates.validate();
    return average_per_interruption(months,
                                    [&](const MonthlyEvents& m) { return rates.c_spare * count(m.spares); });
}

CostSummary summarize_costs(std::span<const MonthlyEvents> months, const CostRates& rates) {
    CostSummary s;
    s.adc = compute_adc(months, rates);
    s.asc = compute_asc(months, rates);
    s.per_interruption = s.adc + s.asc;
    s.months_used = months.size();
    return s;
}

CostBand cost_band(const ForecastBand& band, const CostSummary& summary) {
    const double c = summary.per_interruption;
    if (!std::isfinite(c) || c < 0.0) throw InvalidArgument("per-interruption cost must be finite and >= 0");
    if (band.lower.size() != band.horizon || band.upper.size() != band.horizon) {
        throw InvalidArgument("forecast band is malformed");
    }
    CostBand out;
    out.lower.reserve(band.horizon);
    out.upper.reserve(band.horizon);
    for (std::size_t k = 0; k < band.horizon; ++k) {
        out.lower.push_back(band.lower[k] * c);
        out.upper.push_back(band.upper[k] * c);
    }
    return out;
}

PathSet sample_costs(double x0, double sigma, std::size_t horizon, const CostSummary& summary,
                     std::size_t count, std::uint64_t seed) {
    detail::check_path_args(x0, sigma, horizon, count);
    if (!std::isfinite(summary.per_interruption) || summary.per_interruption < 0.0) {
        throw InvalidArgument("per-interruption cost must be finite and >= 0");
    }
    PathSet out(count, horizon);
    detail::fill_paths(out, x0, sigma, summary.per_interruption, seed);
    return out;
}

namespace serial {

PathSet sample_costs(double x0, double sigma, std::size_t horizon, const CostSummary& summary,
                     std::size_t count, std::uint64_t seed) {
    detail::check_path_args(x0, sigma, horizon, count);
    if (!std::isfinite(summary.per_interruption) || summary.per_interruption < 0.0) {
        throw InvalidArgument("per-interruption cost must be finite and >= 0");
    }
    PathSet out(count, horizon);
    detail::fill_paths_serial(out, x0, sigma, summary.per_interruption, seed);
    return out;
}

}  // namespace serial

std::vector<MonthlyEvents> load_events(std::istream& in) {
    const auto lines = csv::read_lines(in);
    if (lines.empty()) throw ParseError("empty events input: no CSV rows");

    const auto header = csv::split_row(lines.front());
    std::array<std::size_t, 5> col{};
    for (std::size_t c = 0; c < kEventColumns.size(); ++c) {
        std::optional<std::size_t> found;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == kEventColumns[c]) found = i;
        }
        if (!found) {
            throw ParseError("events header is missing column '" + std::string(kEventColumns[c]) + "'");
        }
        col[c] = *found;
    }

    std::vector<MonthlyEvents> months;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t row = i;
        const auto fields = csv::split_row(lines[i]);
        if (fields.size() != header.size()) {
            throw ParseError("events data row " + std::to_string(row) + ": expected " +
                                 std::to_string(header.size()) + " fields, found " + std::to_string(fields.size()),
                             row);
        }
        std::array<std::uint64_t, 5> v{};
        for (std::size_t c = 0; c < col.size(); ++c) {
            const auto& f = fields[col[c]];
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v[c]);
            if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size()) {
                throw ParseError("events data row " + std::to_string(row) + ": '" + f + "' in column '" +
                                     std::string(kEventColumns[c]) + "' is not a non-negative integer",
                                 row);
            }
        }
        months.push_back({v[0], v[1], v[2], v[3], v[4]});
    }
    if (months.empty()) throw ParseError("events input has a header but no data rows");
    return months;
}

std::vector<MonthlyEvents> load_events_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return load_events(in);
}

CostRates load_rates(std::istream& in) {
    CostRates rates;
    std::array<bool, 5> seen{};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty()) continue;
        assign_rate(rates, seen, body, "rates line " + std::to_string(lineno));
    }
    require_all(seen);
    return rates;
}

CostRates load_rates_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return load_rates(in);
}

CostRates parse_rates(std::string_view text) {
    CostRates rates;
    std::array<bool, 5> seen{};
    std::size_t entry = 0;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        ++entry;
        if (item.empty()) continue;
        assign_rate(rates, seen, item, "rates entry " + std::to_string(entry));
    }
    require_all(seen);
    return rates;
}

}  // namespace mband
