#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mband/forecast.hpp"

namespace mband {

/// Average cost per event (currency / event), one rate per event class.
struct CostRates {
    double c_delay = 0.0;
    double c_cancel = 0.0;
    double c_divert = 0.0;
    double c_airturnback = 0.0;
    double c_spare = 0.0;

    /// Throws InvalidArgument unless every rate is finite and >= 0.
    void validate() const;

    CostRates operator+(const CostRates& o) const {
        return {c_delay + o.c_delay, c_cancel + o.c_cancel, c_divert + o.c_divert,
                c_airturnback + o.c_airturnback, c_spare + o.c_spare};
    }
};

/// Event counts for one month.
struct MonthlyEvents {
    std::uint64_t delays = 0;
    std::uint64_t cancels = 0;
    std::uint64_t diversions = 0;
    std::uint64_t airturnbacks = 0;
    std::uint64_t spares = 0;

    /// Spares are not interruptions and do not count here.
    std::uint64_t total_interruptions() const noexcept { return delays + cancels + diversions + airturnbacks; }
};

struct CostSummary {
    double adc = 0.0;
    double asc = 0.0;
    double per_interruption = 0.0;
    std::size_t months_used = 0;
};

/// Mean over months of (C_D D + C_C C + C_d d + C_A A) / (D + C + d + A).
/// Throws InvalidArgument for an empty table or a month with no interruptions.
double compute_adc(std::span<const MonthlyEvents> months, const CostRates& rates);

/// Mean over months of C_S S / (D + C + d + A), same preconditions as compute_adc.
double compute_asc(std::span<const MonthlyEvents> months, const CostRates& rates);

CostSummary summarize_costs(std::span<const MonthlyEvents> months, const CostRates& rates);

/// Forecast band bounds multiplied by the per-interruption cost.
struct CostBand {
    std::vector<double> lower;
    std::vector<double> upper;
};

CostBand cost_band(const ForecastBand& band, const CostSummary& summary);

/// Cost samples per step: step k is Normal(x0 * c, (sqrt(k) * sigma * c)^2) with
/// c = per_interruption. Uses the same streams as sample_paths, so each sample
/// is c * x0 plus c times the matching path's deviation from x0.
PathSet sample_costs(double x0, double sigma, std::size_t horizon, const CostSummary& summary,
                     std::size_t count, std::uint64_t seed);

namespace serial {

PathSet sample_costs(double x0, double sigma, std::size_t horizon, const CostSummary& summary,
                     std::size_t count, std::uint64_t seed);

}  // namespace serial

/// Monthly events CSV. A header naming delays, cancels, diversions,
/// airturnbacks and spares (any order, extra columns ignored) is required;
/// cells are non-negative integers.
std::vector<MonthlyEvents> load_events(std::istream& in);
std::vector<MonthlyEvents> load_events_file(const std::filesystem::path& path);

/// key=value lines (`#` starts a comment) with keys c_delay, c_cancel,
/// c_divert, c_airturnback and c_spare. Every key is required exactly once.
CostRates load_rates(std::istream& in);
CostRates load_rates_file(const std::filesystem::path& path);

/// Same keys as load_rates, written inline and separated by commas.
CostRates parse_rates(std::string_view text);

}  // namespace mband
