#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "mband/cost.hpp"
#include "mband/forecast.hpp"
#include "mband/markov.hpp"
#include "mband/simulate.hpp"

namespace mband {

using Json = nlohmann::ordered_json;

// Field names here are a published interface; docs/schemas/ mirrors them.

Json verdict_json(const MarkovVerdict& verdict);
Json forecast_json(const ForecastBand& band);
Json cost_json(const CostSummary& summary, const CostBand& bands,
               const std::optional<std::vector<StepSummary>>& samples = std::nullopt);
Json simulation_json(const SimulationReport& report);

/// Inverse of simulation_json; throws nlohmann::json exceptions on schema mismatch.
SimulationReport simulation_from_json(const Json& j);

/// Shortest decimal text that reads back to the same double.
std::string format_real(double v);

/// Plot data: header "k,lower,x0,upper" and one row per step.
void write_band_plot_csv(std::ostream& out, const ForecastBand& band);
/// Plot data: header "k,lower,upper" and one row per step.
void write_cost_plot_csv(std::ostream& out, const CostBand& bands);
/// Plot data: header "k,coverage" and one row per step.
void write_coverage_plot_csv(std::ostream& out, const SimulationReport& report);

}  // namespace mband
