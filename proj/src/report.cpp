#include "mband/report.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <string>

namespace mband {

Json verdict_json(const MarkovVerdict& v) {
    Json j;
    j["is_markov"] = v.is_markov;
    j["w"] = v.sw.w;
    j["threshold"] = v.sw.threshold;
    j["rule"] = std::string(to_string(v.sw.rule));
    if (v.sw.p_value) j["p_value"] = *v.sw.p_value;
    j["error_mean"] = v.error_mean;
    j["error_stddev"] = v.error_stddev;
    j["drift_warning"] = v.drift_warning;
    j["n_errors"] = v.n_errors;
    return j;
}

Json forecast_json(const ForecastBand& b) {
    Json j;
    j["x0"] = b.x0;
    j["sigma"] = b.sigma;
    j["horizon"] = b.horizon;
    Json bands = Json::array();
    for (std::size_t k = 1; k <= b.horizon; ++k) {
        bands.push_back({{"k", k}, {"lower", b.lower[k - 1]}, {"upper", b.upper[k - 1]}});
    }
    j["bands"] = std::move(bands);
    return j;
}

Json cost_json(const CostSummary& s, const CostBand& bands, const std::optional<std::vector<StepSummary>>& samples) {
    Json j;
    j["adc"] = s.adc;
    j["asc"] = s.asc;
    j["per_interruption"] = s.per_interruption;
    Json rows = Json::array();
    for (std::size_t k = 1; k <= bands.lower.size(); ++k) {
        rows.push_back({{"k", k}, {"lower", bands.lower[k - 1]}, {"upper", bands.upper[k - 1]}});
    }
    j["cost_bands"] = std::move(rows);
    if (samples) {
        Json summary = Json::array();
        for (const auto& st : *samples) summary.push_back({{"k", st.k}, {"mean", st.mean}, {"stddev", st.stddev}});
        j["samples_summary"] = std::move(summary);
    }
    return j;
}

Json simulation_json(const SimulationReport& r) {
    Json j;
    j["trials"] = r.trials;
    j["walk_length"] = r.walk_length;
    j["horizon"] = r.horizon;
    j["true_sigma"] = r.true_sigma;
    j["markov_acceptance_rate"] = r.markov_acceptance_rate;
    j["coverage_per_step"] = r.coverage_per_step;
    j["sigma_hat_mean"] = r.sigma_hat_mean;
    j["sigma_hat_rel_error"] = r.sigma_hat_rel_error;
    return j;
}

SimulationReport simulation_from_json(const Json& j) {
    SimulationReport r;
    r.trials = j.at("trials").get<std::size_t>();
    r.walk_length = j.at("walk_length").get<std::size_t>();
    r.horizon = j.at("horizon").get<std::size_t>();
    r.true_sigma = j.at("true_sigma").get<double>();
    r.markov_acceptance_rate = j.at("markov_acceptance_rate").get<double>();
    r.coverage_per_step = j.at("coverage_per_step").get<std::vector<double>>();
    r.sigma_hat_mean = j.at("sigma_hat_mean").get<double>();
    r.sigma_hat_rel_error = j.at("sigma_hat_rel_error").get<double>();
    return r;
}

std::string format_real(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void write_band_plot_csv(std::ostream& out, const ForecastBand& b) {
    out << "k,lower,x0,upper\n";
    for (std::size_t k = 1; k <= b.horizon; ++k) {
        out << k << ',' << format_real(b.lower[k - 1]) << ',' << format_real(b.x0) << ','
            << format_real(b.upper[k - 1]) << '\n';
    }
}

void write_cost_plot_csv(std::ostream& out, const CostBand& bands) {
    out << "k,lower,upper\n";
    for (std::size_t k = 1; k <= bands.lower.size(); ++k) {
        out << k << ',' << format_real(bands.lower[k - 1]) << ',' << format_real(bands.upper[k - 1]) << '\n';
    }
}

void write_coverage_plot_csv(std::ostream& out, const SimulationReport& r) {
    out << "k,coverage\n";
    for (std::size_t k = 1; k <= r.coverage_per_step.size(); ++k) {
        out << k << ',' << format_real(r.coverage_per_step[k - 1]) << '\n';
    }
}

}  // namespace mband
