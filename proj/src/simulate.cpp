#include "mband/simulate.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>

#include "mband/error.hpp"
#include "mband/forecast.hpp"
#include "mband/markov.hpp"

namespace mband {
namespace {

std::vector<double> walk_values(RandomStream& rng, double x0, double sigma, std::size_t length) {
    std::vector<double> x(length);
    x[0] = x0;
    for (std::size_t k = 1; k < length; ++k) x[k] = x[k - 1] + sigma * rng.next_normal();
    return x;
}

void validate(const CalibrationConfig& c) {
    if (c.trials < 100) throw InvalidArgument("calibration needs trials >= 100");
    if (c.walk_length < 10) throw InvalidArgument("calibration needs walk_length >= 10");
    if (c.horizon < 1) throw InvalidArgument("calibration needs horizon >= 1");
    if (!std::isfinite(c.sigma) || c.sigma <= 0.0) throw InvalidArgument("calibration needs finite sigma > 0");
    if (!(c.p > 0.0 && c.p < 0.5)) throw InvalidArgument("significance must lie in (0, 0.5)");
}

// Per-trial outcome; `covered` points at the trial's row of horizon flags.
struct TrialOut {
    bool accepted = false;
    double sigma_hat = 0.0;
};

TrialOut run_trial(const CalibrationConfig& c, std::uint64_t trial, unsigned char* covered) {
    RandomStream rng(c.seed, trial);
    const auto history = walk_values(rng, 0.0, c.sigma, c.walk_length);
    const auto errors = difference(TimeSeries(history));
    const auto verdict = check_markov(errors, c.p, c.rule);

    const double band_sigma = c.coverage_sigma == CoverageSigma::Estimated ? errors.stddev() : c.sigma;
    const auto b = band_from_sigma(history.back(), band_sigma, c.horizon);
    double future = history.back();
    for (std::size_t k = 0; k < c.horizon; ++k) {
        future += c.sigma * rng.next_normal();
        covered[k] = b.lower[k] <= future && future <= b.upper[k];
    }
    return {verdict.is_markov, errors.stddev()};
}

// Fixed-order reduction shared by both drivers.
SimulationReport aggregate(const CalibrationConfig& c, const std::vector<TrialOut>& trials,
                           const std::vector<unsigned char>& covered) {
    SimulationReport r;
    r.trials = c.trials;
    r.walk_length = c.walk_length;
    r.horizon = c.horizon;
    r.true_sigma = c.sigma;

    std::size_t accepted = 0;
    double sigma_sum = 0.0;
    std::vector<std::size_t> hits(c.horizon, 0);
    for (std::size_t t = 0; t < c.trials; ++t) {
        accepted += trials[t].accepted ? 1 : 0;
        sigma_sum += trials[t].sigma_hat;
        for (std::size_t k = 0; k < c.horizon; ++k) hits[k] += covered[t * c.horizon + k];
    }
    const double n = static_cast<double>(c.trials);
    r.markov_acceptance_rate = static_cast<double>(accepted) / n;
    r.coverage_per_step.resize(c.horizon);
    for (std::size_t k = 0; k < c.horizon; ++k) r.coverage_per_step[k] = static_cast<double>(hits[k]) / n;
    r.sigma_hat_mean = sigma_sum / n;
    r.sigma_hat_rel_error = std::fabs(r.sigma_hat_mean - c.sigma) / c.sigma;
    return r;
}

}  // namespace

TimeSeries generate_walk(double x0, double sigma, std::size_t length, std::uint64_t seed) {
    if (!std::isfinite(x0)) throw InvalidArgument("walk start must be finite");
    if (!std::isfinite(sigma) || sigma < 0.0) throw InvalidArgument("walk sigma must be finite and >= 0");
    if (length < 2) throw InvalidArgument("walk length must be >= 2");
    RandomStream rng(seed, 0);
    return TimeSeries(walk_values(rng, x0, sigma, length));
}

SimulationReport run_calibration(const CalibrationConfig& config) {
    validate(config);
    std::vector<TrialOut> trials(config.trials);
    std::vector<unsigned char> covered(config.trials * config.horizon);
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto n = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < n; ++t) {
        const auto i = static_cast<std::size_t>(t);
        try {
            trials[i] = run_trial(config, i, covered.data() + i * config.horizon);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return aggregate(config, trials, covered);
}

namespace serial {

SimulationReport run_calibration(const CalibrationConfig& config) {
    validate(config);
    std::vector<TrialOut> trials(config.trials);
    std::vector<unsigned char> covered(config.trials * config.horizon);
    for (std::size_t t = 0; t < config.trials; ++t) {
        trials[t] = run_trial(config, t, covered.data() + t * config.horizon);
    }
    return aggregate(config, trials, covered);
}

}  // namespace serial

}  // namespace mband
