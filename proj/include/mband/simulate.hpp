#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mband/normality.hpp"
#include "mband/random.hpp"
#include "mband/timeseries.hpp"

namespace mband {

/// Random walk x_0 = x0, x_k = x_{k-1} + sigma * z_k with the z_k drawn from
/// RandomStream(seed, 0).
TimeSeries generate_walk(double x0, double sigma, std::size_t length, std::uint64_t seed);

/// Which sigma the coverage check scales the band with.
enum class CoverageSigma {
    Estimated,  ///< sigma-hat of the trial's own history
    True,       ///< the generating sigma
};

struct CalibrationConfig {
    std::size_t trials = 2000;
    std::size_t walk_length = 50;
    double sigma = 1.0;
    std::size_t horizon = 12;
    double p = 0.05;
    DecisionRule rule = DecisionRule::PaperThreshold;
    std::uint64_t seed = kDefaultSeed;
    CoverageSigma coverage_sigma = CoverageSigma::Estimated;
};

struct SimulationReport {
    std::size_t trials = 0;
    std::size_t walk_length = 0;
    std::size_t horizon = 0;
    double true_sigma = 0.0;
    double markov_acceptance_rate = 0.0;
    std::vector<double> coverage_per_step;
    double sigma_hat_mean = 0.0;
    double sigma_hat_rel_error = 0.0;

    bool operator==(const SimulationReport&) const = default;
};

/// Trial t draws from RandomStream(seed, t): walk_length history values
/// starting at 0, then `horizon` further steps of the same walk. The history
/// goes through check_markov; each future step k counts as covered when it
/// lies inside the band x0 -/+ sqrt(k) * sigma anchored at the last history
/// value. Coverage is taken over all trials, accepted or not.
///
/// Requires trials >= 100, walk_length >= 10, horizon >= 1, sigma > 0 and
/// 0 < p < 0.5. Trials run under OpenMP; the report is bitwise independent of
/// the thread count.
SimulationReport run_calibration(const CalibrationConfig& config);

namespace serial {

/// Single-threaded reference for mband::run_calibration.
SimulationReport run_calibration(const CalibrationConfig& config);

}  // namespace serial

}  // namespace mband
