#pragma once

#include <cstddef>
#include <string_view>

#include "mband/normality.hpp"
#include "mband/timeseries.hpp"

namespace mband {

/// Drift is flagged when |mean error| exceeds this many standard errors.
inline constexpr double kDriftThreshold = 2.0;

/// Shortest series the check accepts (three errors, the minimum for W).
inline constexpr std::size_t kMinMarkovLength = 4;

/// Outcome of testing a series against the Gaussian random-walk model
/// x_k = x_{k-1} + e_k. `is_markov` is exactly `sw.normal`; drift is reported
/// alongside and never changes the verdict.
struct MarkovVerdict {
    bool is_markov = false;
    SWResult sw;
    double error_mean = 0.0;
    double error_stddev = 0.0;
    bool drift_warning = false;
    std::size_t n_errors = 0;
};

/// One-line statement of what the verdict does and does not establish.
std::string_view model_qualifier() noexcept;

/// Throws InvalidArgument for series shorter than kMinMarkovLength and
/// DegenerateInput when all first differences are equal.
MarkovVerdict check_markov(const TimeSeries& series, double p, DecisionRule rule);

/// Same check, starting from already differenced data.
MarkovVerdict check_markov(const ErrorSequence& errors, double p, DecisionRule rule);

}  // namespace mband
