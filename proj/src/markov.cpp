#include "mband/markov.hpp"

#include <cmath>
#include <string>

#include "mband/error.hpp"

namespace mband {

std::string_view model_qualifier() noexcept {
    return "verdict is relative to the Gaussian random-walk model x[k] = x[k-1] + e[k] "
           "with i.i.d. zero-mean normal e[k]; it is not a general test of the Markov property";
}

MarkovVerdict check_markov(const ErrorSequence& errors, double p, DecisionRule rule) {
    const std::size_t n = errors.size();
    if (n + 1 < kMinMarkovLength) {
        throw InvalidArgument("Markov check needs a series of at least " + std::to_string(kMinMarkovLength) +
                              " values (" + std::to_string(kMinMarkovLength - 1) + " errors), got " +
                              std::to_string(n) + " errors");
    }
    if (errors.all_equal()) {
        throw DegenerateInput("Markov check is inapplicable: all " + std::to_string(n) +
                              " first differences are equal (zero error variance)");
    }

    MarkovVerdict v;
    v.sw = sw_test(errors.errors(), p, rule);
    v.is_markov = v.sw.normal;
    v.error_mean = errors.mean();
    v.error_stddev = errors.stddev();
    v.n_errors = n;
    v.drift_warning =
        std::fabs(v.error_mean) > kDriftThreshold * v.error_stddev / std::sqrt(static_cast<double>(n));
    return v;
}

MarkovVerdict check_markov(const TimeSeries& series, double p, DecisionRule rule) {
    if (series.size() < kMinMarkovLength) {
        throw InvalidArgument("Markov check needs a series of at least " + std::to_string(kMinMarkovLength) +
                              " values, got " + std::to_string(series.size()));
    }
    return check_markov(difference(series), p, rule);
}

}  // namespace mband
