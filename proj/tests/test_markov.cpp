#include <doctest.h>

#include <cmath>
#include <vector>

#include "mband/error.hpp"
#include "mband/markov.hpp"
#include "mband/simulate.hpp"

using namespace mband;

TEST_CASE("integer fixture with sigma-hat 2 passes under the paper rule") {
    const TimeSeries s({10, 11, 8, 10, 10, 9, 12, 10, 10});
    const auto v = check_markov(s, 0.05, DecisionRule::PaperThreshold);
    CHECK(v.is_markov);
    CHECK(v.sw.threshold == 0.90);
    CHECK(v.error_mean == 0.0);
    CHECK(v.error_stddev == 2.0);
    CHECK(v.n_errors == 8);
    CHECK_FALSE(v.drift_warning);
    CHECK(v.is_markov == v.sw.normal);
}

TEST_CASE("a deterministic ramp is inapplicable, not a verdict") {
    CHECK_THROWS_AS(check_markov(TimeSeries({1, 2, 3, 4, 5}), 0.05, DecisionRule::PaperThreshold),
                    DegenerateInput);
    CHECK_THROWS_AS(check_markov(TimeSeries({4, 4, 4, 4}), 0.05, DecisionRule::PValue), DegenerateInput);
}

TEST_CASE("series shorter than four points are rejected") {
    CHECK_THROWS_AS(check_markov(TimeSeries({1, 3, 2}), 0.05, DecisionRule::PaperThreshold), InvalidArgument);
    CHECK_NOTHROW(check_markov(TimeSeries({1, 3, 2, 5}), 0.05, DecisionRule::PaperThreshold));
}

TEST_CASE("drift warning uses two standard errors") {
    // errors 1, 2, 3: mean 2, sd 1, se 1/sqrt3 -> warn
    const auto drifting = check_markov(TimeSeries({0, 1, 3, 6}), 0.05, DecisionRule::PaperThreshold);
    CHECK(drifting.drift_warning);
    CHECK(drifting.error_mean == 2.0);
    // errors -1, 2, -1.5, 0.6: mean 0.025, no warning
    const auto centred = check_markov(TimeSeries({0, -1, 1, -0.5, 0.1}), 0.05, DecisionRule::PaperThreshold);
    CHECK_FALSE(centred.drift_warning);
}

TEST_CASE("verdict is unchanged by shifting the series") {
    const auto walk = generate_walk(0.0, 1.0, 100, 3);
    for (double c : {-1024.0, 0.5, 4096.0}) {
        for (auto rule : {DecisionRule::PaperThreshold, DecisionRule::PValue}) {
            const auto a = check_markov(walk, 0.05, rule);
            const auto b = check_markov(walk.shifted(c), 0.05, rule);
            CHECK(a.is_markov == b.is_markov);
            CHECK(a.sw.w == doctest::Approx(b.sw.w).epsilon(1e-9));
            CHECK(a.error_stddev == doctest::Approx(b.error_stddev).epsilon(1e-9));
        }
    }
}

TEST_CASE("Gaussian walks of length 100 are accepted at about 95% under the p-value rule") {
    int accepted = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        accepted += check_markov(generate_walk(0.0, 1.0, 100, 500 + seed), 0.05, DecisionRule::PValue).is_markov;
    }
    CHECK(accepted >= 930);
}

TEST_CASE("one extreme outlier flips the verdict") {
    int flipped = 0;
    int baseline_ok = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto walk = generate_walk(0.0, 1.0, 100, 9000 + seed);
        std::vector<double> v(walk.values().begin(), walk.values().end());
        const double sd = difference(walk).stddev();
        baseline_ok += check_markov(walk, 0.05, DecisionRule::PValue).is_markov;
        v.push_back(v.back() + 101.0 * sd);
        flipped += !check_markov(TimeSeries(v), 0.05, DecisionRule::PValue).is_markov;
    }
    CHECK(baseline_ok > 170);
    CHECK(flipped >= 180);
}

TEST_CASE("the model qualifier names the random-walk model") {
    CHECK(std::string(model_qualifier()).find("random-walk") != std::string::npos);
}
