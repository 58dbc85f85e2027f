#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mband/timeseries.hpp"

namespace mband {

/// Bands x0 -/+ sqrt(k) * sigma for steps k = 1..horizon.
///
/// `half_width[k-1]` is sqrt(k) * sigma and both endpoints are the correctly
/// rounded x0 -/+ half_width[k-1], so the band is symmetric about x0 through
/// its single stored half-width.
struct ForecastBand {
    double x0 = 0.0;
    double sigma = 0.0;
    std::size_t horizon = 0;
    std::vector<double> half_width;
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Band anchored at the last value of `series` with sigma = stddev of its
/// first differences. Throws DegenerateInput when those differences are all
/// equal and InvalidArgument when horizon < 1.
ForecastBand band(const TimeSeries& series, std::size_t horizon);

/// Band for an explicit anchor and sigma (sigma >= 0; sigma == 0 gives a flat band).
ForecastBand band_from_sigma(double x0, double sigma, std::size_t horizon);

/// `count` sampled futures of `horizon` steps each, stored row-major.
class PathSet {
public:
    PathSet() = default;
    PathSet(std::size_t count, std::size_t horizon) : count_(count), horizon_(horizon), data_(count * horizon) {}

    std::size_t count() const noexcept { return count_; }
    std::size_t horizon() const noexcept { return horizon_; }

    std::span<const double> path(std::size_t i) const { return {data_.data() + i * horizon_, horizon_}; }
    std::span<double> path(std::size_t i) { return {data_.data() + i * horizon_, horizon_}; }

    /// Values at step k (1-based) across all paths.
    std::vector<double> marginal(std::size_t k) const;

    std::span<const double> data() const noexcept { return data_; }

    bool operator==(const PathSet&) const = default;

private:
    std::size_t count_ = 0;
    std::size_t horizon_ = 0;
    std::vector<double> data_;
};

/// Future paths x0 + sum_{j<=k} sigma * z_j. Path i draws its normals from
/// RandomStream(seed, i), so the output depends only on the arguments and
/// never on the OpenMP thread count.
PathSet sample_paths(double x0, double sigma, std::size_t horizon, std::size_t count, std::uint64_t seed);

/// Sample mean and stddev (divisor n - 1) of one step across a PathSet.
struct StepSummary {
    std::size_t k = 0;
    double mean = 0.0;
    double stddev = 0.0;
};

std::vector<StepSummary> summarize_steps(const PathSet& paths);

namespace serial {

/// Single-threaded reference for mband::sample_paths; results are bitwise equal.
PathSet sample_paths(double x0, double sigma, std::size_t horizon, std::size_t count, std::uint64_t seed);

}  // namespace serial

namespace detail {

void check_path_args(double x0, double sigma, std::size_t horizon, std::size_t count);

/// Writes `scale * x0 + scale * d_k` where d_k is the running sum of
/// sigma * z_j for stream (seed, i). scale == 1 gives plain paths.
void fill_paths(PathSet& out, double x0, double sigma, double scale, std::uint64_t seed);
void fill_paths_serial(PathSet& out, double x0, double sigma, double scale, std::uint64_t seed);

}  // namespace detail

}  // namespace mband
