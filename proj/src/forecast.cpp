#include "mband/forecast.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "mband/error.hpp"
#include "mband/random.hpp"

namespace mband {

ForecastBand band_from_sigma(double x0, double sigma, std::size_t horizon) {
    if (!std::isfinite(x0)) throw InvalidArgument("band anchor x0 must be finite");
    if (!std::isfinite(sigma) || sigma < 0.0) {
        throw InvalidArgument("band sigma must be finite and >= 0, got " + std::to_string(sigma));
    }
    if (horizon < 1) throw InvalidArgument("forecast horizon must be >= 1");

    ForecastBand b;
    b.x0 = x0;
    b.sigma = sigma;
    b.horizon = horizon;
    b.half_width.resize(horizon);
    b.lower.resize(horizon);
    b.upper.resize(horizon);
    for (std::size_t k = 1; k <= horizon; ++k) {
        const double h = std::sqrt(static_cast<double>(k)) * sigma;
        b.half_width[k - 1] = h;
        b.lower[k - 1] = x0 - h;
        b.upper[k - 1] = x0 + h;
    }
    return b;
}

ForecastBand band(const TimeSeries& series, std::size_t horizon) {
    if (horizon < 1) throw InvalidArgument("forecast horizon must be >= 1");
    const auto errors = difference(series);
    if (errors.all_equal()) {
        throw DegenerateInput("forecast band is inapplicable: all first differences are equal "
                              "(zero error variance)");
    }
    return band_from_sigma(series.back(), errors.stddev(), horizon);
}

std::vector<double> PathSet::marginal(std::size_t k) const {
    if (k < 1 || k > horizon_) throw InvalidArgument("marginal step out of range");
    std::vector<double> out(count_);
    for (std::size_t i = 0; i < count_; ++i) out[i] = data_[i * horizon_ + (k - 1)];
    return out;
}

std::vector<StepSummary> summarize_steps(const PathSet& paths) {
    std::vector<StepSummary> out;
    const double n = static_cast<double>(paths.count());
    for (std::size_t k = 1; k <= paths.horizon(); ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < paths.count(); ++i) sum += paths.path(i)[k - 1];
        const double mean = sum / n;
        double ss = 0.0;
        for (std::size_t i = 0; i < paths.count(); ++i) {
            const double d = paths.path(i)[k - 1] - mean;
            ss += d * d;
        }
        out.push_back({k, mean, paths.count() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0});
    }
    return out;
}

namespace detail {

void check_path_args(double x0, double sigma, std::size_t horizon, std::size_t count) {
    if (!std::isfinite(x0)) throw InvalidArgument("x0 must be finite");
    if (!std::isfinite(sigma) || sigma < 0.0) {
        throw InvalidArgument("sigma must be finite and >= 0, got " + std::to_string(sigma));
    }
    if (horizon < 1) throw InvalidArgument("horizon must be >= 1");
    if (count < 1) throw InvalidArgument("path count must be >= 1");
}

void fill_paths(PathSet& out, double x0, double sigma, double scale, std::uint64_t seed) {
    const auto count = static_cast<std::int64_t>(out.count());
    const std::size_t horizon = out.horizon();
    const double base = scale * x0;

#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        RandomStream rng(seed, static_cast<std::uint64_t>(i));
        auto row = out.path(static_cast<std::size_t>(i));
        double dev = 0.0;
        for (std::size_t k = 0; k < horizon; ++k) {
            dev += sigma * rng.next_normal();
            row[k] = base + scale * dev;
        }
    }
}

void fill_paths_serial(PathSet& out, double x0, double sigma, double scale, std::uint64_t seed) {
    for (std::size_t i = 0; i < out.count(); ++i) {
        RandomStream rng(seed, i);
        double dev = 0.0;
        for (std::size_t k = 0; k < out.horizon(); ++k) {
            dev += sigma * rng.next_normal();
            out.path(i)[k] = scale * x0 + scale * dev;
        }
    }
}

}  // namespace detail

PathSet sample_paths(double x0, double sigma, std::size_t horizon, std::size_t count, std::uint64_t seed) {
    detail::check_path_args(x0, sigma, horizon, count);
    PathSet out(count, horizon);
    detail::fill_paths(out, x0, sigma, 1.0, seed);
    return out;
}

namespace serial {

PathSet sample_paths(double x0, double sigma, std::size_t horizon, std::size_t count, std::uint64_t seed) {
    detail::check_path_args(x0, sigma, horizon, count);
    PathSet out(count, horizon);
    detail::fill_paths_serial(out, x0, sigma, 1.0, seed);
    return out;
}

}  // namespace serial

}  // namespace mband
