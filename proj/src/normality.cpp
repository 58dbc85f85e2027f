#include "mband/normality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "mband/error.hpp"
#include "mband/normal.hpp"

namespace mband {
namespace {

template <std::size_t N>
double poly(const std::array<double, N>& c, double x) {
    double r = c[N - 1];
    for (std::size_t i = N - 1; i-- > 0;) r = r * x + c[i];
    return r;
}

// Royston (1995) polynomial corrections for the two largest weights.
constexpr std::array<double, 6> kLargest = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
constexpr std::array<double, 6> kSecond = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};

// W -> normal transformation, small samples (4 <= n <= 11).
constexpr std::array<double, 2> kGamma = {-2.273, 0.459};
constexpr std::array<double, 4> kMeanSmall = {0.544, -0.39978, 0.025054, -6.714e-4};
constexpr std::array<double, 4> kLogSdSmall = {1.3822, -0.77857, 0.062767, -0.0020322};
// Large samples (n >= 12), polynomials in log(n).
constexpr std::array<double, 4> kMeanLarge = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr std::array<double, 3> kLogSdLarge = {-0.4803, -0.082676, 0.0030302};

void check_size(std::size_t n) {
    if (n < kMinSwSize || n > kMaxSwSize) {
        throw InvalidArgument("Shapiro-Wilk needs 3 <= n <= 5000, got n = " + std::to_string(n));
    }
}

void check_significance(double p) {
    if (!(p > 0.0 && p < 0.5)) {
        throw InvalidArgument("significance must lie in (0, 0.5), got " + std::to_string(p));
    }
}

}  // namespace

std::string_view to_string(DecisionRule rule) noexcept {
    switch (rule) {
        case DecisionRule::PaperThreshold: return "paper-threshold";
        case DecisionRule::PValue: return "p-value";
    }
    return "unknown";
}

DecisionRule parse_decision_rule(std::string_view text) {
    if (text == "paper-threshold") return DecisionRule::PaperThreshold;
    if (text == "p-value") return DecisionRule::PValue;
    throw InvalidArgument("unknown decision rule '" + std::string(text) +
                          "' (expected paper-threshold or p-value)");
}

SWCoefficients sw_coefficients(std::size_t n) {
    check_size(n);
    const std::size_t half = n / 2;
    // upper[i] is the weight of x_(n-i); the lower half mirrors it with a minus sign.
    std::vector<double> upper(half);

    if (n == 3) {
        upper[0] = std::sqrt(0.5);
    } else {
        const double an = static_cast<double>(n);
        std::vector<double> m(half);
        double summ2 = 0.0;
        for (std::size_t i = 0; i < half; ++i) {
            m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (an + 0.25));
            summ2 += m[i] * m[i];
        }
        summ2 *= 2.0;
        const double ssumm2 = std::sqrt(summ2);
        const double rsn = 1.0 / std::sqrt(an);

        const double a1 = poly(kLargest, rsn) - m[0] / ssumm2;
        std::size_t first_scaled = 1;
        double fac;
        if (n > 5) {
            const double a2 = -m[1] / ssumm2 + poly(kSecond, rsn);
            fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                            (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
            upper[1] = a2;
            first_scaled = 2;
        } else {
            fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
        }
        upper[0] = a1;
        for (std::size_t i = first_scaled; i < half; ++i) upper[i] = -m[i] / fac;
    }

    SWCoefficients c{n, std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < half; ++i) {
        c.a[n - 1 - i] = upper[i];
        c.a[i] = -upper[i];
    }
    return c;
}

const SWCoefficients& cached_sw_coefficients(std::size_t n) {
    static std::shared_mutex mutex;
    static std::map<std::size_t, std::unique_ptr<const SWCoefficients>> cache;
    {
        std::shared_lock lock(mutex);
        if (const auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto fresh = std::make_unique<const SWCoefficients>(sw_coefficients(n));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(n, std::move(fresh));
    return *it->second;
}

double sw_statistic(std::span<const double> sample) {
    const std::size_t n = sample.size();
    check_size(n);

    std::vector<double> x(sample.begin(), sample.end());
    std::sort(x.begin(), x.end());
    if (x.front() == x.back()) {
        throw DegenerateInput("Shapiro-Wilk is inapplicable: all " + std::to_string(n) +
                              " values are equal (zero variance)");
    }

    // Centre and scale by the range first; W is affine invariant and this keeps
    // both sums well conditioned.
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const double range = x.back() - x.front();
    for (double& v : x) v = (v - mean) / range;

    const auto& a = cached_sw_coefficients(n).a;
    double num = 0.0;
    double ssq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += a[i] * x[i];
        ssq += x[i] * x[i];
    }
    return num * num / ssq;
}

double sw_p_value(double w, std::size_t n) {
    check_size(n);
    const double an = static_cast<double>(n);

    if (n == 3) {
        constexpr double kSixOverPi = 1.90985931710274;
        constexpr double kPiOverThree = 1.04719755119660;
        const double pw = kSixOverPi * (std::asin(std::sqrt(std::min(w, 1.0))) - kPiOverThree);
        return std::clamp(pw, 0.0, 1.0);
    }

    double y = std::log1p(-std::min(w, 1.0));
    double mean;
    double sd;
    if (n <= 11) {
        const double gamma = poly(kGamma, an);
        if (y >= gamma) return 1e-99;
        y = -std::log(gamma - y);
        mean = poly(kMeanSmall, an);
        sd = std::exp(poly(kLogSdSmall, an));
    } else {
        const double ln = std::log(an);
        mean = poly(kMeanLarge, ln);
        sd = std::exp(poly(kLogSdLarge, ln));
    }
    return normal_upper_tail((y - mean) / sd);
}

SWResult sw_decide(double w, std::size_t n, double p, DecisionRule rule) {
    check_size(n);
    check_significance(p);
    SWResult r;
    r.w = w;
    r.n = n;
    r.rule = rule;
    if (rule == DecisionRule::PaperThreshold) {
        r.threshold = 1.0 - 2.0 * p;
        r.normal = w >= r.threshold;
    } else {
        r.threshold = p;
        r.p_value = sw_p_value(w, n);
        r.normal = *r.p_value >= p;
    }
    return r;
}

SWResult sw_test(std::span<const double> sample, double p, DecisionRule rule) {
    check_significance(p);
    return sw_decide(sw_statistic(sample), sample.size(), p, rule);
}

}  // namespace mband
