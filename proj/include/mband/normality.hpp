#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace mband {

/// How a W statistic is turned into a normal / not-normal decision.
enum class DecisionRule {
    /// Accept normality when W >= 1 - 2p.
    PaperThreshold,
    /// Accept normality when Royston's p-value for W is >= p.
    PValue,
};

std::string_view to_string(DecisionRule rule) noexcept;
/// Accepts "paper-threshold" and "p-value"; throws InvalidArgument otherwise.
DecisionRule parse_decision_rule(std::string_view text);

inline constexpr std::size_t kMinSwSize = 3;
inline constexpr std::size_t kMaxSwSize = 5000;

/// Shapiro-Wilk weights for a sample of size n, ascending and antisymmetric,
/// scaled to unit Euclidean norm.
struct SWCoefficients {
    std::size_t n = 0;
    std::vector<double> a;
};

struct SWResult {
    double w = 0.0;
    std::size_t n = 0;
    /// 1 - 2p under PaperThreshold; the significance p under PValue.
    double threshold = 0.0;
    DecisionRule rule = DecisionRule::PaperThreshold;
    std::optional<double> p_value;
    bool normal = false;
};

/// Royston's approximation to the weights V^-1 m / |V^-1 m| (algorithm AS R94):
/// Blom scores m_i = Phi^-1((i - 3/8) / (n + 1/4)), polynomial corrections in
/// 1/sqrt(n) for the one (n <= 5) or two (n > 5) most extreme weights, and the
/// rest rescaled so that the whole vector has unit norm. n = 3 is exact.
SWCoefficients sw_coefficients(std::size_t n);

/// Same as sw_coefficients() but memoised per n. Safe for concurrent callers.
const SWCoefficients& cached_sw_coefficients(std::size_t n);

/// W = (sum a_k x_(k))^2 / sum (x_i - mean)^2. The input order is irrelevant.
/// Throws InvalidArgument for sizes outside [3, 5000] and DegenerateInput when
/// every value is equal.
double sw_statistic(std::span<const double> sample);

/// Royston's upper-tail p-value for W at sample size n.
double sw_p_value(double w, std::size_t n);

/// Applies `rule` at significance p (0 < p < 0.5) to an already computed W.
SWResult sw_decide(double w, std::size_t n, double p, DecisionRule rule);

SWResult sw_test(std::span<const double> sample, double p, DecisionRule rule);

}  // namespace mband
