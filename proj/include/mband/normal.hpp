#pragma once

namespace mband {

/// Standard normal quantile (inverse CDF), Wichura's AS 241 (PPND16).
/// Relative accuracy is about 1e-16 over (0, 1). Returns -inf/+inf at 0/1
/// and NaN outside [0, 1].
double normal_quantile(double p) noexcept;

/// Standard normal CDF.
double normal_cdf(double z) noexcept;

/// Upper tail P(Z > z), accurate for large z.
double normal_upper_tail(double z) noexcept;

}  // namespace mband
