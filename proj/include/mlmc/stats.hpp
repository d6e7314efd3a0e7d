#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mlmc::stats {

double std_normal_pdf(double x) noexcept;

/// Phi(x), evaluated through erfc. Absolute error is a few ulp, far below
/// the 1e-10 budget, and the tails underflow gracefully.
double std_normal_cdf(double x) noexcept;

/// Phi^{-1}(u) for u in (0, 1). A rational approximation supplies the initial
/// guess; Newton steps on std_normal_cdf finish the job, so the inverse is
/// consistent with the forward map rather than a second approximation.
double inverse_std_normal_cdf(double u);

/// Two-pass sample moments. Fields that need more data than was supplied
/// (variance: n >= 2, skewness: n >= 3, excess kurtosis: n >= 4) are NaN.
struct Moments {
  std::int64_t n = 0;
  double mean;
  double variance;  // unbiased
  double skewness;
  double excess_kurtosis;
};

Moments sample_moments(std::span<const double> samples);

/// One-sample Kolmogorov-Smirnov statistic against the standard normal:
/// D_n = max_i max(i/n - Phi(x_(i)), Phi(x_(i)) - (i-1)/n).
/// Throws std::invalid_argument on empty input.
double ks_statistic(std::span<const double> samples);

/// (Phi^{-1}((i - 0.5)/n), x_(i)) pairs for i = 1..n, sorted by order statistic.
std::vector<std::pair<double, double>> qq_points(std::span<const double> samples);

/// Asymptotic 5% critical value coefficient: reject when D_n >= 1.3581/sqrt(n).
inline constexpr double kKsCritical5PctCoeff = 1.3581;

struct NormalityReport {
  std::int64_t n = 0;
  double ks_stat;
  double mean;
  double variance;
  double skewness;
  double excess_kurtosis;
  bool pass_5pct = false;
};

NormalityReport normality_report(std::span<const double> samples);

}  // namespace mlmc::stats
