#include "sublang/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sublang/error.hpp"

namespace sublang::poisson {

namespace {

constexpr double kTailEpsilon = 1e-17;

void check_domain(std::int64_t x, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw DomainError("Poisson rate must be finite and non-negative, got " + std::to_string(lambda));
  if (x < 0) throw DomainError("Poisson count must be non-negative, got " + std::to_string(x));
}

double log_pmf(std::int64_t x, double lambda) {
  const double xd = static_cast<double>(x);
  return xd * std::log(lambda) - lambda - std::lgamma(xd + 1.0);
}

// Geometric bound on sum_{j>i} p(j) given p(i), valid once the ratio
// lambda/(j+1) is below one.
bool tail_negligible(std::int64_t i, double term, double sum, double lambda) {
  const double ratio = lambda / static_cast<double>(i + 1);
  if (ratio >= 1.0) return false;
  return term * ratio / (1.0 - ratio) < kTailEpsilon * sum;
}

// Lower tail: sum of p(0..t) by the forward recurrence.
double lower_sum_linear(std::int64_t t, double lambda) {
  double p = std::exp(-lambda);
  double sum = p;
  for (std::int64_t i = 0; i < t; ++i) {
    p *= lambda / static_cast<double>(i + 1);
    sum += p;
  }
  return sum;
}

// Upper tail: sum of p(i) for i > t, t >= lambda.
double upper_sum_linear(std::int64_t t, double lambda) {
  double p = std::exp(-lambda);
  for (std::int64_t i = 0; i <= t; ++i) {
    p *= lambda / static_cast<double>(i + 1);
    if (p == 0.0) return 0.0;
  }
  double sum = p;
  for (std::int64_t i = t + 1;; ++i) {
    p *= lambda / static_cast<double>(i + 1);
    sum += p;
    if (p == 0.0 || tail_negligible(i + 1, p, sum, lambda)) break;
  }
  return sum;
}

// Same split in log space, each tail summed relative to its largest term.
double lower_sum_log(std::int64_t t, double lambda) {
  double sum = 1.0;
  double r = 1.0;
  for (std::int64_t i = t; i > 0; --i) {
    r *= static_cast<double>(i) / lambda;  // p(i-1) / p(i)
    sum += r;
    const double ratio = static_cast<double>(i - 1) / lambda;
    if (r * ratio / (1.0 - ratio) < kTailEpsilon * sum) break;
  }
  return std::exp(log_pmf(t, lambda) + std::log(sum));
}

double upper_sum_log(std::int64_t t, double lambda) {
  double sum = 1.0;
  double r = 1.0;
  for (std::int64_t i = t + 1;; ++i) {
    r *= lambda / static_cast<double>(i + 1);
    sum += r;
    if (r == 0.0 || tail_negligible(i + 1, r, sum, lambda)) break;
  }
  return std::exp(log_pmf(t + 1, lambda) + std::log(sum));
}

}  // namespace

double pmf(std::int64_t x, double lambda) {
  check_domain(x, lambda);
  if (lambda == 0.0) return x == 0 ? 1.0 : 0.0;
  if (lambda > kLogSpaceThreshold) return std::exp(log_pmf(x, lambda));
  double p = std::exp(-lambda);
  for (std::int64_t i = 0; i < x && p > 0.0; ++i) p *= lambda / static_cast<double>(i + 1);
  return p;
}

double percentile(std::int64_t t, double lambda) {
  check_domain(t, lambda);
  if (lambda == 0.0) return 1.0;
  const bool log_space = lambda > kLogSpaceThreshold;
  // Below the mean the lower tail is the smaller sum; above it, take the
  // complement of the upper tail so values near 1 keep full precision.
  if (static_cast<double>(t) < lambda)
    return std::min(log_space ? lower_sum_log(t, lambda) : lower_sum_linear(t, lambda), 1.0);
  return 1.0 - (log_space ? upper_sum_log(t, lambda) : upper_sum_linear(t, lambda));
}

}  // namespace sublang::poisson
