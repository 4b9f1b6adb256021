#pragma once

#include <cstdint>

namespace sublang::poisson {

/// Rates above this are evaluated in log space; e^-lambda underflows near 745.
inline constexpr double kLogSpaceThreshold = 700.0;

/// Pr(X = x) for X ~ Poisson(lambda).
///
/// Uses p0 = e^-lambda, p(i+1) = p(i) * lambda / (i+1) up to the threshold and
/// lgamma-based log space above it. Throws DomainError for negative x or for a
/// negative or non-finite lambda.
double pmf(std::int64_t x, double lambda);

/// Pr(X <= t), the Poisson percentile of an observed count t.
///
/// Exactly 1.0 when lambda == 0. For t < lambda the terms p(0..t) are summed;
/// otherwise the result is 1 minus the upper tail, summed until the geometric
/// bound on what remains falls below 1e-17 of the running tail.
double percentile(std::int64_t t, double lambda);

}  // namespace sublang::poisson
