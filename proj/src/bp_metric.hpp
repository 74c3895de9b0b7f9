#pragma once

// Two-sided Beardon-Pommerenke estimate of the hyperbolic density:
//
//   1 / (2 sqrt2 d (kappa + L))  <=  lambda_G(z)  <=  (kappa + pi/4) / (d (kappa + L))
//
// with d = d(z, boundary) and L the log-scale mismatch between d and the gaps
// |a - b| available at a nearest boundary point a.

#include "domain.hpp"

namespace hypbound {

/// kappa = 4 + ln(3 + 2 sqrt2).
double kappa() noexcept;

struct LogDistance {
  double value = 0.0;
  double witness_s = 0.0;
};

/// Log-scale distance from d to the union of the intervals: zero inside an
/// interval, ln(lo/d) below it, ln(d/hi) above it. Intervals with hi == 0 only
/// describe b == a and are skipped. Throws Error(EmptySet) if nothing is left.
LogDistance log_distance_to_set(double d, const DistanceSet& set);

struct BPBounds {
  double L = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  Complex witness_a;
  double witness_s = 0.0;
  double d = 0.0;
};

/// L(z) and its witnesses; lower/upper are left at zero.
BPBounds compute_L(const DomainSpec& spec, Complex z);

/// L(z) together with both density bounds.
BPBounds bp_bounds(const DomainSpec& spec, Complex z);

/// Bounds from given d and L (the algebraic part of bp_bounds).
double bp_lower(double d, double L) noexcept;
double bp_upper(double d, double L) noexcept;

}  // namespace hypbound
