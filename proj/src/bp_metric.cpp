#include "bp_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "error.hpp"

namespace hypbound {

double kappa() noexcept { return 4.0 + std::log(3.0 + 2.0 * std::numbers::sqrt2); }

LogDistance log_distance_to_set(double d, const DistanceSet& set) {
  if (!(d > 0.0)) throw Error(ErrorCode::InvalidArgument, "log_distance_to_set needs d > 0");
  LogDistance best{std::numeric_limits<double>::infinity(), 0.0};
  bool any = false;
  for (const Interval& iv : set.intervals) {
    if (!(iv.hi > 0.0)) continue;
    any = true;
    double value = 0.0;
    double s = d;
    if (d < iv.lo) {
      value = std::log(iv.lo / d);
      s = iv.lo;
    } else if (d > iv.hi) {
      value = std::log(d / iv.hi);
      s = iv.hi;
    }
    if (value < best.value) best = {value, s};
  }
  if (!any) throw Error(ErrorCode::EmptySet, "distance set has no positive distances");
  return best;
}

BPBounds compute_L(const DomainSpec& spec, Complex z) {
  const NearestBoundary nb = nearest_boundary(spec, z);
  BPBounds out;
  out.d = nb.d;
  out.L = std::numeric_limits<double>::infinity();
  for (const BoundaryWitness& w : nb.witnesses) {
    const LogDistance ld = log_distance_to_set(nb.d, distance_set(spec, w.point));
    if (ld.value < out.L) {
      out.L = ld.value;
      out.witness_a = w.point;
      out.witness_s = ld.witness_s;
    }
  }
  return out;
}

double bp_lower(double d, double L) noexcept {
  return 1.0 / (2.0 * std::numbers::sqrt2 * d * (kappa() + L));
}

double bp_upper(double d, double L) noexcept {
  return (kappa() + std::numbers::pi / 4.0) / (d * (kappa() + L));
}

BPBounds bp_bounds(const DomainSpec& spec, Complex z) {
  BPBounds out = compute_L(spec, z);
  out.lower = bp_lower(out.d, out.L);
  out.upper = bp_upper(out.d, out.L);
  return out;
}

}  // namespace hypbound
