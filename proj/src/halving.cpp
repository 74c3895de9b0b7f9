#include "halving.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bp_metric.hpp"
#include "error.hpp"

namespace hypbound {

namespace {

constexpr double kTwoSqrt2 = 2.0 * std::numbers::sqrt2;
constexpr int kClearanceDirections = 64;
// Absolute tolerance for "lies on the boundary of G" in certificates.
constexpr double kBoundaryTolerance = 1e-10;

// Unique n >= 0 with 2^-(n+1) delta < m <= 2^-n delta, for 0 < m <= delta.
int dyadic_level(double m, double delta) {
  int n = 0;
  while (m <= std::ldexp(delta, -(n + 1))) {
    ++n;
    if (n > 2000) throw Error(ErrorCode::TruncationExceeded, "magnitude below representable dyadic scale");
  }
  return n;
}

std::size_t argmax_magnitude(const SequenceSpec& seq) {
  const auto pts = seq.points();
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (std::abs(pts[i]) > std::abs(pts[best])) best = i;
  }
  return best;
}

bool on_unit_circle(const DomainSpec& spec, const BoundaryWitness& w) {
  return std::holds_alternative<UnitCircle>(spec.primitives()[w.primitive]);
}

double angle_0_2pi(Complex z) {
  const double a = std::arg(z);
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

// Nearest witness on the unit circle if there is one, otherwise the witness of
// smallest magnitude, then smallest angle.
const BoundaryWitness& select_zeta(const DomainSpec& spec, const NearestBoundary& nb) {
  for (const BoundaryWitness& w : nb.witnesses) {
    if (on_unit_circle(spec, w)) return w;
  }
  return *std::min_element(nb.witnesses.begin(), nb.witnesses.end(),
                           [](const BoundaryWitness& x, const BoundaryWitness& y) {
                             const double mx = std::abs(x.point), my = std::abs(y.point);
                             if (mx != my) return mx < my;
                             return angle_0_2pi(x.point) < angle_0_2pi(y.point);
                           });
}

// A boundary point at distance >= delta/2 from zeta: the origin when zeta is
// far enough from it, otherwise the first boundary point on the ray from the
// largest sequence point outwards.
Complex gap_partner(const DomainSpec& spec, const SequenceSpec& seq, Complex zeta, double delta) {
  if (std::abs(zeta) >= delta / 2.0) return {0.0, 0.0};
  const Complex aj = seq.points()[argmax_magnitude(seq)];
  return first_boundary_hit(spec, BoundaryPath::radial_segment(aj, aj / std::abs(aj)), aj);
}

// Point of G on S(0, r) with the largest clearance from E among evenly spaced
// directions.
Complex clear_point_on_circle(const DomainSpec& spec, double r) {
  Complex best;
  double best_clearance = -1.0;
  for (int j = 0; j < kClearanceDirections; ++j) {
    const Complex w = std::polar(r, 2.0 * std::numbers::pi * j / kClearanceDirections);
    double clearance = std::numeric_limits<double>::infinity();
    for (const Primitive& prim : spec.primitives()) {
      if (std::holds_alternative<UnitCircle>(prim)) continue;
      clearance = std::min(clearance, obstacle_distance(prim, w));
    }
    if (clearance > best_clearance) {
      best_clearance = clearance;
      best = w;
    }
  }
  if (contains(spec, best) != Membership::InG)
    throw Error(ErrorCode::HypothesisViolated, "no sampled direction of the circle meets G");
  return best;
}

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); }

}  // namespace

// ---------------------------------------------------------------------------

HalvingReport check_halving(const SequenceSpec& seq) {
  const auto pts = seq.points();
  HalvingReport rep;
  auto fail = [&](std::size_t i, std::string why) {
    rep.ok = false;
    rep.first_violation = i;
    rep.reason = std::move(why);
    return rep;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == Complex{}) return fail(i, "sequence point is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (pts[j] == pts[i]) return fail(i, "sequence point repeats an earlier point");
    }
    if (i + 1 < pts.size() && std::abs(pts[i + 1]) < 0.5 * std::abs(pts[i]))
      return fail(i, "halving condition |a[n+1]| >= |a[n]|/2 fails");
  }
  if (pts.size() > 1 && !(std::abs(pts.back()) < std::abs(pts.front())))
    return fail(pts.size() - 1, "magnitudes do not decrease toward 0");
  return rep;
}

HalvingConstants constants_for_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
  const double kap = kappa();
  HalvingConstants k;
  k.delta = delta;
  k.branch_log4delta = 1.0 / (kTwoSqrt2 * (kap + std::log(4.0 / delta)));
  k.branch_5log2 = 1.0 / (kTwoSqrt2 * (kap + 5.0 * std::numbers::ln2));
  k.c = std::min(k.branch_log4delta, k.branch_5log2);
  k.c_circle = 1.0 / (kTwoSqrt2 * kap);
  k.c_deep_cap = kTwoSqrt2 / (kap + 2.0 * std::log(6.0));
  return k;
}

HalvingConstants constants(const SequenceSpec& seq) {
  const HalvingReport rep = check_halving(seq);
  if (!rep.ok) throw Error(ErrorCode::HypothesisViolated, rep.reason);
  return constants_for_delta(std::abs(seq.points()[argmax_magnitude(seq)]));
}

std::size_t dyadic_witness(const SequenceSpec& seq, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "dyadic level must be >= 0");
  const auto pts = seq.points();
  const double delta = std::abs(pts[argmax_magnitude(seq)]);
  const double hi = std::ldexp(delta, -n);
  const double lo = std::ldexp(delta, -(n + 1));
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double m = std::abs(pts[k]);
    if (lo < m && m <= hi) return k;
  }
  throw Error(ErrorCode::TruncationExceeded,
              "no sequence point in dyadic annulus " + std::to_string(n) + " (truncated sequence)");
}

double lower_bound(const HalvingConstants& k, Complex z) {
  if (z == Complex{}) throw Error(ErrorCode::ZeroArgument, "lower bound undefined at z = 0");
  return k.c / std::abs(z);
}

const char* to_string(ProofCase c) noexcept {
  switch (c) {
    case ProofCase::CircleNearest: return "CircleNearest";
    case ProofCase::FarFromE: return "FarFromE";
    case ProofCase::MidRange: return "MidRange";
    case ProofCase::DeepSmallGap: return "DeepSmallGap";
    case ProofCase::DeepComparable: return "DeepComparable";
  }
  return "?";
}

std::optional<ProofCase> proof_case_from_string(const std::string& s) noexcept {
  for (ProofCase c : {ProofCase::CircleNearest, ProofCase::FarFromE, ProofCase::MidRange,
                      ProofCase::DeepSmallGap, ProofCase::DeepComparable}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

double case_log_cap(ProofCase c, double delta, Complex z, Complex zeta) {
  const double gap = std::abs(z - zeta);
  switch (c) {
    case ProofCase::CircleNearest: return 0.0;
    case ProofCase::FarFromE: return std::log(4.0 / delta);
    case ProofCase::MidRange: return std::numbers::ln2 - std::log(gap);
    case ProofCase::DeepSmallGap: return std::log(4.5) + std::log(std::abs(z) / gap);
    case ProofCase::DeepComparable: return std::log(32.0);
  }
  return 0.0;
}

Certificate build_certificate(const DomainSpec& spec, const HalvingConstants& k, Complex z) {
  if (!spec.sequence()) throw Error(ErrorCode::HypothesisViolated, "domain has no halving sequence");
  const SequenceSpec& seq = *spec.sequence();
  const NearestBoundary nb = nearest_boundary(spec, z);
  const BoundaryWitness& zw = select_zeta(spec, nb);
  const double delta = k.delta;

  Certificate cert;
  cert.z = z;
  cert.zeta = zw.point;
  const double gap = std::abs(z - cert.zeta);
  const double abs_z = std::abs(z);

  if (on_unit_circle(spec, zw)) {
    // Second point on the unit circle at the same distance from zeta.
    cert.case_tag = ProofCase::CircleNearest;
    cert.b = cert.zeta * std::polar(1.0, 2.0 * std::asin(std::min(1.0, gap / 2.0)));
  } else if (gap >= delta / 2.0) {
    cert.case_tag = ProofCase::FarFromE;
    cert.b = gap_partner(spec, seq, cert.zeta, delta);
  } else if (abs_z >= delta / 2.0) {
    cert.case_tag = ProofCase::MidRange;
    cert.b = gap_partner(spec, seq, cert.zeta, delta);
  } else if (gap <= abs_z / 8.0) {
    cert.case_tag = ProofCase::DeepSmallGap;
    const int n = dyadic_level(std::abs(cert.zeta), delta);
    const Complex target = seq.points()[dyadic_witness(seq, n + 2)];
    const Complex w = clear_point_on_circle(spec, std::ldexp(delta, -(n + 2)));
    cert.b = first_boundary_hit(spec, BoundaryPath::arc_then_radial(w, target), w);
  } else {
    cert.case_tag = ProofCase::DeepComparable;
    if (std::abs(cert.zeta) >= abs_z / 4.0) {
      cert.b = {0.0, 0.0};
    } else {
      const int n = dyadic_level(abs_z, delta);
      const Complex target = seq.points()[dyadic_witness(seq, n)];
      cert.b = first_boundary_hit(spec, BoundaryPath::arc_then_radial(z, target), z);
    }
  }

  cert.log_ratio = std::abs(std::log(gap / std::abs(cert.zeta - cert.b)));
  cert.case_log_cap = case_log_cap(cert.case_tag, delta, z, cert.zeta);
  cert.implied_lower = bp_lower(gap, cert.log_ratio);
  return cert;
}

std::optional<std::string> certificate_failure(const DomainSpec& spec, const HalvingConstants& k,
                                               const Certificate& cert, double tol) {
  if (!spec.sequence()) return "domain has no halving sequence";
  const SequenceSpec& seq = *spec.sequence();
  if (!check_halving(seq).ok) return "sequence violates the halving hypothesis";
  const HalvingConstants expect = constants(seq);
  if (!near(k.delta, expect.delta, 1e-15) || !near(k.c, expect.c, 1e-15))
    return "constants do not match the domain's sequence";

  if (contains(spec, cert.z) != Membership::InG) return "z is not in G";
  const NearestBoundary nb = nearest_boundary(spec, cert.z);
  const double gap = std::abs(cert.z - cert.zeta);
  const double abs_z = std::abs(cert.z);
  // Absolute slack covers rounding in 1 - |z| right next to the unit circle.
  if (!(gap >= nb.d * (1.0 - 1e-12) - 1e-15 && gap <= nb.d * (1.0 + kNearestTieTolerance)))
    return "zeta is not a nearest boundary point";
  if (!(distance_to_boundary(spec, cert.zeta) <= kBoundaryTolerance)) return "zeta is not on the boundary";
  if (!(distance_to_boundary(spec, cert.b) <= kBoundaryTolerance)) return "b is not on the boundary";
  if (cert.b == cert.zeta) return "b coincides with zeta";

  const bool circle_witness = std::any_of(nb.witnesses.begin(), nb.witnesses.end(),
                                          [&](const BoundaryWitness& w) { return on_unit_circle(spec, w); });
  const double delta = k.delta;
  bool case_ok = false;
  switch (cert.case_tag) {
    case ProofCase::CircleNearest:
      case_ok = std::abs(std::abs(cert.zeta) - 1.0) <= kOnBoundaryTolerance;
      break;
    case ProofCase::FarFromE:
      case_ok = !circle_witness && gap >= delta / 2.0;
      break;
    case ProofCase::MidRange:
      case_ok = !circle_witness && gap < delta / 2.0 && abs_z >= delta / 2.0;
      break;
    case ProofCase::DeepSmallGap:
      case_ok = !circle_witness && gap < delta / 2.0 && abs_z < delta / 2.0 && gap <= abs_z / 8.0;
      break;
    case ProofCase::DeepComparable:
      case_ok = !circle_witness && gap < delta / 2.0 && abs_z < delta / 2.0 && gap > abs_z / 8.0;
      break;
  }
  if (!case_ok) return std::string("case conditions do not hold for ") + to_string(cert.case_tag);

  const double log_ratio = std::abs(std::log(gap / std::abs(cert.zeta - cert.b)));
  if (!near(cert.log_ratio, log_ratio, tol)) return "log_ratio does not match |ln(|z-zeta|/|zeta-b|)|";
  const double cap = case_log_cap(cert.case_tag, delta, cert.z, cert.zeta);
  if (!near(cert.case_log_cap, cap, tol)) return "case_log_cap does not match the case";
  if (!(log_ratio <= cap + tol)) return "log_ratio exceeds the case cap";

  const double implied = bp_lower(gap, log_ratio);
  if (!near(cert.implied_lower, implied, tol)) return "implied_lower does not match";
  const double thm = k.c / abs_z;
  if (!(implied >= thm - 1e-12 * std::max(1.0, thm))) return "implied_lower is below c/|z|";
  if (!(kTwoSqrt2 * k.c * (kappa() + log_ratio) <= abs_z / gap + tol))
    return "chain inequality 2 sqrt2 c (kappa + log_ratio) <= |z|/|z-zeta| fails";
  return std::nullopt;
}

bool verify_certificate(const DomainSpec& spec, const HalvingConstants& k, const Certificate& cert, double tol) {
  return !certificate_failure(spec, k, cert, tol).has_value();
}

}  // namespace hypbound
