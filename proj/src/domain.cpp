#include "domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "error.hpp"

namespace hypbound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Parameter in [0, 1] of the point of [p, q] closest to z.
double segment_param(Complex p, Complex q, Complex z) noexcept {
  const Complex v = q - p;
  const double len2 = std::norm(v);
  if (len2 == 0.0) return 0.0;
  const double u = (std::conj(z - p) * v).real() / len2;
  return std::clamp(u, 0.0, 1.0);
}

Complex segment_closest(Complex p, Complex q, Complex z) noexcept {
  const double u = segment_param(p, q, z);
  // Snap to the endpoints so that endpoint witnesses are bit-exact.
  if (u == 0.0) return p;
  if (u == 1.0) return q;
  return p + u * (q - p);
}

// Unit vector of z, or fallback when z is the origin.
Complex direction(Complex z, Complex fallback = {1.0, 0.0}) noexcept {
  const double m = std::abs(z);
  return m > 0.0 ? z / m : fallback;
}

void check_inside_disk(const Primitive& prim) {
  std::visit(Overloaded{
                 [](const UnitCircle&) {},
                 [](const SinglePoint& s) {
                   if (!finite(s.p) || std::abs(s.p) >= 1.0)
                     throw Error(ErrorCode::InvalidArgument, "point obstacle must lie in the open unit disk");
                 },
                 [](const Segment& s) {
                   if (!finite(s.p) || !finite(s.q))
                     throw Error(ErrorCode::InvalidArgument, "segment endpoints must be finite");
                   if (s.p == s.q)
                     throw Error(ErrorCode::InvalidArgument, "segment endpoints must differ");
                   // The disk is convex, so checking the endpoints suffices.
                   if (std::abs(s.p) >= 1.0 || std::abs(s.q) >= 1.0)
                     throw Error(ErrorCode::InvalidArgument, "segment must lie in the open unit disk");
                 },
                 [](const ObstacleDisk& d) {
                   if (!finite(d.center) || !std::isfinite(d.radius) || !(d.radius > 0.0))
                     throw Error(ErrorCode::InvalidArgument, "obstacle disk needs a finite center and radius > 0");
                   if (std::abs(d.center) + d.radius >= 1.0)
                     throw Error(ErrorCode::InvalidArgument, "obstacle disk must lie in the open unit disk");
                 },
             },
             prim);
}

Primitive rotate(const Primitive& prim, Complex rot) {
  return std::visit(Overloaded{
                        [](const UnitCircle& u) -> Primitive { return u; },
                        [&](const SinglePoint& s) -> Primitive { return SinglePoint{s.p * rot}; },
                        [&](const Segment& s) -> Primitive { return Segment{s.p * rot, s.q * rot}; },
                        [&](const ObstacleDisk& d) -> Primitive {
                          return ObstacleDisk{d.center * rot, d.radius};
                        },
                    },
                    prim);
}

}  // namespace

const char* primitive_name(const Primitive& prim) noexcept {
  return std::visit(Overloaded{
                        [](const UnitCircle&) { return "unit_circle"; },
                        [](const SinglePoint&) { return "point"; },
                        [](const Segment&) { return "segment"; },
                        [](const ObstacleDisk&) { return "disk"; },
                    },
                    prim);
}

double boundary_distance(const Primitive& prim, Complex z) noexcept {
  return std::visit(Overloaded{
                        [&](const UnitCircle&) { return std::abs(1.0 - std::abs(z)); },
                        [&](const SinglePoint& s) { return std::abs(z - s.p); },
                        [&](const Segment& s) { return std::abs(z - segment_closest(s.p, s.q, z)); },
                        [&](const ObstacleDisk& d) { return std::abs(std::abs(z - d.center) - d.radius); },
                    },
                    prim);
}

Complex closest_boundary_point(const Primitive& prim, Complex z) noexcept {
  return std::visit(Overloaded{
                        [&](const UnitCircle&) { return direction(z); },
                        [&](const SinglePoint& s) { return s.p; },
                        [&](const Segment& s) { return segment_closest(s.p, s.q, z); },
                        [&](const ObstacleDisk& d) { return d.center + d.radius * direction(z - d.center); },
                    },
                    prim);
}

double obstacle_distance(const Primitive& prim, Complex z) noexcept {
  if (const auto* d = std::get_if<ObstacleDisk>(&prim))
    return std::max(0.0, std::abs(z - d->center) - d->radius);
  return boundary_distance(prim, z);
}

// ---------------------------------------------------------------------------
// SequenceSpec

SequenceSpec SequenceSpec::geometric(double delta, double ratio, int count) {
  if (!(delta > 0.0 && delta < 1.0))
    throw Error(ErrorCode::InvalidArgument, "geometric sequence needs delta in (0, 1)");
  if (!(ratio > 0.0 && ratio < 1.0))
    throw Error(ErrorCode::InvalidArgument, "geometric sequence needs ratio in (0, 1)");
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "geometric sequence needs count >= 1");
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) pts.emplace_back(delta * std::pow(ratio, n), 0.0);
  return SequenceSpec(Geometric{delta, ratio, count}, std::move(pts));
}

SequenceSpec SequenceSpec::explicit_points(std::vector<Complex> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "explicit sequence must not be empty");
  for (const Complex& p : points) {
    if (!finite(p) || std::abs(p) >= 1.0)
      throw Error(ErrorCode::InvalidArgument, "sequence points must lie in the open unit disk");
  }
  auto resolved = points;
  return SequenceSpec(Explicit{std::move(points)}, std::move(resolved));
}

double SequenceSpec::truncation_floor() const noexcept {
  double floor = std::numeric_limits<double>::infinity();
  for (const Complex& p : resolved_) floor = std::min(floor, std::abs(p));
  return floor;
}

SequenceSpec SequenceSpec::rotated(double theta) const {
  const Complex rot = std::polar(1.0, theta);
  std::vector<Complex> pts;
  pts.reserve(resolved_.size());
  for (const Complex& p : resolved_) pts.push_back(p * rot);
  return explicit_points(std::move(pts));
}

// ---------------------------------------------------------------------------
// DomainSpec

const char* to_string(Membership m) noexcept {
  switch (m) {
    case Membership::InG: return "InG";
    case Membership::InE: return "InE";
    case Membership::OnUnitCircleOrOutside: return "OnUnitCircleOrOutside";
  }
  return "?";
}

DomainSpec::DomainSpec(std::vector<Primitive> obstacles, std::optional<SequenceSpec> sequence)
    : sequence_(std::move(sequence)), has_origin_(true) {
  for (const Primitive& prim : obstacles) {
    if (std::holds_alternative<UnitCircle>(prim))
      throw Error(ErrorCode::InvalidArgument, "the unit circle is implicit and must not be listed");
    check_inside_disk(prim);
  }
  primitives_.reserve(2 + obstacles.size() + (sequence_ ? sequence_->points().size() : 0));
  primitives_.emplace_back(UnitCircle{});
  primitives_.emplace_back(SinglePoint{{0.0, 0.0}});
  first_obstacle_ = primitives_.size();
  obstacle_count_ = obstacles.size();
  for (auto& prim : obstacles) primitives_.push_back(std::move(prim));
  if (sequence_) {
    for (const Complex& p : sequence_->points()) primitives_.emplace_back(SinglePoint{p});
  }
}

DomainSpec DomainSpec::unit_disk() {
  DomainSpec spec;
  spec.primitives_.emplace_back(UnitCircle{});
  spec.first_obstacle_ = 1;
  spec.obstacle_count_ = 0;
  spec.has_origin_ = false;
  return spec;
}

DomainSpec DomainSpec::punctured_disk() { return DomainSpec({}, std::nullopt); }

std::span<const Primitive> DomainSpec::obstacles() const noexcept {
  return std::span<const Primitive>(primitives_).subspan(first_obstacle_, obstacle_count_);
}

DomainSpec DomainSpec::rotated(double theta) const {
  const Complex rot = std::polar(1.0, theta);
  DomainSpec out = *this;
  for (auto& prim : out.primitives_) prim = rotate(prim, rot);
  if (sequence_) out.sequence_ = sequence_->rotated(theta);
  return out;
}

// ---------------------------------------------------------------------------
// Queries

Membership contains(const DomainSpec& spec, Complex z) {
  if (!finite(z) || std::abs(z) >= 1.0) return Membership::OnUnitCircleOrOutside;
  for (const Primitive& prim : spec.primitives()) {
    if (std::holds_alternative<UnitCircle>(prim)) continue;
    if (!(obstacle_distance(prim, z) > 0.0)) return Membership::InE;
  }
  return Membership::InG;
}

NearestBoundary nearest_boundary(const DomainSpec& spec, Complex z) {
  if (contains(spec, z) != Membership::InG)
    throw Error(ErrorCode::NotInDomain, "query point is not in G");
  const auto prims = spec.primitives();
  std::vector<double> dist(prims.size());
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < prims.size(); ++i) {
    dist[i] = boundary_distance(prims[i], z);
    d = std::min(d, dist[i]);
  }
  NearestBoundary out;
  out.d = d;
  const double cutoff = d * (1.0 + kNearestTieTolerance);
  for (std::size_t i = 0; i < prims.size(); ++i) {
    if (dist[i] <= cutoff) out.witnesses.push_back({i, closest_boundary_point(prims[i], z)});
  }
  return out;
}

double distance_to_boundary(const DomainSpec& spec, Complex a) noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (const Primitive& prim : spec.primitives()) best = std::min(best, boundary_distance(prim, a));
  return best;
}

DistanceSet distance_set(const DomainSpec& spec, Complex a) {
  if (!finite(a) || !(distance_to_boundary(spec, a) <= kOnBoundaryTolerance))
    throw Error(ErrorCode::NotOnBoundary, "base point is not on the boundary of G");
  DistanceSet out;
  out.intervals.reserve(spec.primitives().size());
  for (const Primitive& prim : spec.primitives()) {
    out.intervals.push_back(std::visit(
        Overloaded{
            [&](const UnitCircle&) {
              const double m = std::abs(a);
              return Interval{std::abs(1.0 - m), 1.0 + m};
            },
            [&](const SinglePoint& s) {
              const double r = std::abs(a - s.p);
              return Interval{r, r};
            },
            [&](const Segment& s) {
              return Interval{boundary_distance(s, a), std::max(std::abs(a - s.p), std::abs(a - s.q))};
            },
            [&](const ObstacleDisk& d) {
              const double r = std::abs(a - d.center);
              return Interval{std::abs(r - d.radius), r + d.radius};
            },
        },
        prim));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Paths

Complex ArcPiece::at(double s) const noexcept { return std::polar(radius, start_angle + s * sweep); }

Complex BoundaryPath::start() const {
  if (arc) return arc->at(0.0);
  if (radial) return radial->from;
  throw Error(ErrorCode::MalformedPath, "empty path");
}

Complex BoundaryPath::end() const {
  if (radial) return radial->to;
  if (arc) return arc->at(1.0);
  throw Error(ErrorCode::MalformedPath, "empty path");
}

BoundaryPath BoundaryPath::arc_then_radial(Complex start, Complex target) {
  const double r = std::abs(start);
  if (!(r > 0.0) || target == Complex{})
    throw Error(ErrorCode::MalformedPath, "arc+radial path needs nonzero start and target");
  BoundaryPath path;
  const double theta0 = std::arg(start);
  const double sweep = std::remainder(std::arg(target) - theta0, kTwoPi);
  const Complex corner = r * direction(target);
  if (sweep != 0.0) path.arc = ArcPiece{r, theta0, sweep};
  if (std::abs(target) != r || !path.arc) path.radial = RadialPiece{path.arc ? corner : start, target};
  return path;
}

BoundaryPath BoundaryPath::radial_segment(Complex from, Complex to) {
  BoundaryPath path;
  path.radial = RadialPiece{from, to};
  return path;
}

namespace {

double path_scale(const BoundaryPath& path) {
  double scale = 0.0;
  if (path.arc) scale = std::max(scale, std::abs(path.arc->radius));
  if (path.radial) scale = std::max({scale, std::abs(path.radial->from), std::abs(path.radial->to)});
  return scale;
}

void validate_path(const BoundaryPath& path, Complex start, double scale) {
  if (!path.arc && !path.radial) throw Error(ErrorCode::MalformedPath, "path has no pieces");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorCode::MalformedPath, "degenerate path");
  const double eps = 1e-12 * scale;
  if (path.arc) {
    const ArcPiece& a = *path.arc;
    if (!(a.radius > 0.0) || !std::isfinite(a.start_angle) || !std::isfinite(a.sweep) ||
        std::abs(a.sweep) > kTwoPi + 1e-12)
      throw Error(ErrorCode::MalformedPath, "arc must have positive radius and |sweep| <= 2 pi");
  }
  if (path.radial) {
    const RadialPiece& r = *path.radial;
    if (!finite(r.from) || !finite(r.to)) throw Error(ErrorCode::MalformedPath, "radial piece is not finite");
    const Complex prod = std::conj(r.from) * r.to;
    if (std::abs(prod.imag()) > 1e-12 * std::abs(r.from) * std::abs(r.to) || prod.real() < 0.0)
      throw Error(ErrorCode::MalformedPath, "radial piece does not lie on a ray through the origin");
  }
  if (path.arc && path.radial && std::abs(path.arc->at(1.0) - path.radial->from) > eps)
    throw Error(ErrorCode::MalformedPath, "radial piece does not start where the arc ends");
  if (std::abs(path.start() - start) > eps) throw Error(ErrorCode::MalformedPath, "path does not begin at start");
}

// Real roots of a*s^2 + b*s + c, plus the vertex (closest approach when the
// discriminant is slightly negative).
void push_quadratic(double a, double b, double c, std::vector<double>& out) {
  if (a == 0.0) return;
  out.push_back(-b / (2.0 * a));
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  // Numerically stable pair of roots.
  const double qv = -0.5 * (b + std::copysign(sq, b));
  if (qv != 0.0) {
    out.push_back(qv / a);
    out.push_back(c / qv);
  }
}

// Arc parameters (possibly outside [0, 1]) at which the arc passes the
// direction of x.
void push_arc_params(const ArcPiece& arc, Complex x, std::vector<double>& out) {
  if (arc.sweep == 0.0 || x == Complex{}) return;
  const double diff = std::arg(x) - arc.start_angle;
  double m = std::fmod(arc.sweep > 0.0 ? diff : -diff, kTwoPi);
  if (m < 0.0) m += kTwoPi;
  const double span = std::abs(arc.sweep);
  out.push_back(m / span);
  out.push_back((m - kTwoPi) / span);
}

std::vector<double> arc_candidates(const ArcPiece& arc, const Primitive& prim) {
  std::vector<double> s{0.0, 1.0};
  const double r = arc.radius;
  std::visit(Overloaded{
                 [](const UnitCircle&) {},
                 [&](const SinglePoint& p) { push_arc_params(arc, p.p, s); },
                 [&](const Segment& seg) {
                   const Complex v = seg.q - seg.p;
                   std::vector<double> u;
                   push_quadratic(std::norm(v), 2.0 * (std::conj(seg.p) * v).real(), std::norm(seg.p) - r * r, u);
                   u.push_back(0.0);
                   u.push_back(1.0);
                   for (double ui : u) push_arc_params(arc, seg.p + std::clamp(ui, 0.0, 1.0) * v, s);
                 },
                 [&](const ObstacleDisk& d) {
                   const double dc = std::abs(d.center);
                   if (dc == 0.0) return;
                   const double along = (r * r - d.radius * d.radius + dc * dc) / (2.0 * dc);
                   const double h = std::sqrt(std::max(0.0, r * r - along * along));
                   const Complex e = d.center / dc;
                   push_arc_params(arc, e * Complex(along, h), s);
                   push_arc_params(arc, e * Complex(along, -h), s);
                 },
             },
             prim);
  return s;
}

std::vector<double> radial_candidates(const RadialPiece& rad, const Primitive& prim) {
  std::vector<double> s{0.0, 1.0};
  const Complex v = rad.to - rad.from;
  const double len2 = std::norm(v);
  if (len2 == 0.0) return s;
  auto project = [&](Complex x) { s.push_back((std::conj(x - rad.from) * v).real() / len2); };
  auto circle = [&](Complex c, double rho) {
    const Complex w = rad.from - c;
    push_quadratic(len2, 2.0 * (std::conj(w) * v).real(), std::norm(w) - rho * rho, s);
  };
  std::visit(Overloaded{
                 [&](const UnitCircle&) { circle({0.0, 0.0}, 1.0); },
                 [&](const SinglePoint& p) { project(p.p); },
                 [&](const Segment& seg) {
                   project(seg.p);
                   project(seg.q);
                   const Complex w = seg.q - seg.p;
                   const double denom = (std::conj(v) * w).imag();
                   if (denom != 0.0) s.push_back((std::conj(seg.p - rad.from) * w).imag() / denom);
                 },
                 [&](const ObstacleDisk& d) { circle(d.center, d.radius); },
             },
             prim);
  return s;
}

// Smallest verified parameter in [0, 1] at which the piece meets a primitive.
template <class Piece, class Candidates>
std::optional<double> first_hit_on_piece(const DomainSpec& spec, const Piece& piece, double tol,
                                         Candidates candidates) {
  std::optional<double> best;
  for (const Primitive& prim : spec.primitives()) {
    for (double s : candidates(piece, prim)) {
      if (!std::isfinite(s)) continue;
      s = std::clamp(s, 0.0, 1.0);
      if (best && s >= *best) continue;
      if (boundary_distance(prim, piece.at(s)) <= tol) best = s;
    }
  }
  return best;
}

}  // namespace

Complex first_boundary_hit(const DomainSpec& spec, const BoundaryPath& path, Complex start) {
  const double scale = path_scale(path);
  validate_path(path, start, scale);
  const double tol = kPathHitTolerance * scale;
  if (path.arc) {
    if (auto s = first_hit_on_piece(spec, *path.arc, tol, arc_candidates)) return path.arc->at(*s);
  }
  if (path.radial) {
    if (auto s = first_hit_on_piece(spec, *path.radial, tol, radial_candidates)) return path.radial->at(*s);
  }
  throw Error(ErrorCode::MalformedPath, "path never meets the boundary of G");
}

}  // namespace hypbound
