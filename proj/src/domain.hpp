#pragma once

// Plane domains G = D \ E where D is the unit disk and E is a finite union of
// points, segments and closed disks, together with the exact metric queries
// the estimates need: membership, nearest boundary points, achievable
// boundary distances and first boundary hits along arc/radial paths.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace hypbound {

using Complex = std::complex<double>;

struct UnitCircle {};

struct SinglePoint {
  Complex p;
};

struct Segment {
  Complex p;
  Complex q;
};

/// Closed disk removed from D. Only its bounding circle belongs to the boundary
/// of G; the interior is part of E.
struct ObstacleDisk {
  Complex center;
  double radius = 0.0;
};

using Primitive = std::variant<UnitCircle, SinglePoint, Segment, ObstacleDisk>;

const char* primitive_name(const Primitive& prim) noexcept;

/// Distance from z to the part of the primitive that belongs to the boundary
/// of G (for a disk: its bounding circle).
double boundary_distance(const Primitive& prim, Complex z) noexcept;

/// A point of the primitive's boundary part realizing boundary_distance.
Complex closest_boundary_point(const Primitive& prim, Complex z) noexcept;

/// Distance from z to the primitive viewed as a subset of E (zero inside an
/// obstacle disk). Meaningless for UnitCircle, which returns the boundary
/// distance.
double obstacle_distance(const Primitive& prim, Complex z) noexcept;

/// Halving sequence a_0, a_1, ... of obstacle points tending to the origin.
class SequenceSpec {
 public:
  struct Geometric {
    double delta = 0.0;
    double ratio = 0.0;
    int count = 0;
  };
  struct Explicit {
    std::vector<Complex> points;
  };

  /// a_n = delta * ratio^n on the positive real axis, n = 0 .. count-1.
  static SequenceSpec geometric(double delta, double ratio, int count);
  static SequenceSpec explicit_points(std::vector<Complex> points);

  const std::variant<Explicit, Geometric>& mode() const noexcept { return mode_; }
  std::span<const Complex> points() const noexcept { return resolved_; }

  /// Smallest magnitude among the resolved points: below this scale the
  /// truncated sequence no longer witnesses every dyadic annulus.
  double truncation_floor() const noexcept;

  SequenceSpec rotated(double theta) const;

 private:
  SequenceSpec(std::variant<Explicit, Geometric> mode, std::vector<Complex> resolved)
      : mode_(std::move(mode)), resolved_(std::move(resolved)) {}

  std::variant<Explicit, Geometric> mode_;
  std::vector<Complex> resolved_;
};

enum class Membership { InG, InE, OnUnitCircleOrOutside };

const char* to_string(Membership m) noexcept;

/// Immutable description of G. Primitive index 0 is always the unit circle;
/// when the origin is registered it sits at index 1, followed by the listed
/// obstacles and then one SinglePoint per resolved sequence point.
class DomainSpec {
 public:
  DomainSpec(std::vector<Primitive> obstacles, std::optional<SequenceSpec> sequence);

  /// D itself (E empty). Test fixture for the disk oracle.
  static DomainSpec unit_disk();
  /// D \ {0}.
  static DomainSpec punctured_disk();

  std::span<const Primitive> primitives() const noexcept { return primitives_; }
  std::span<const Primitive> obstacles() const noexcept;
  const std::optional<SequenceSpec>& sequence() const noexcept { return sequence_; }
  bool has_origin() const noexcept { return has_origin_; }

  /// Copy with every primitive and sequence point rotated about 0 by theta.
  DomainSpec rotated(double theta) const;

 private:
  DomainSpec() = default;

  std::vector<Primitive> primitives_;
  std::size_t first_obstacle_ = 1;
  std::size_t obstacle_count_ = 0;
  std::optional<SequenceSpec> sequence_;
  bool has_origin_ = false;
};

Membership contains(const DomainSpec& spec, Complex z);

struct BoundaryWitness {
  std::size_t primitive;
  Complex point;
};

struct NearestBoundary {
  double d = 0.0;
  std::vector<BoundaryWitness> witnesses;
};

/// Relative tolerance under which two primitive distances count as tied.
inline constexpr double kNearestTieTolerance = 1e-9;

/// Throws Error(NotInDomain) unless contains(spec, z) == InG.
NearestBoundary nearest_boundary(const DomainSpec& spec, Complex z);

/// Closed interval of distances |a - b| for b ranging over one primitive.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// One interval per primitive of the domain, in primitives() order.
struct DistanceSet {
  std::vector<Interval> intervals;
};

inline constexpr double kOnBoundaryTolerance = 1e-12;

/// Distance from a to the boundary of G (minimum over all primitives).
double distance_to_boundary(const DomainSpec& spec, Complex a) noexcept;

/// Throws Error(NotOnBoundary) if a is farther than kOnBoundaryTolerance
/// from every primitive.
DistanceSet distance_set(const DomainSpec& spec, Complex a);

/// Circular arc about the origin: radius * exp(i(start_angle + s * sweep)),
/// s in [0, 1].
struct ArcPiece {
  double radius = 0.0;
  double start_angle = 0.0;
  double sweep = 0.0;

  Complex at(double s) const noexcept;
};

/// Straight piece from `from` to `to`, both on one ray through the origin.
struct RadialPiece {
  Complex from;
  Complex to;

  Complex at(double s) const noexcept { return from + s * (to - from); }
};

/// At most one arc followed by at most one radial segment.
struct BoundaryPath {
  std::optional<ArcPiece> arc;
  std::optional<RadialPiece> radial;

  Complex start() const;
  Complex end() const;

  /// Shorter arc of S(0, |start|) from start to |start| * target / |target|,
  /// then the radial segment to target. Pieces of zero length are omitted
  /// (both are kept only if needed).
  static BoundaryPath arc_then_radial(Complex start, Complex target);
  static BoundaryPath radial_segment(Complex from, Complex to);
};

/// Relative (to the path's scale) tolerance for path/boundary incidence.
inline constexpr double kPathHitTolerance = 1e-10;

/// First point of the boundary of G met when traversing the path from start.
/// Throws Error(MalformedPath) if the path is not arc+radial shaped, does not
/// begin at start, or never meets the boundary.
Complex first_boundary_hit(const DomainSpec& spec, const BoundaryPath& path, Complex start);

}  // namespace hypbound
