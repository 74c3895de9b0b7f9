#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "domain.hpp"
#include "error.hpp"

using namespace hypbound;

namespace {

DomainSpec points(std::vector<Complex> pts) {
  std::vector<Primitive> prims;
  for (Complex p : pts) prims.emplace_back(SinglePoint{p});
  return DomainSpec(std::move(prims), std::nullopt);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected hypbound::Error";
  return ErrorCode::InvalidArgument;
}

// Dense arc-length sampling of the path; returns the first sample within h of
// the boundary together with the sample spacing h.
struct SampledHit {
  Complex point;
  double spacing;
};

SampledHit sampled_first_hit(const DomainSpec& spec, const BoundaryPath& path, int samples) {
  const double arc_len = path.arc ? path.arc->radius * std::abs(path.arc->sweep) : 0.0;
  const double rad_len = path.radial ? std::abs(path.radial->to - path.radial->from) : 0.0;
  const double total = arc_len + rad_len;
  const double h = total / samples;
  for (int i = 0; i <= samples; ++i) {
    const double t = total * i / samples;
    const Complex w = t <= arc_len && path.arc ? path.arc->at(arc_len > 0 ? t / arc_len : 0.0)
                                               : path.radial->at(rad_len > 0 ? (t - arc_len) / rad_len : 0.0);
    if (distance_to_boundary(spec, w) <= h) return {w, h};
  }
  return {path.end(), h};
}

}  // namespace

TEST(FirstBoundaryHit, StartOnBoundaryIsReturned) {
  const DomainSpec spec = points({{0.5, 0.0}});
  const Complex b = first_boundary_hit(spec, BoundaryPath::radial_segment({0.5, 0.0}, {1.0, 0.0}), {0.5, 0.0});
  EXPECT_EQ(b, Complex(0.5, 0.0));
}

TEST(FirstBoundaryHit, RadialStartOnSequencePoint) {
  const DomainSpec spec = points({{0.5, 0.0}, {0.25, 0.0}});
  const Complex b = first_boundary_hit(spec, BoundaryPath::radial_segment({0.25, 0.0}, {0.5, 0.0}), {0.25, 0.0});
  EXPECT_EQ(b, Complex(0.25, 0.0));
}

TEST(FirstBoundaryHit, ArcMeetsObstaclePoint) {
  const DomainSpec spec = points({{0.0, 0.3}, {0.5, 0.0}});
  BoundaryPath path;
  path.arc = ArcPiece{0.3, 0.0, std::numbers::pi / 2.0};
  const Complex b = first_boundary_hit(spec, path, {0.3, 0.0});
  EXPECT_NEAR(std::abs(b - Complex(0.0, 0.3)), 0.0, 1e-15);

  const SampledHit sampled = sampled_first_hit(spec, path, 100000);
  EXPECT_LE(std::abs(sampled.point - b), 2.0 * sampled.spacing);
}

TEST(FirstBoundaryHit, ArcThenRadialStopsOnArc) {
  const DomainSpec spec = points({{0.0, 0.3}, {0.0, 0.6}});
  const BoundaryPath path = BoundaryPath::arc_then_radial({0.3, 0.0}, {0.0, 0.6});
  ASSERT_TRUE(path.arc && path.radial);
  const Complex b = first_boundary_hit(spec, path, {0.3, 0.0});
  EXPECT_NEAR(std::abs(b - Complex(0.0, 0.3)), 0.0, 1e-15);
}

TEST(FirstBoundaryHit, ArcTakesShorterWay) {
  // Obstacles on both sides; the shorter arc from angle 0 to angle 2pi/3 is
  // counter-clockwise and meets the point at angle pi/3 first.
  const DomainSpec spec = points({std::polar(0.4, std::numbers::pi / 3.0), std::polar(0.4, -std::numbers::pi / 2.0),
                                  std::polar(0.4, 2.0 * std::numbers::pi / 3.0)});
  const Complex b =
      first_boundary_hit(spec, BoundaryPath::arc_then_radial({0.4, 0.0}, std::polar(0.4, 2.0 * std::numbers::pi / 3.0)),
                         {0.4, 0.0});
  EXPECT_NEAR(std::abs(b - std::polar(0.4, std::numbers::pi / 3.0)), 0.0, 1e-14);
}

TEST(FirstBoundaryHit, RadialCrossesSegmentAndDisk) {
  const DomainSpec spec({Segment{{0.5, -0.1}, {0.5, 0.1}}, ObstacleDisk{{0.3, 0.0}, 0.05}}, std::nullopt);
  const Complex b = first_boundary_hit(spec, BoundaryPath::radial_segment({0.9, 0.0}, {0.0, 0.0}), {0.9, 0.0});
  EXPECT_NEAR(std::abs(b - Complex(0.5, 0.0)), 0.0, 1e-15);
  const Complex c = first_boundary_hit(spec, BoundaryPath::radial_segment({0.45, 0.0}, {0.0, 0.0}), {0.45, 0.0});
  EXPECT_NEAR(std::abs(c - Complex(0.35, 0.0)), 0.0, 1e-15);
}

TEST(FirstBoundaryHit, ArcCrossesSegmentAndDiskCircle) {
  const DomainSpec spec({Segment{{0.0, 0.2}, {0.0, 0.6}}, ObstacleDisk{{-0.4, 0.0}, 0.05}}, std::nullopt);
  BoundaryPath path;
  path.arc = ArcPiece{0.4, 0.0, std::numbers::pi};
  const Complex b = first_boundary_hit(spec, path, {0.4, 0.0});
  EXPECT_NEAR(std::abs(b - Complex(0.0, 0.4)), 0.0, 1e-14);

  const DomainSpec disk_only({ObstacleDisk{{-0.4, 0.0}, 0.05}}, std::nullopt);
  const Complex c = first_boundary_hit(disk_only, path, {0.4, 0.0});
  EXPECT_NEAR(std::abs(c), 0.4, 1e-14);
  EXPECT_NEAR(std::abs(std::abs(c - Complex(-0.4, 0.0)) - 0.05), 0.0, 1e-12);
  EXPECT_GT(c.imag(), 0.0);
}

TEST(FirstBoundaryHit, RadialOutwardMeetsUnitCircle) {
  const DomainSpec spec = DomainSpec::punctured_disk();
  const Complex b = first_boundary_hit(spec, BoundaryPath::radial_segment({0.0, 0.5}, {0.0, 1.0}), {0.0, 0.5});
  EXPECT_NEAR(std::abs(b - Complex(0.0, 1.0)), 0.0, 1e-15);
}

TEST(FirstBoundaryHit, MalformedPaths) {
  const DomainSpec spec = points({{0.5, 0.0}});
  EXPECT_EQ(code_of([&] { first_boundary_hit(spec, BoundaryPath{}, {0.5, 0.0}); }), ErrorCode::MalformedPath);
  // Not on a ray through the origin.
  EXPECT_EQ(code_of([&] {
              first_boundary_hit(spec, BoundaryPath::radial_segment({0.0, 0.5}, {0.5, 0.0}), {0.0, 0.5});
            }),
            ErrorCode::MalformedPath);
  // Start does not match the path.
  EXPECT_EQ(code_of([&] {
              first_boundary_hit(spec, BoundaryPath::radial_segment({0.1, 0.0}, {0.5, 0.0}), {0.2, 0.0});
            }),
            ErrorCode::MalformedPath);
  // Radial piece detached from the arc.
  BoundaryPath broken;
  broken.arc = ArcPiece{0.3, 0.0, 1.0};
  broken.radial = RadialPiece{{0.3, 0.0}, {0.5, 0.0}};
  EXPECT_EQ(code_of([&] { first_boundary_hit(spec, broken, {0.3, 0.0}); }), ErrorCode::MalformedPath);
  // End point not on the boundary and nothing met on the way.
  EXPECT_EQ(code_of([&] {
              first_boundary_hit(spec, BoundaryPath::radial_segment({0.0, 0.2}, {0.0, 0.6}), {0.0, 0.2});
            }),
            ErrorCode::MalformedPath);
}

TEST(FirstBoundaryHit, AgreesWithDenseSampling) {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const DomainSpec spec({Segment{{0.1, 0.3}, {0.35, 0.05}}, Segment{{-0.5, -0.1}, {-0.2, -0.4}},
                         ObstacleDisk{{-0.3, 0.35}, 0.08}, ObstacleDisk{{0.4, -0.4}, 0.1}},
                        SequenceSpec::geometric(0.6, 0.7, 12).rotated(0.4));
  int checked = 0;
  while (checked < 60) {
    const Complex start{uni(rng), uni(rng)};
    if (contains(spec, start) != Membership::InG) continue;
    const auto pts = spec.sequence()->points();
    const Complex target = pts[static_cast<std::size_t>(rng() % pts.size())];
    const BoundaryPath path = BoundaryPath::arc_then_radial(start, target);
    const Complex b = first_boundary_hit(spec, path, start);
    EXPECT_LE(distance_to_boundary(spec, b), 1e-10);
    const SampledHit sampled = sampled_first_hit(spec, path, 200000);
    EXPECT_LE(std::abs(sampled.point - b), 3.0 * sampled.spacing) << "start " << start << " target " << target;
    ++checked;
  }
}
