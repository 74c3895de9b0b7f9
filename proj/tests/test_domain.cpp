#include <gtest/gtest.h>

#include <cmath>

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

}  // namespace

TEST(Contains, ClassifiesPoints) {
  const DomainSpec spec = points({{0.25, 0.0}});
  EXPECT_EQ(contains(spec, {0.5, 0.0}), Membership::InG);
  EXPECT_EQ(contains(spec, {0.25, 0.0}), Membership::InE);
  EXPECT_EQ(contains(spec, {0.0, 0.0}), Membership::InE);
  EXPECT_EQ(contains(spec, {1.0, 0.0}), Membership::OnUnitCircleOrOutside);
  EXPECT_EQ(contains(spec, {0.0, -1.5}), Membership::OnUnitCircleOrOutside);
}

TEST(Contains, ObstacleDiskInteriorIsInE) {
  const DomainSpec spec({ObstacleDisk{{0.3, 0.0}, 0.1}}, std::nullopt);
  EXPECT_EQ(contains(spec, {0.3, 0.0}), Membership::InE);
  EXPECT_EQ(contains(spec, {0.35, 0.05}), Membership::InE);
  EXPECT_EQ(contains(spec, {0.45, 0.0}), Membership::InG);
}

TEST(Contains, SegmentPoints) {
  const DomainSpec spec({Segment{{0.0, 0.0}, {0.1, 0.0}}}, std::nullopt);
  EXPECT_EQ(contains(spec, {0.05, 0.0}), Membership::InE);
  EXPECT_EQ(contains(spec, {0.05, 1e-9}), Membership::InG);
}

TEST(DomainSpec, RejectsInvalidPrimitives) {
  EXPECT_EQ(code_of([] { DomainSpec({SinglePoint{{1.0, 0.0}}}, std::nullopt); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { DomainSpec({Segment{{0.1, 0.0}, {0.1, 0.0}}}, std::nullopt); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { DomainSpec({Segment{{0.1, 0.0}, {0.99, 0.5}}}, std::nullopt); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { DomainSpec({ObstacleDisk{{0.5, 0.0}, 0.0}}, std::nullopt); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { DomainSpec({ObstacleDisk{{0.5, 0.0}, 0.5}}, std::nullopt); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { DomainSpec({UnitCircle{}}, std::nullopt); }), ErrorCode::InvalidArgument);
}

TEST(DomainSpec, RegistersOriginAndSequence) {
  const DomainSpec spec({}, SequenceSpec::geometric(0.5, 0.5, 4));
  ASSERT_EQ(spec.primitives().size(), 6u);
  EXPECT_TRUE(std::holds_alternative<UnitCircle>(spec.primitives()[0]));
  EXPECT_EQ(std::get<SinglePoint>(spec.primitives()[1]).p, Complex(0.0, 0.0));
  EXPECT_EQ(std::get<SinglePoint>(spec.primitives()[5]).p, Complex(0.0625, 0.0));
  EXPECT_TRUE(spec.has_origin());
  EXPECT_FALSE(DomainSpec::unit_disk().has_origin());
}

TEST(SequenceSpec, GeometricMagnitudesAreExact) {
  const SequenceSpec seq = SequenceSpec::geometric(0.5, 0.6, 5);
  for (int n = 0; n < 5; ++n) EXPECT_EQ(std::abs(seq.points()[n]), 0.5 * std::pow(0.6, n));
  EXPECT_DOUBLE_EQ(seq.truncation_floor(), 0.5 * std::pow(0.6, 4));
  EXPECT_EQ(code_of([] { SequenceSpec::geometric(1.0, 0.5, 3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { SequenceSpec::geometric(0.5, 0.5, 0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { SequenceSpec::explicit_points({}); }), ErrorCode::InvalidArgument);
}

TEST(NearestBoundary, SingleObstaclePoint) {
  const DomainSpec spec = points({{0.25, 0.0}});
  const NearestBoundary nb = nearest_boundary(spec, {0.3, 0.0});
  EXPECT_NEAR(nb.d, 0.05, 1e-15);
  ASSERT_EQ(nb.witnesses.size(), 1u);
  EXPECT_EQ(nb.witnesses[0].point, Complex(0.25, 0.0));
}

TEST(NearestBoundary, TieBetweenOriginAndCircle) {
  const NearestBoundary nb = nearest_boundary(DomainSpec::punctured_disk(), {0.5, 0.0});
  EXPECT_DOUBLE_EQ(nb.d, 0.5);
  ASSERT_EQ(nb.witnesses.size(), 2u);
  EXPECT_EQ(nb.witnesses[0].point, Complex(1.0, 0.0));  // unit circle is primitive 0
  EXPECT_EQ(nb.witnesses[1].point, Complex(0.0, 0.0));
}

TEST(NearestBoundary, SegmentEndpoint) {
  const DomainSpec spec({Segment{{0.0, 0.0}, {0.1, 0.0}}}, std::nullopt);
  const NearestBoundary nb = nearest_boundary(spec, {0.5, 0.0});
  EXPECT_NEAR(nb.d, 0.4, 1e-15);
  ASSERT_EQ(nb.witnesses.size(), 1u);
  EXPECT_EQ(nb.witnesses[0].point, Complex(0.1, 0.0));
}

TEST(NearestBoundary, SegmentInteriorProjection) {
  const DomainSpec spec({Segment{{-0.2, 0.1}, {0.2, 0.1}}}, std::nullopt);
  const NearestBoundary nb = nearest_boundary(spec, {0.05, 0.15});
  EXPECT_NEAR(nb.d, 0.05, 1e-15);
  ASSERT_EQ(nb.witnesses.size(), 1u);
  EXPECT_NEAR(std::abs(nb.witnesses[0].point - Complex(0.05, 0.1)), 0.0, 1e-15);
}

TEST(NearestBoundary, DiskRadialProjection) {
  const DomainSpec spec({ObstacleDisk{{0.3, 0.0}, 0.1}}, std::nullopt);
  const NearestBoundary nb = nearest_boundary(spec, {0.3, 0.15});
  EXPECT_NEAR(nb.d, 0.05, 1e-15);
  EXPECT_NEAR(std::abs(nb.witnesses.front().point - Complex(0.3, 0.1)), 0.0, 1e-15);
}

TEST(NearestBoundary, RejectsPointsOutsideG) {
  const DomainSpec spec = points({{0.25, 0.0}});
  EXPECT_EQ(code_of([&] { nearest_boundary(spec, {0.0, 0.0}); }), ErrorCode::NotInDomain);
  EXPECT_EQ(code_of([&] { nearest_boundary(spec, {0.25, 0.0}); }), ErrorCode::NotInDomain);
  EXPECT_EQ(code_of([&] { nearest_boundary(spec, {0.0, 1.0}); }), ErrorCode::NotInDomain);
}

TEST(DistanceSet, FromOrigin) {
  const DistanceSet ds = distance_set(DomainSpec::punctured_disk(), {0.0, 0.0});
  ASSERT_EQ(ds.intervals.size(), 2u);
  EXPECT_EQ(ds.intervals[0].lo, 1.0);  // unit circle
  EXPECT_EQ(ds.intervals[0].hi, 1.0);
  EXPECT_EQ(ds.intervals[1].lo, 0.0);  // the origin itself
  EXPECT_EQ(ds.intervals[1].hi, 0.0);
}

TEST(DistanceSet, FromSegmentEndpoint) {
  const DomainSpec spec({Segment{{0.0, 0.0}, {0.1, 0.0}}}, std::nullopt);
  const DistanceSet ds = distance_set(spec, {0.1, 0.0});
  ASSERT_EQ(ds.intervals.size(), 3u);
  EXPECT_NEAR(ds.intervals[0].lo, 0.9, 1e-15);
  EXPECT_NEAR(ds.intervals[0].hi, 1.1, 1e-15);
  EXPECT_NEAR(ds.intervals[2].lo, 0.0, 1e-15);
  EXPECT_NEAR(ds.intervals[2].hi, 0.1, 1e-15);
}

TEST(DistanceSet, ObstacleDiskInterval) {
  const DomainSpec spec({ObstacleDisk{{0.3, 0.0}, 0.1}}, std::nullopt);
  const DistanceSet ds = distance_set(spec, {0.0, 0.0});
  ASSERT_EQ(ds.intervals.size(), 3u);
  EXPECT_EQ(ds.intervals[0].lo, 1.0);
  EXPECT_EQ(ds.intervals[1].hi, 0.0);
  EXPECT_NEAR(ds.intervals[2].lo, 0.2, 1e-15);
  EXPECT_NEAR(ds.intervals[2].hi, 0.4, 1e-15);
}

TEST(DistanceSet, RequiresBoundaryPoint) {
  const DomainSpec spec = DomainSpec::punctured_disk();
  EXPECT_EQ(code_of([&] { distance_set(spec, {0.5, 0.0}); }), ErrorCode::NotOnBoundary);
  EXPECT_NO_THROW(distance_set(spec, {0.0, 1.0}));
  EXPECT_NO_THROW(distance_set(spec, std::polar(1.0 + 5e-13, 0.3)));
}
