#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bp_metric.hpp"
#include "error.hpp"
#include "harness.hpp"

using namespace hypbound;

TEST(Kappa, MatchesClosedForm) {
  EXPECT_NEAR(kappa(), 5.7627, 1e-4);
  EXPECT_NEAR(kappa(), 5.76274717403908605, 1e-15);
  EXPECT_DOUBLE_EQ(kappa(), 4.0 + std::log(3.0 + 2.0 * std::numbers::sqrt2));
}

TEST(LogDistance, InsideInterval) {
  const LogDistance ld = log_distance_to_set(0.5, DistanceSet{{{0.4, 0.6}}});
  EXPECT_EQ(ld.value, 0.0);
  EXPECT_EQ(ld.witness_s, 0.5);
}

TEST(LogDistance, BelowDegenerateInterval) {
  const LogDistance ld = log_distance_to_set(0.5, DistanceSet{{{1.0, 1.0}}});
  EXPECT_NEAR(ld.value, std::numbers::ln2, 1e-15);
  EXPECT_EQ(ld.witness_s, 1.0);
}

TEST(LogDistance, PicksCloserOfTwoIntervals) {
  const LogDistance ld = log_distance_to_set(0.4, DistanceSet{{{0.0, 0.1}, {0.9, 1.1}}});
  EXPECT_NEAR(ld.value, 0.810930216216328764, 1e-15);
  EXPECT_NEAR(ld.witness_s, 0.9, 1e-15);
}

TEST(LogDistance, AboveInterval) {
  const LogDistance ld = log_distance_to_set(0.8, DistanceSet{{{0.1, 0.3}}});
  EXPECT_NEAR(ld.value, 0.980829253011726329, 1e-15);
  EXPECT_NEAR(ld.witness_s, 0.3, 1e-15);
}

TEST(LogDistance, ZeroOnlyIntervalsAreEmpty) {
  try {
    log_distance_to_set(0.5, DistanceSet{{{0.0, 0.0}}});
    FAIL() << "expected EmptySet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySet);
  }
  try {
    log_distance_to_set(0.5, DistanceSet{});
    FAIL() << "expected EmptySet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySet);
  }
}

TEST(ComputeL, PuncturedDiskAtHalf) {
  const BPBounds b = bp_bounds(DomainSpec::punctured_disk(), {0.5, 0.0});
  EXPECT_EQ(b.L, 0.0);
  EXPECT_DOUBLE_EQ(b.d, 0.5);
  EXPECT_NEAR(b.lower, 0.12270307196054538, 1e-15);
  EXPECT_NEAR(b.upper, 2.27257769243656266, 1e-14);
}

TEST(ComputeL, SlitDisk) {
  const BPBounds b = compute_L(slit_domain(0.1), {0.5, 0.0});
  EXPECT_NEAR(b.d, 0.4, 1e-15);
  EXPECT_NEAR(b.L, 0.810930216216328764, 1e-12);
  EXPECT_NEAR(std::abs(b.witness_a - Complex(0.1, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(b.witness_s, 0.9, 1e-15);
}

TEST(ComputeL, InfimumOverTiedNearestPoints) {
  // Tied nearest points 0 and 0.6. From 0 the best gap is 0.6 (ln 2); from
  // 0.6 the unit circle is 0.4 away, which wins.
  const DomainSpec spec({SinglePoint{{0.6, 0.0}}}, std::nullopt);
  const BPBounds b = compute_L(spec, {0.3, 0.0});
  EXPECT_NEAR(b.d, 0.3, 1e-15);
  EXPECT_NEAR(b.L, std::log(0.4 / 0.3), 1e-12);
}

TEST(BPBounds, AlgebraicIdentities) {
  for (double d : {1e-6, 1e-3, 0.1, 0.5}) {
    for (double L : {0.0, 0.3, 2.0, 10.0}) {
      EXPECT_NEAR(bp_lower(d, L) * 2.0 * std::numbers::sqrt2 * d * (kappa() + L), 1.0, 1e-14);
      EXPECT_NEAR(bp_upper(d, L) / bp_lower(d, L), 2.0 * std::numbers::sqrt2 * (kappa() + std::numbers::pi / 4.0),
                  1e-12);
    }
  }
}

TEST(BPBounds, DecreaseWithDistance) {
  double prev_lo = INFINITY, prev_hi = INFINITY;
  for (double d = 0.01; d < 1.0; d += 0.01) {
    EXPECT_LT(bp_lower(d, 0.5), prev_lo);
    EXPECT_LT(bp_upper(d, 0.5), prev_hi);
    prev_lo = bp_lower(d, 0.5);
    prev_hi = bp_upper(d, 0.5);
  }
}

TEST(BPBounds, RejectsPointsOutsideG) {
  try {
    bp_bounds(DomainSpec::punctured_disk(), {0.0, 0.0});
    FAIL() << "expected NotInDomain";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInDomain);
  }
}
