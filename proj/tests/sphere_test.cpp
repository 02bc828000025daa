#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "toriplan/error.hpp"
#include "toriplan/sampling.hpp"
#include "toriplan/sphere.hpp"

using namespace toriplan;

namespace {

constexpr double kPi = std::numbers::pi;
const SphereKind kS1{Parity::kOdd, 1};
const SphereKind kS2{Parity::kEven, 1};
const SphereKind kS3{Parity::kOdd, 2};

double angle(const SpherePoint& p) { return oracle::angle_of(p[0], p[1]); }

double arc(const SpherePoint& a, const SpherePoint& b) {
  return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

void expect_coords(const SpherePoint& p, std::vector<double> want, double tol = 1e-12) {
  ASSERT_EQ(p.dim(), static_cast<int>(want.size()));
  for (int i = 0; i < p.dim(); ++i) EXPECT_NEAR(p[i], want[static_cast<std::size_t>(i)], tol) << "coord " << i;
}

}  // namespace

TEST(SpherePoint, Construction) {
  EXPECT_THROW(SpherePoint(kS2, {1.0, 0.0}), Error);
  EXPECT_THROW(SpherePoint(kS1, {1.0, 1.0}), Error);
  EXPECT_THROW(SpherePoint::normalized(kS1, {0.0, 0.0}), Error);
  const SpherePoint p = SpherePoint::normalized(kS1, {3.0, 4.0});
  EXPECT_NEAR(p[0], 0.6, 1e-15);
  EXPECT_NEAR(p.norm(), 1.0, 1e-15);
  expect_coords(SpherePoint::basepoint(kS3), {1, 0, 0, 0}, 0.0);
  EXPECT_EQ(kS3.ambient_dim(), 4);
  EXPECT_EQ(kS2.ambient_dim(), 3);
}

TEST(Geodesic, QuarterTurnMidpoint) {
  const PathSegment s = s2_short_geodesic(SpherePoint::from_angle(0.0), SpherePoint::from_angle(kPi / 2));
  EXPECT_NEAR(angle(s.at(0.5)), kPi / 4, 1e-14);
  EXPECT_STREQ(s.name(), "geodesic");
}

TEST(Geodesic, EqualPointsGiveConstant) {
  const SpherePoint x = SpherePoint::from_angle(1.0);
  const PathSegment s = s2_short_geodesic(x, x);
  EXPECT_STREQ(s.name(), "constant");
  EXPECT_EQ(s.at(0.3).distance(x), 0.0);
}

TEST(Geodesic, AntipodalInputRejected) {
  const SpherePoint x = SpherePoint::from_angle(0.3);
  try {
    s2_short_geodesic(x, -x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAntipodalInput);
  }
}

TEST(Geodesic, MatchesAngleInterpolationOnCircle) {
  Rng rng = sample_rng(21, 0);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  for (int i = 0; i < 500; ++i) {
    const double t0 = a(rng);
    const double t1 = a(rng);
    const double diff = oracle::angle_diff(t0, t1);
    if (std::abs(diff) > kPi - 1e-3) continue;
    const PathSegment s = s2_short_geodesic(SpherePoint::from_angle(t0), SpherePoint::from_angle(t1));
    for (double u : {0.0, 0.2, 0.5, 0.9, 1.0}) {
      const double want = t0 + u * diff;
      const SpherePoint p = s.at(u);
      EXPECT_NEAR(p[0], std::cos(want), 1e-12);
      EXPECT_NEAR(p[1], std::sin(want), 1e-12);
    }
  }
}

TEST(Geodesic, ConstantSpeedOnHigherSpheres) {
  for (SphereKind kind : {kS2, kS3, SphereKind{Parity::kEven, 3}}) {
    Rng rng = sample_rng(22, static_cast<std::uint64_t>(kind.ambient_dim()));
    for (int i = 0; i < 200; ++i) {
      const SpherePoint x = random_sphere_point(kind, rng);
      const SpherePoint y = random_sphere_point(kind, rng);
      const double theta = arc(x, y);
      if (theta > kPi - 1e-3) continue;
      const PathSegment s = s2_short_geodesic(x, y);
      EXPECT_EQ(s.start().distance(x), 0.0);
      EXPECT_EQ(s.end().distance(y), 0.0);
      for (double u : {0.25, 0.5, 0.75}) {
        const SpherePoint p = s.at(u);
        EXPECT_NEAR(p.norm(), 1.0, 1e-12);
        EXPECT_NEAR(arc(x, p), u * theta, 1e-7);
        EXPECT_NEAR(arc(p, y), (1 - u) * theta, 1e-7);
      }
    }
  }
}

TEST(OddSemicircle, CircleExample) {
  const PathSegment s = s1_semicircle_odd(SpherePoint::from_angle(0.0));
  EXPECT_NEAR(angle(s.at(0.5)), kPi / 2, 1e-14);
  expect_coords(s.at(1.0), {-1.0, 0.0}, 0.0);
  expect_coords(s.at(0.0), {1.0, 0.0}, 0.0);
}

TEST(OddSemicircle, ThreeSphereExample) {
  const PathSegment s = s1_semicircle_odd(SpherePoint::basepoint(kS3));
  expect_coords(s.at(0.5), {0, 1, 0, 0});
}

TEST(OddSemicircle, FieldIsUnitTangent) {
  Rng rng = sample_rng(23, 0);
  for (int i = 0; i < 200; ++i) {
    const SpherePoint x = random_sphere_point(kS3, rng);
    const auto v = odd_field(x);
    double dot = 0.0;
    double sq = 0.0;
    for (int c = 0; c < 4; ++c) {
      dot += v[static_cast<std::size_t>(c)] * x[c];
      sq += v[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
    }
    EXPECT_NEAR(dot, 0.0, 1e-14);
    EXPECT_NEAR(sq, 1.0, 1e-14);
    const PathSegment s = s1_semicircle_odd(x);
    EXPECT_EQ(s.at(1.0).distance(-x), 0.0);
  }
}

TEST(EvenField, AtAntipodeOfBasepoint) {
  const SpherePoint minus_e = -SpherePoint::basepoint(kS2);
  const auto v = even_field(minus_e);
  EXPECT_NEAR(v[0], 0.0, 1e-15);
  EXPECT_NEAR(v[1], 1.0, 1e-15);
  EXPECT_NEAR(v[2], 0.0, 1e-15);
}

TEST(EvenField, UnitTangentEverywhereSampled) {
  for (SphereKind kind : {kS2, SphereKind{Parity::kEven, 2}}) {
    Rng rng = sample_rng(24, static_cast<std::uint64_t>(kind.k));
    for (int i = 0; i < 500; ++i) {
      const SpherePoint x = random_sphere_point(kind, rng);
      if (x[0] > 1.0 - 1e-6) continue;
      const auto v = even_field(x);
      double dot = 0.0;
      double sq = 0.0;
      for (int c = 0; c < x.dim(); ++c) {
        dot += v[static_cast<std::size_t>(c)] * x[c];
        sq += v[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
      }
      EXPECT_NEAR(dot, 0.0, 1e-12);
      EXPECT_NEAR(sq, 1.0, 1e-12);
    }
  }
}

TEST(EvenField, StaysUnitApproachingBasepoint) {
  for (double eps = 1e-1; eps > 5e-5; eps /= 10) {
    const SpherePoint x(kS2, {std::cos(eps), std::sin(eps) * 0.6, std::sin(eps) * 0.8});
    const auto v = even_field(x);
    EXPECT_NEAR(std::hypot(v[0], v[1], v[2]), 1.0, 1e-12) << eps;
  }
}

TEST(EvenField, PoleRejected) {
  try {
    even_field(SpherePoint::basepoint(kS2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPoleInput);
  }
}

TEST(EvenSemicircle, Examples) {
  const PathSegment s0 = s0_fixed_even(kS2);
  expect_coords(s0.at(0.5), {0, 1, 0});
  expect_coords(s0.at(0.0), {1, 0, 0}, 0.0);
  expect_coords(s0.at(1.0), {-1, 0, 0}, 0.0);
  EXPECT_STREQ(s0.name(), "meridian");

  const PathSegment s1 = s1_semicircle_even(-SpherePoint::basepoint(kS2));
  expect_coords(s1.at(1.0), {1, 0, 0}, 0.0);
}

TEST(EvenSemicircle, OnSphereAtManyTimes) {
  Rng rng = sample_rng(25, 0);
  for (int i = 0; i < 50; ++i) {
    const SpherePoint x = random_sphere_point(kS2, rng);
    const PathSegment s = s1_semicircle_even(x);
    for (int j = 0; j <= 100; ++j) EXPECT_NEAR(s.at(j / 100.0).norm(), 1.0, 1e-12);
    EXPECT_EQ(s.at(1.0).distance(-x), 0.0);
  }
}

TEST(Segments, ReverseSwapsEndpoints) {
  const SpherePoint x = SpherePoint::from_angle(0.4);
  const SpherePoint y = SpherePoint::from_angle(1.9);
  const PathSegment s = s2_short_geodesic(x, y).reverse();
  EXPECT_EQ(s.start().distance(y), 0.0);
  EXPECT_EQ(s.end().distance(x), 0.0);
  EXPECT_NEAR(s.at(0.25).distance(s2_short_geodesic(x, y).at(0.75)), 0.0, 1e-15);
}

TEST(TimedPath, ValidatesSpans) {
  const SpherePoint x = SpherePoint::from_angle(0.0);
  const PathSegment c{ConstantSegment{x}};
  EXPECT_THROW(TimedPath(std::vector<TimedPath::Piece>{{0.0, 0.4, c}, {0.5, 1.0, c}}), Error);
  EXPECT_THROW(TimedPath(std::vector<TimedPath::Piece>{}), Error);
  const TimedPath ok(std::vector<TimedPath::Piece>{{0.0, 0.5, c}, {0.5, 1.0, s1_semicircle_odd(x)}});
  EXPECT_NEAR(angle(ok.at(0.75)), kPi / 2, 1e-14);
}
