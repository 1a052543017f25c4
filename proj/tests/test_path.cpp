// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/errors.h"
#include "stereocam/path.h"
#include "test_support.h"

#include <doctest.h>

using namespace stereocam;
using namespace stereocam::testing;
using Eigen::Quaterniond;
using Eigen::Vector3d;

namespace {

// cos and sin of 22.5 degrees, 50-digit evaluation rounded to double
constexpr double kCos225 = 0.92387953251128676;
constexpr double kSin225 = 0.38268343236508977;

std::vector<Waypoint> waypointsAt(std::initializer_list<Vector3d> positions)
{
  std::vector<Waypoint> out;
  for (const Vector3d &p : positions) {
    Waypoint w;
    w.position = p;
    out.push_back(w);
  }
  return out;
}

double binomial(int n, int k)
{
  double r = 1.0;
  for (int i = 1; i <= k; ++i)
    r = r * double(n - k + i) / double(i);
  return r;
}

// Direct Bernstein sum, the independent oracle for de Casteljau.
Vector3d bernstein(const std::vector<Vector3d> &cps, double t)
{
  const int n = int(cps.size()) - 1;
  Vector3d sum = Vector3d::Zero();
  for (int i = 0; i <= n; ++i)
    sum += binomial(n, i) * std::pow(t, i) * std::pow(1.0 - t, n - i) * cps[size_t(i)];
  return sum;
}

std::vector<Vector3d> randomControlPoints(Rng &rng, size_t count)
{
  std::vector<Vector3d> cps(count);
  for (auto &p : cps)
    p = {uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)};
  return cps;
}

Vector3d randomDirection(Rng &rng)
{
  std::normal_distribution<double> g;
  return Vector3d(g(rng), g(rng), g(rng)).normalized();
}

} // namespace

TEST_CASE("two waypoints give a straight segment in either mode")
{
  const auto wps = waypointsAt({{0, 0, 0}, {4, 0, 0}});
  for (PathMode mode : {PathMode::SingleBezier, PathMode::PiecewiseC1}) {
    const CameraPath path = buildPath(wps, mode);
    CHECK(evalPosition(path, 0.5).isApprox(Vector3d(2, 0, 0), 1e-15));
    CHECK(evalPosition(path, 0.0) == Vector3d(0, 0, 0));
    CHECK(evalPosition(path, 1.0) == Vector3d(4, 0, 0));
  }
}

TEST_CASE("quadratic midpoint")
{
  const auto wps = waypointsAt({{0, 0, 0}, {2, 0, 0}, {2, 2, 0}});
  const CameraPath bez = buildPath(wps, PathMode::SingleBezier);
  CHECK(evalPosition(bez, 0.5) == Vector3d(1.5, 0.5, 0.0));

  const CameraPath c1 = buildPath(wps, PathMode::PiecewiseC1);
  CHECK(c1.controlPoints().size() == 7);
  CHECK(evalPosition(c1, 0.5) == Vector3d(2, 0, 0));
}

TEST_CASE("endpoint interpolation and knots on random layouts")
{
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const DepthLayout layout = randomLayout(rng, uniformIndex(rng, 2, 12));
    const auto &wps = layout.waypoints;
    for (PathMode mode : {PathMode::SingleBezier, PathMode::PiecewiseC1}) {
      const CameraPath path = buildPath(layout, mode);
      REQUIRE((evalPosition(path, 0.0) - wps.front().position).norm() <= 1e-12);
      REQUIRE((evalPosition(path, 1.0) - wps.back().position).norm() <= 1e-12);
    }
    const CameraPath c1 = buildPath(layout, PathMode::PiecewiseC1);
    const size_t m = wps.size();
    for (size_t k = 0; k < m; ++k) {
      const double u = double(k) / double(m - 1);
      REQUIRE((evalPosition(c1, u) - wps[k].position).norm() <= 1e-9);
      REQUIRE(rotationAngle(evalOrientation(c1, u), wps[k].orientation) <= 1e-9);
    }
  }
}

TEST_CASE("de Casteljau agrees with Bernstein summation")
{
  Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const auto cps = randomControlPoints(rng, uniformIndex(rng, 1, 9));
    for (int probe = 0; probe < 20; ++probe) {
      const double t = uniform(rng, 0.0, 1.0);
      REQUIRE((bezierPoint(cps, t) - bernstein(cps, t)).norm() <= 1e-12);
    }
  }
}

TEST_CASE("single Bezier stays inside the control polygon hull")
{
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cps = randomControlPoints(rng, uniformIndex(rng, 2, 9));
    std::vector<Quaterniond> q(cps.size(), Quaterniond::Identity());
    const CameraPath path(PathMode::SingleBezier, cps, q);
    // a point outside the hull is separated from it along some direction
    std::vector<Vector3d> dirs{Vector3d::UnitX(), -Vector3d::UnitX(), Vector3d::UnitY(),
        -Vector3d::UnitY(), Vector3d::UnitZ(), -Vector3d::UnitZ()};
    for (int i = 0; i < 60; ++i)
      dirs.push_back(randomDirection(rng));
    for (int probe = 0; probe < 50; ++probe) {
      const Vector3d x = path.position(uniform(rng, 0.0, 1.0));
      for (const Vector3d &v : dirs) {
        double support = -std::numeric_limits<double>::infinity();
        for (const Vector3d &p : cps)
          support = std::max(support, v.dot(p));
        REQUIRE(v.dot(x) <= support + 1e-9);
      }
    }
  }
}

TEST_CASE("piecewise curve is C1 at interior knots")
{
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const DepthLayout layout = randomLayout(rng, uniformIndex(rng, 3, 10));
    const CameraPath path = buildPath(layout, PathMode::PiecewiseC1);
    const auto &cp = path.controlPoints();
    for (size_t k = 1; k + 1 < layout.waypoints.size(); ++k) {
      const Vector3d in = cp[3 * k] - cp[3 * k - 1];
      const Vector3d out = cp[3 * k + 1] - cp[3 * k];
      REQUIRE((in - out).norm() <= 1e-12 * (1.0 + in.norm()));
    }
  }
}

TEST_CASE("slerp examples")
{
  const Quaterniond q = yaw(0.7);
  for (double s : {0.0, 0.25, 0.5, 1.0})
    CHECK(rotationAngle(slerp(q, q, s), q) <= 1e-15);

  const Quaterniond half = slerp(Quaterniond::Identity(), yaw(std::numbers::pi / 2.0), 0.5);
  CHECK(half.w() == doctest::Approx(kCos225).epsilon(1e-15));
  CHECK(half.x() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(half.y() == doctest::Approx(kSin225).epsilon(1e-15));
  CHECK(half.z() == doctest::Approx(0.0).epsilon(1e-15));

  // the far-hemisphere representative of the target still takes the short way
  const Quaterniond target = yaw(2.0);
  const Quaterniond flipped(-target.w(), -target.x(), -target.y(), -target.z());
  const Quaterniond a = yaw(0.5);
  CHECK(rotationAngle(slerp(a, flipped, 0.0), a) <= 1e-15);
  CHECK(rotationAngle(slerp(a, flipped, 1.0), target) <= 1e-12);
  CHECK(rotationAngle(slerp(a, flipped, 0.5), yaw(1.25)) <= 1e-12);
}

TEST_CASE("slerp has constant angular velocity")
{
  Rng rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const Quaterniond a = randomRotation(rng), b = randomRotation(rng);
    const double total = rotationAngle(a, b);
    const double step = 1.0 / 64.0;
    for (int i = 0; i < 64; ++i) {
      const double s = i * step;
      const double d = rotationAngle(slerp(a, b, s), slerp(a, b, s + step));
      REQUIRE(std::abs(d - total * step) <= 1e-9);
    }
    REQUIRE(rotationAngle(slerp(a, b, 1.0), b) <= 1e-12);
  }
}

TEST_CASE("orientation is continuous across segment boundaries")
{
  Rng rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const DepthLayout layout = randomLayout(rng, uniformIndex(rng, 3, 12));
    const CameraPath path = buildPath(layout, PathMode::SingleBezier);
    const size_t m = layout.waypoints.size();
    for (size_t k = 1; k + 1 < m; ++k) {
      const double knot = double(k) / double(m - 1);
      const Quaterniond left = path.orientation(std::nextafter(knot, 0.0));
      const Quaterniond right = path.orientation(std::nextafter(knot, 1.0));
      REQUIRE(rotationAngle(left, right) <= 1e-9);
      REQUIRE(rotationAngle(left, path.orientation(knot)) <= 1e-9);
      REQUIRE(std::abs(path.orientation(knot).norm() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("arc table")
{
  const auto line = waypointsAt({{0, 0, 0}, {3, 1, -2}});
  const ArcTable id = buildArcTable(buildPath(line, PathMode::SingleBezier), 256);
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    REQUIRE(std::abs(id.map(a) - a) <= 1e-9);
  }

  Rng rng(27);
  for (int trial = 0; trial < 50; ++trial) {
    const DepthLayout layout = randomLayout(rng, uniformIndex(rng, 2, 10));
    for (PathMode mode : {PathMode::SingleBezier, PathMode::PiecewiseC1}) {
      const CameraPath path = buildPath(layout, mode);
      const ArcTable t1 = buildArcTable(path, 256);
      const ArcTable t2 = buildArcTable(path, 512);
      const ArcTable t8 = buildArcTable(path, 2048);
      const ArcTable t16 = buildArcTable(path, 4096);
      for (const ArcTable *t : {&t1, &t2, &t8, &t16}) {
        REQUIRE(t->arc().front() == 0.0);
        REQUIRE(t->param().front() == 0.0);
        REQUIRE(t->arc().back() == 1.0);
        REQUIRE(t->param().back() == 1.0);
        for (size_t i = 1; i < t->arc().size(); ++i) {
          REQUIRE(t->arc()[i] > t->arc()[i - 1]);
          REQUIRE(t->param()[i] > t->param()[i - 1]);
        }
      }
      double coarse = 0.0, fine = 0.0;
      for (int i = 0; i <= 100; ++i) {
        const double a = i / 100.0;
        coarse = std::max(coarse, std::abs(t1.map(a) - t2.map(a)));
        fine = std::max(fine, std::abs(t8.map(a) - t16.map(a)));
      }
      // chord and linear-lookup errors both shrink with the square of the
      // spacing, so three doublings should buy far more than a factor of 4
      REQUIRE(coarse <= 1e-3);
      REQUIRE(fine <= 0.25 * coarse + 1e-12);
    }
  }
}

TEST_CASE("argument checks")
{
  const auto wps = waypointsAt({{0, 0, 0}, {1, 0, 0}});
  const CameraPath path = buildPath(wps, PathMode::PiecewiseC1);
  CHECK_THROWS_AS(evalPosition(path, -1e-12), ArgumentError);
  CHECK_THROWS_AS(evalPosition(path, 1.0 + 1e-12), ArgumentError);
  CHECK_THROWS_AS(evalOrientation(path, std::nan("")), ArgumentError);
  CHECK_THROWS_AS(buildArcTable(path, 8), ArgumentError);
  CHECK_THROWS_AS(buildPath(waypointsAt({{0, 0, 0}}), PathMode::SingleBezier), LayoutError);
  CHECK_THROWS_AS(buildArcTable(buildPath(waypointsAt({{1, 1, 1}, {1, 1, 1}}), PathMode::SingleBezier), 16),
      LayoutError);
}
