// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/path.h"
#include "stereocam/errors.h"

#include <algorithm>
#include <array>
#include <cmath>

namespace stereocam {

namespace {

void checkParameter(double u)
{
  if (!(u >= 0.0 && u <= 1.0))
    throw ArgumentError("path parameter must lie in [0, 1]");
}

// Segment index and local fraction for the uniform per-segment schedule.
std::pair<size_t, double> segmentOf(double u, size_t segments)
{
  const double x = u * double(segments);
  const size_t k = std::min(size_t(x), segments - 1);
  return {k, x - double(k)};
}

template <typename Buffer>
Eigen::Vector3d deCasteljau(Buffer &pts, size_t count, double t)
{
  for (size_t level = count - 1; level > 0; --level)
    for (size_t i = 0; i < level; ++i)
      pts[i] = (1.0 - t) * pts[i] + t * pts[i + 1];
  return pts[0];
}

} // namespace

Eigen::Vector3d bezierPoint(std::span<const Eigen::Vector3d> cps, double t)
{
  if (cps.empty())
    throw ArgumentError("Bezier curve needs at least one control point");
  constexpr size_t kInline = 64;
  if (cps.size() <= kInline) {
    std::array<Eigen::Vector3d, kInline> buf;
    std::copy(cps.begin(), cps.end(), buf.begin());
    return deCasteljau(buf, cps.size(), t);
  }
  std::vector<Eigen::Vector3d> buf(cps.begin(), cps.end());
  return deCasteljau(buf, cps.size(), t);
}

double rotationAngle(const Eigen::Quaterniond &a, const Eigen::Quaterniond &b)
{
  Eigen::Vector4d p = a.coeffs(), q = b.coeffs();
  if (p.dot(q) < 0.0)
    q = -q;
  // 2 atan2(|q - p|, |q + p|) is accurate at both small and large angles
  return 4.0 * std::atan2((q - p).norm(), (q + p).norm());
}

Eigen::Quaterniond slerp(const Eigen::Quaterniond &a, const Eigen::Quaterniond &b, double s)
{
  const Eigen::Vector4d p = a.coeffs();
  Eigen::Vector4d q = b.coeffs();
  double d = p.dot(q);
  if (d < 0.0) {
    q = -q;
    d = -d;
  }
  Eigen::Vector4d r;
  if (d > 1.0 - 1e-10) {
    r = (1.0 - s) * p + s * q;
  } else {
    const double theta = 2.0 * std::atan2((q - p).norm(), (q + p).norm());
    const double sinTheta = std::sin(theta);
    r = (std::sin((1.0 - s) * theta) / sinTheta) * p + (std::sin(s * theta) / sinTheta) * q;
  }
  r.normalize();
  return Eigen::Quaterniond(r[3], r[0], r[1], r[2]);
}

ArcTable::ArcTable(std::vector<double> arc, std::vector<double> param)
    : arc_(std::move(arc)), param_(std::move(param))
{
  if (arc_.size() != param_.size() || arc_.size() < 2)
    throw ArgumentError("arc table needs matching columns with at least two rows");
  for (size_t i = 1; i < arc_.size(); ++i)
    if (!(arc_[i] > arc_[i - 1]) || !(param_[i] > param_[i - 1]))
      throw ArgumentError("arc table must be strictly increasing");
}

double ArcTable::map(double a) const
{
  checkParameter(a);
  const auto it = std::upper_bound(arc_.begin(), arc_.end(), a);
  if (it == arc_.end())
    return param_.back();
  const size_t hi = size_t(it - arc_.begin());
  const size_t lo = hi - 1;
  const double f = (a - arc_[lo]) / (arc_[hi] - arc_[lo]);
  return param_[lo] + f * (param_[hi] - param_[lo]);
}

CameraPath::CameraPath(PathMode mode, std::vector<Eigen::Vector3d> controlPoints,
    std::vector<Eigen::Quaterniond> orientations)
    : mode_(mode), controlPoints_(std::move(controlPoints)), orientations_(std::move(orientations))
{
  const size_t m = orientations_.size();
  if (m < kMinWaypoints)
    throw LayoutError("a camera path needs at least two waypoints");
  const size_t expected = mode_ == PathMode::SingleBezier ? m : 3 * (m - 1) + 1;
  if (controlPoints_.size() != expected)
    throw ArgumentError("control point count does not match the path mode");
}

Eigen::Vector3d CameraPath::position(double u) const
{
  checkParameter(u);
  if (mode_ == PathMode::SingleBezier)
    return bezierPoint(controlPoints_, u);
  const auto [k, s] = segmentOf(u, waypointCount() - 1);
  return bezierPoint(std::span(controlPoints_).subspan(3 * k, 4), s);
}

Eigen::Quaterniond CameraPath::orientation(double u) const
{
  checkParameter(u);
  const auto [k, s] = segmentOf(u, waypointCount() - 1);
  return slerp(orientations_[k], orientations_[k + 1], s);
}

CameraPath CameraPath::withArcTable(ArcTable table) const
{
  CameraPath out = *this;
  out.arcTable_ = std::move(table);
  return out;
}

CameraPath buildPath(std::span<const Waypoint> waypoints, PathMode mode)
{
  const size_t m = waypoints.size();
  if (m < kMinWaypoints)
    throw LayoutError("a camera path needs at least two waypoints, got " + std::to_string(m));

  std::vector<Eigen::Quaterniond> orientations;
  orientations.reserve(m);
  for (const auto &w : waypoints)
    orientations.push_back(w.orientation.normalized());

  std::vector<Eigen::Vector3d> cps;
  if (mode == PathMode::SingleBezier) {
    for (const auto &w : waypoints)
      cps.push_back(w.position);
    return CameraPath(mode, std::move(cps), std::move(orientations));
  }

  const auto p = [&](size_t i) -> const Eigen::Vector3d & { return waypoints[i].position; };
  std::vector<Eigen::Vector3d> tangents(m);
  tangents[0] = p(1) - p(0);
  tangents[m - 1] = p(m - 1) - p(m - 2);
  for (size_t i = 1; i + 1 < m; ++i)
    tangents[i] = 0.5 * (p(i + 1) - p(i - 1));

  cps.reserve(3 * (m - 1) + 1);
  cps.push_back(p(0));
  for (size_t k = 0; k + 1 < m; ++k) {
    cps.push_back(p(k) + tangents[k] / 3.0);
    cps.push_back(p(k + 1) - tangents[k + 1] / 3.0);
    cps.push_back(p(k + 1));
  }
  return CameraPath(mode, std::move(cps), std::move(orientations));
}

CameraPath buildPath(const DepthLayout &layout, PathMode mode)
{
  return buildPath(std::span(layout.waypoints), mode);
}

Eigen::Vector3d evalPosition(const CameraPath &path, double u)
{
  return path.position(u);
}

Eigen::Quaterniond evalOrientation(const CameraPath &path, double u)
{
  return path.orientation(u);
}

ArcTable buildArcTable(const CameraPath &path, size_t samples)
{
  if (samples < 16)
    throw ArgumentError("arc table needs at least 16 samples");

  std::vector<double> arc{0.0};
  std::vector<double> param{0.0};
  double total = 0.0;
  Eigen::Vector3d prev = path.position(0.0);
  for (size_t i = 1; i <= samples; ++i) {
    const double u = i == samples ? 1.0 : double(i) / double(samples);
    const Eigen::Vector3d cur = path.position(u);
    const double chord = (cur - prev).norm();
    prev = cur;
    if (chord == 0.0)
      continue; // stationary sample; dropping it keeps the table strictly increasing
    total += chord;
    arc.push_back(total);
    param.push_back(u);
  }
  if (!(total > 0.0))
    throw LayoutError("camera path has zero length");
  if (param.back() != 1.0) {
    // the tail was stationary; the end of the curve is still at arc 1
    arc.back() = total;
    param.back() = 1.0;
  }
  for (double &a : arc)
    a /= total;
  arc.back() = 1.0;
  return ArcTable(std::move(arc), std::move(param));
}

} // namespace stereocam
