// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/pipeline.h"
#include "stereocam/errors.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stereocam {

std::string_view spacingName(Spacing spacing)
{
  return spacing == Spacing::UniformArcLength ? "uniform-arc-length" : "uniform-parameter";
}

std::optional<Spacing> spacingFromString(std::string_view s)
{
  if (s == "uniform-parameter")
    return Spacing::UniformParameter;
  if (s == "uniform-arc-length")
    return Spacing::UniformArcLength;
  return std::nullopt;
}

void checkProbes(const DepthProbeSeries &probes)
{
  double prev = -1.0;
  for (size_t i = 0; i < probes.samples.size(); ++i) {
    const DepthProbe &p = probes.samples[i];
    const std::string where = "probe " + std::to_string(i) + ": ";
    if (!(p.t >= 0.0 && p.t <= 1.0))
      throw ArgumentError(where + "t must lie in [0, 1]");
    if (!(p.t > prev))
      throw ArgumentError(where + "t must be strictly increasing");
    if (!(p.minDepth > 0.0) || !(p.minDepth <= p.maxDepth) || !std::isfinite(p.maxDepth))
      throw ArgumentError(where + "depths must satisfy 0 < d_min <= d_max");
    prev = p.t;
  }
}

namespace {

void requireValid(const DepthLayout &layout)
{
  const ValidationReport report = validateLayout(layout);
  if (report.empty())
    return;
  std::ostringstream os;
  os << "layout is not valid:";
  for (const Violation &v : report) {
    os << "\n  ";
    if (v.waypoint)
      os << "waypoint " << *v.waypoint << " ";
    os << v.field << ": " << v.message;
  }
  throw LayoutError(os.str());
}

CameraPath pathWithArcTable(const DepthLayout &layout, PathMode mode)
{
  CameraPath path = buildPath(layout, mode);
  ArcTable table = buildArcTable(path, kSessionArcSamples);
  return path.withArcTable(std::move(table));
}

} // namespace

Session::Session(CameraPath path, ParameterField interaxial, ParameterField zeroParallax,
    const HmdProfile &profile, const ComfortBand &band)
    : path_(std::move(path)),
      interaxial_(std::move(interaxial)),
      zeroParallax_(std::move(zeroParallax)),
      profile_(profile),
      band_(band),
      limiter_(profile, band)
{}

Session Session::prepare(const DepthLayout &layout, PathMode mode)
{
  requireValid(layout);

  std::vector<Eigen::Vector2d> centers;
  std::vector<double> ia, zp;
  for (const Waypoint &w : layout.waypoints) {
    centers.push_back(groundPoint(w.position));
    ia.push_back(w.interaxial);
    zp.push_back(w.zeroParallax);
  }
  const RbfBasis basis{BasisKind::InverseMultiquadric, layout.rbfShape};
  return Session(pathWithArcTable(layout, mode),
      ParameterField(solveWeights(centers, ia, basis)),
      ParameterField(solveWeights(centers, zp, basis)),
      layout.hmdProfile,
      layout.comfortBand);
}

Session Session::prepareFixed(const DepthLayout &layout, PathMode mode, double interaxial,
    double zeroParallax)
{
  requireValid(layout);
  if (!(interaxial >= 0.0) || !std::isfinite(interaxial))
    throw ArgumentError("fixed interaxial separation must be finite and non-negative");
  if (!(zeroParallax > layout.hmdProfile.nearPlane) || !std::isfinite(zeroParallax))
    throw ArgumentError("fixed zero-parallax distance must lie beyond the near plane");
  return Session(pathWithArcTable(layout, mode),
      ParameterField(interaxial),
      ParameterField(zeroParallax),
      layout.hmdProfile,
      layout.comfortBand);
}

FrameRecord Session::evaluate(double t, double u) const
{
  FrameRecord rec;
  rec.t = t;
  rec.u = u;
  rec.pose = path_.pose(u);

  const Eigen::Vector2d x = groundPoint(rec.pose.position);
  // an RBF interpolant may undershoot between centers; never swap the eyes
  rec.interaxial = std::max(0.0, interaxial_(x));
  rec.zeroParallaxRaw = zeroParallax_(x);
  if (!(rec.zeroParallaxRaw > profile_.nearPlane)) {
    std::ostringstream os;
    os.precision(17);
    os << "interpolated zero-parallax distance " << rec.zeroParallaxRaw
       << " m at u = " << u << " is not beyond the near plane";
    throw DegenerateInterpolantError(os.str());
  }

  const ClampResult c = limiter_.clamp(rec.interaxial, rec.zeroParallaxRaw);
  rec.zeroParallax = c.zeroParallax;
  rec.wasClamped = c.wasClamped;
  rec.bound = c.bound;
  rec.eyeOffset = rec.interaxial / 2.0;
  rec.projections = buildProjectionPair(profile_, rec.interaxial, rec.zeroParallax);
  return rec;
}

FrameRecord Session::frame(double t) const
{
  if (!(t >= 0.0 && t <= 1.0))
    throw ArgumentError("frame parameter must lie in [0, 1]");
  return evaluate(t, t);
}

std::vector<FrameRecord> Session::frames(size_t count, Spacing spacing) const
{
  if (count < 2)
    throw ArgumentError("frame count must be at least 2");
  std::vector<FrameRecord> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const double t = i + 1 == count ? 1.0 : double(i) / double(count - 1);
    const double u = spacing == Spacing::UniformArcLength ? path_.arcTable()->map(t) : t;
    out.push_back(evaluate(t, u));
  }
  return out;
}

DepthChartSeries Session::depthChart(const DepthProbeSeries &probes) const
{
  checkProbes(probes);
  DepthChartSeries out;
  out.samples.reserve(probes.samples.size());
  for (const DepthProbe &p : probes.samples) {
    const FrameRecord f = frame(p.t);
    out.samples.push_back({p.t, p.minDepth - f.zeroParallax, p.maxDepth - f.zeroParallax,
        f.zeroParallax});
  }
  return out;
}

} // namespace stereocam
