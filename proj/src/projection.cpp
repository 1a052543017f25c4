// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/projection.h"
#include "stereocam/errors.h"

#include <cmath>

namespace stereocam {

double halfWidthAtZeroParallax(const HmdProfile &profile, double zeroParallax)
{
  if (!(zeroParallax > 0.0) || !std::isfinite(zeroParallax))
    throw ArgumentError("zero-parallax distance must be positive and finite");
  return zeroParallax * profile.aspect * std::tan(profile.verticalFov / 2.0);
}

SideWidths sideWidths(double halfWidth, double interaxial)
{
  if (!(halfWidth > 0.0) || !std::isfinite(halfWidth))
    throw ArgumentError("half width must be positive and finite");
  if (!(interaxial >= 0.0) || !std::isfinite(interaxial))
    throw ArgumentError("interaxial separation must be finite and non-negative");
  if (!(interaxial < 2.0 * halfWidth))
    throw ArgumentError("interaxial separation must be narrower than the frustum width at d_zp");
  const double half = interaxial / 2.0;
  return {halfWidth - half, halfWidth + half};
}

ExtentsPair swappedExtents(const HmdProfile &profile, double interaxial, double zeroParallax)
{
  const SideWidths w = sideWidths(halfWidthAtZeroParallax(profile, zeroParallax), interaxial);
  const double n = profile.nearPlane;
  const double f = profile.farPlane;
  // each magnitude computed once so the eyes mirror each other exactly
  const double condensed = w.condensed * n / zeroParallax;
  const double expanded = w.expanded * n / zeroParallax;

  ExtentsPair out;
  out.left = {-expanded, condensed, profile.leftEye.top * n, profile.leftEye.bottom * n, n, f};
  out.right = {-condensed, expanded, profile.rightEye.top * n, profile.rightEye.bottom * n, n, f};
  return out;
}

Eigen::Matrix4d assembleProjection(const FrustumExtents &e)
{
  const double l = e.left, r = e.right, t = e.top, b = e.bottom;
  const double n = e.nearPlane, f = e.farPlane;
  if (!(l < r) || !(b < t) || !(n > 0.0 && n < f) || !std::isfinite(f))
    throw ArgumentError("frustum extents require l < r, b < t and 0 < n < f");

  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 2.0 * n / (r - l);
  m(0, 2) = (r + l) / (r - l);
  m(1, 1) = 2.0 * n / (t - b);
  m(1, 2) = (t + b) / (t - b);
  m(2, 2) = -(f + n) / (f - n);
  m(2, 3) = -2.0 * f * n / (f - n);
  m(3, 2) = -1.0;
  return m;
}

StereoProjectionPair buildProjectionPair(const HmdProfile &profile, double interaxial,
    double zeroParallax)
{
  const ExtentsPair ext = swappedExtents(profile, interaxial, zeroParallax);
  StereoProjectionPair p;
  p.left = assembleProjection(ext.left);
  p.right = assembleProjection(ext.right);
  p.leftExtents = ext.left;
  p.rightExtents = ext.right;
  p.interaxial = interaxial;
  p.zeroParallax = zeroParallax;
  return p;
}

} // namespace stereocam
