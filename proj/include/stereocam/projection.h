// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "stereocam/layout.h"

#include <Eigen/Core>

namespace stereocam {

// Plane positions of a view frustum at the near plane, meters.
struct FrustumExtents
{
  double left{0.0};
  double right{0.0};
  double top{0.0};
  double bottom{0.0};
  double nearPlane{0.0};
  double farPlane{0.0};

  bool operator==(const FrustumExtents &) const = default;
};

struct SideWidths
{
  double condensed{0.0}; // B
  double expanded{0.0}; // C
};

struct StereoProjectionPair
{
  Eigen::Matrix4d left;
  Eigen::Matrix4d right;
  FrustumExtents leftExtents;
  FrustumExtents rightExtents;
  double interaxial{0.0};
  double zeroParallax{0.0};
};

// A = d_zp * q * tan(theta / 2), half of the frustum width at d_zp.
double halfWidthAtZeroParallax(const HmdProfile &profile, double zeroParallax);

// B = A - d_ia / 2, C = A + d_ia / 2. Requires 0 <= d_ia < 2A.
SideWidths sideWidths(double halfWidth, double interaxial);

// Horizontal extents of the two eyes with the expanded side swapped to the
// temple (left eye: l = -C n / d_zp, r = B n / d_zp; right eye mirrored).
// Top and bottom keep the profile's default per-eye tangents.
struct ExtentsPair
{
  FrustumExtents left;
  FrustumExtents right;
};
ExtentsPair swappedExtents(const HmdProfile &profile, double interaxial, double zeroParallax);

// Off-axis OpenGL-style projection, right-handed eye space looking down -z.
Eigen::Matrix4d assembleProjection(const FrustumExtents &extents);

// Does not clamp d_zp; callers run the comfort limiter first.
StereoProjectionPair buildProjectionPair(const HmdProfile &profile, double interaxial,
    double zeroParallax);

} // namespace stereocam
