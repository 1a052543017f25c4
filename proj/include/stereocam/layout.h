// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stereocam {

// Signed plane slopes of one eye's default frustum (plane offset / near).
struct EyeTangents
{
  double left{-1.0};
  double right{1.0};
  double top{1.0};
  double bottom{-1.0};

  bool operator==(const EyeTangents &) const = default;
};

// Static description of a head-mounted display. Lengths in meters, angles in
// radians.
struct HmdProfile
{
  double verticalFov{0.0}; // theta
  double aspect{1.0}; // q
  double nearPlane{0.1};
  double farPlane{100.0};
  EyeTangents leftEye;
  EyeTangents rightEye;
  double defaultIpd{0.064};

  bool operator==(const HmdProfile &) const = default;

  // Half-width slope of the symmetric frustum, q * tan(theta / 2).
  double horizontalSlope() const;

  // Built-in preset. The numbers are illustrative, roughly the shape of a
  // current consumer headset, and not taken from any vendor runtime.
  static HmdProfile generic();
};

// Allowed offset of (alpha - beta) from the HMD default, in degrees.
struct ComfortBand
{
  double loDeg{-10.0};
  double hiDeg{1.0};

  bool operator==(const ComfortBand &) const = default;

  static ComfortBand literal()
  {
    return {-10.0, 1.0};
  }
  static ComfortBand symmetric()
  {
    return {-1.0, 1.0};
  }
};

enum class Eye
{
  Left,
  Right
};

enum class PathMode
{
  SingleBezier,
  PiecewiseC1
};

std::string_view pathModeName(PathMode mode);
std::optional<PathMode> pathModeFromString(std::string_view s);

struct Waypoint
{
  Eigen::Vector3d position{Eigen::Vector3d::Zero()};
  Eigen::Quaterniond orientation{Eigen::Quaterniond::Identity()};
  double interaxial{0.064}; // d_ia, meters
  double zeroParallax{2.0}; // d_zp, meters
};

bool operator==(const Waypoint &a, const Waypoint &b);

struct DepthLayout
{
  std::string name;
  std::vector<Waypoint> waypoints;
  HmdProfile hmdProfile{HmdProfile::generic()};
  ComfortBand comfortBand;
  double rbfShape{2.0}; // r0 of the inverse multiquadric
  PathMode pathMode{PathMode::SingleBezier};

  bool operator==(const DepthLayout &) const = default;
};

// RBF centers live on the horizontal ground plane; y is up.
inline Eigen::Vector2d groundPoint(const Eigen::Vector3d &p)
{
  return {p.x(), p.z()};
}

constexpr double kQuaternionNormTolerance = 1e-9;
constexpr double kCenterCoincidence = 1e-6;
constexpr size_t kMinWaypoints = 2;
constexpr size_t kAdvisedWaypoints = 5;

struct Violation
{
  std::optional<size_t> waypoint; // empty for layout/profile-level rules
  std::string field;
  std::string message;

  bool operator==(const Violation &) const = default;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validateLayout(const DepthLayout &layout);

// Non-blocking authoring hints (currently: fewer than five waypoints).
std::vector<std::string> authoringAdvisories(const DepthLayout &layout);

// Profile-only subset of validateLayout.
ValidationReport validateProfile(const HmdProfile &profile);

} // namespace stereocam
