// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "stereocam/layout.h"

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>
#include <span>
#include <vector>

namespace stereocam {

struct Pose
{
  Eigen::Vector3d position{Eigen::Vector3d::Zero()};
  Eigen::Quaterniond orientation{Eigen::Quaterniond::Identity()};
};

// Monotone lookup from normalized cumulative chord length to curve parameter.
class ArcTable
{
 public:
  ArcTable(std::vector<double> arc, std::vector<double> param);

  // Curve parameter at arc-length fraction a in [0, 1] (piecewise linear).
  double map(double a) const;

  const std::vector<double> &arc() const
  {
    return arc_;
  }
  const std::vector<double> &param() const
  {
    return param_;
  }

 private:
  std::vector<double> arc_;
  std::vector<double> param_;
};

// Position curve plus orientation schedule over u in [0, 1].
//
// SingleBezier: one Bezier curve of degree m-1 with the waypoint positions as
// control points; interior waypoints are approached but not passed through.
// PiecewiseC1: one cubic per waypoint pair with Catmull-Rom tangents (one-sided
// at the ends), stored as Bezier control points, 3(m-1)+1 in total. Segment k
// spans u in [k/(m-1), (k+1)/(m-1)] and interpolates its end waypoints.
//
// Orientation always uses the per-segment schedule: slerp between waypoint k
// and k+1 on the same uniform segment mapping.
class CameraPath
{
 public:
  CameraPath(PathMode mode, std::vector<Eigen::Vector3d> controlPoints,
      std::vector<Eigen::Quaterniond> orientations);

  Eigen::Vector3d position(double u) const;
  Eigen::Quaterniond orientation(double u) const;
  Pose pose(double u) const
  {
    return {position(u), orientation(u)};
  }

  PathMode mode() const
  {
    return mode_;
  }
  const std::vector<Eigen::Vector3d> &controlPoints() const
  {
    return controlPoints_;
  }
  const std::vector<Eigen::Quaterniond> &orientations() const
  {
    return orientations_;
  }
  size_t waypointCount() const
  {
    return orientations_.size();
  }

  const std::optional<ArcTable> &arcTable() const
  {
    return arcTable_;
  }
  CameraPath withArcTable(ArcTable table) const;

 private:
  PathMode mode_;
  std::vector<Eigen::Vector3d> controlPoints_;
  std::vector<Eigen::Quaterniond> orientations_;
  std::optional<ArcTable> arcTable_;
};

CameraPath buildPath(const DepthLayout &layout, PathMode mode);
CameraPath buildPath(std::span<const Waypoint> waypoints, PathMode mode);

// Throw ArgumentError when u is outside [0, 1].
Eigen::Vector3d evalPosition(const CameraPath &path, double u);
Eigen::Quaterniond evalOrientation(const CameraPath &path, double u);

// Dense chord-length table with samples + 1 points; samples >= 16.
ArcTable buildArcTable(const CameraPath &path, size_t samples);

// de Casteljau evaluation of an arbitrary-degree Bezier curve.
Eigen::Vector3d bezierPoint(std::span<const Eigen::Vector3d> controlPoints, double t);

// Shortest-arc spherical linear interpolation of unit quaternions. Falls back
// to normalized lerp when the endpoints are within 1 - 1e-10 of each other.
Eigen::Quaterniond slerp(const Eigen::Quaterniond &a, const Eigen::Quaterniond &b, double s);

// Geodesic angle between two rotations, ignoring quaternion sign.
double rotationAngle(const Eigen::Quaterniond &a, const Eigen::Quaterniond &b);

} // namespace stereocam
