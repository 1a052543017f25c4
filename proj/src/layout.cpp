// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/layout.h"
#include "stereocam/comfort.h"

#include <cmath>
#include <numbers>
#include <sstream>

namespace stereocam {

double HmdProfile::horizontalSlope() const
{
  return aspect * std::tan(verticalFov / 2.0);
}

HmdProfile HmdProfile::generic()
{
  HmdProfile p;
  p.verticalFov = 1.75;
  p.aspect = 0.96;
  p.nearPlane = 0.1;
  p.farPlane = 1000.0;
  // temple side wider than nasal side, lenses slightly biased downwards
  p.leftEye = {-1.25, 1.05, 1.15, -1.25};
  p.rightEye = {-1.05, 1.25, 1.15, -1.25};
  p.defaultIpd = 0.064;
  return p;
}

std::string_view pathModeName(PathMode mode)
{
  switch (mode) {
  case PathMode::SingleBezier:
    return "single-bezier";
  case PathMode::PiecewiseC1:
    return "piecewise-c1";
  }
  return "single-bezier";
}

std::optional<PathMode> pathModeFromString(std::string_view s)
{
  if (s == "single-bezier")
    return PathMode::SingleBezier;
  if (s == "piecewise-c1")
    return PathMode::PiecewiseC1;
  return std::nullopt;
}

bool operator==(const Waypoint &a, const Waypoint &b)
{
  return a.position == b.position && a.orientation.coeffs() == b.orientation.coeffs()
      && a.interaxial == b.interaxial && a.zeroParallax == b.zeroParallax;
}

namespace {

std::string fmt(double v)
{
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void checkEye(ValidationReport &out, const EyeTangents &eye, const char *name)
{
  const std::string field = std::string("hmd_profile.default_tangents.") + name;
  if (!std::isfinite(eye.left) || !std::isfinite(eye.right)
      || !std::isfinite(eye.top) || !std::isfinite(eye.bottom))
    out.push_back({std::nullopt, field, "tangents must be finite"});
  if (!(eye.left < eye.right))
    out.push_back({std::nullopt, field, "left tangent must be less than right tangent"});
  if (!(eye.bottom < eye.top))
    out.push_back({std::nullopt, field, "bottom tangent must be less than top tangent"});
}

} // namespace

ValidationReport validateProfile(const HmdProfile &p)
{
  ValidationReport out;
  if (!(p.verticalFov > 0.0 && p.verticalFov < std::numbers::pi))
    out.push_back({std::nullopt, "hmd_profile.theta", "vertical FOV must lie in (0, pi), got " + fmt(p.verticalFov)});
  if (!(p.aspect > 0.0) || !std::isfinite(p.aspect))
    out.push_back({std::nullopt, "hmd_profile.q", "aspect ratio must be positive, got " + fmt(p.aspect)});
  if (!(p.nearPlane > 0.0 && p.nearPlane < p.farPlane) || !std::isfinite(p.farPlane))
    out.push_back({std::nullopt, "hmd_profile.n", "near/far planes must satisfy 0 < n < f"});
  if (!(p.defaultIpd >= 0.0) || !std::isfinite(p.defaultIpd))
    out.push_back({std::nullopt, "hmd_profile.default_ipd", "default IPD must be non-negative"});

  const size_t before = out.size();
  checkEye(out, p.leftEye, "left");
  checkEye(out, p.rightEye, "right");
  if (out.size() == before) {
    const double dl = eyeDefaultDelta(p.leftEye, Eye::Left);
    const double dr = eyeDefaultDelta(p.rightEye, Eye::Right);
    if (std::abs(dl - dr) > kEyeAgreementTolerance)
      out.push_back({std::nullopt, "hmd_profile.default_tangents",
          "left and right eye default angle differences disagree (" + fmt(dl)
              + " vs " + fmt(dr) + " rad)"});
  }
  return out;
}

ValidationReport validateLayout(const DepthLayout &layout)
{
  ValidationReport out = validateProfile(layout.hmdProfile);

  const auto &band = layout.comfortBand;
  if (!std::isfinite(band.loDeg) || !std::isfinite(band.hiDeg) || !(band.loDeg < band.hiDeg)
      || !(band.hiDeg >= 0.0) || !(band.loDeg <= 0.0))
    out.push_back({std::nullopt, "comfort_band", "band must satisfy lo_deg <= 0 <= hi_deg and lo_deg < hi_deg"});

  if (!(layout.rbfShape > 0.0) || !std::isfinite(layout.rbfShape))
    out.push_back({std::nullopt, "rbf.r0", "shape parameter must be positive, got " + fmt(layout.rbfShape)});

  const auto &wps = layout.waypoints;
  if (wps.size() < kMinWaypoints)
    out.push_back({std::nullopt, "waypoints",
        "at least " + std::to_string(kMinWaypoints) + " waypoints required, got "
            + std::to_string(wps.size())});

  const double nearPlane = layout.hmdProfile.nearPlane;
  for (size_t i = 0; i < wps.size(); ++i) {
    const Waypoint &w = wps[i];
    if (!w.position.allFinite())
      out.push_back({i, "position", "position must be finite"});
    const double norm = w.orientation.coeffs().norm();
    if (!(std::abs(norm - 1.0) <= kQuaternionNormTolerance))
      out.push_back({i, "orientation", "quaternion norm " + fmt(norm) + " is not 1"});
    if (!(w.interaxial >= 0.0) || !std::isfinite(w.interaxial))
      out.push_back({i, "d_ia", "interaxial separation must be finite and >= 0, got " + fmt(w.interaxial)});
    if (!(w.zeroParallax > 0.0) || !std::isfinite(w.zeroParallax))
      out.push_back({i, "d_zp", "zero-parallax distance must be finite and > 0, got " + fmt(w.zeroParallax)});
    else if (!(w.zeroParallax > nearPlane))
      out.push_back({i, "d_zp", "zero-parallax distance " + fmt(w.zeroParallax)
              + " must exceed the near plane " + fmt(nearPlane)});
  }

  for (size_t j = 1; j < wps.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      const double d = (groundPoint(wps[i].position) - groundPoint(wps[j].position)).norm();
      if (d <= kCenterCoincidence) {
        out.push_back({j, "position", "ground-plane position coincides with waypoint "
                + std::to_string(i) + " (" + fmt(d) + " m apart)"});
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> authoringAdvisories(const DepthLayout &layout)
{
  std::vector<std::string> out;
  if (layout.waypoints.size() < kAdvisedWaypoints)
    out.push_back("fewer than " + std::to_string(kAdvisedWaypoints)
        + " waypoints; the parameter surfaces will be coarse");
  return out;
}

} // namespace stereocam
