// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "stereocam/layout.h"

#include <limits>

namespace stereocam {

constexpr double kEyeAgreementTolerance = 1e-9; // rad
constexpr double kBisectionTolerance = 1e-9; // rad, in angle difference

// Half-angles of the expanded (alpha) and condensed (beta) sides of a
// swapped frustum about the view axis: tan(alpha) = C / d_zp,
// tan(beta) = B / d_zp.
struct AngleState
{
  double alpha{0.0};
  double beta{0.0};
  double delta{0.0}; // alpha - beta
  double defaultDelta{0.0};
};

// alpha - beta as a function of the half-width slope k = q tan(theta/2) and
// s = d_ia / (2 d_zp). Strictly increasing in s on [0, k).
double angleDifference(double slope, double s);

AngleState angleDelta(const HmdProfile &profile, double interaxial, double zeroParallax);

// atan(|outer|) - atan(|inner|) of one eye's default horizontal tangents;
// the temple side is "outer".
double eyeDefaultDelta(const EyeTangents &tangents, Eye eye);

// Baseline the comfort band is measured from. Throws ArgumentError when
// the two eyes disagree by more than kEyeAgreementTolerance.
double defaultDelta(const HmdProfile &profile);

enum class ActiveBound
{
  None,
  Near,
  Far
};

struct ClampResult
{
  double zeroParallax{0.0};
  bool wasClamped{false};
  ActiveBound bound{ActiveBound::None};
};

// Dynamic zero-parallax clamp. Because the angle difference depends on
// (d_ia, d_zp) only through s = d_ia / (2 d_zp), the band edges are solved
// once in s and scaled by the immediate d_ia on every call.
class ComfortLimiter
{
 public:
  ComfortLimiter(const HmdProfile &profile, const ComfortBand &band);

  ClampResult clamp(double interaxial, double zeroParallaxRaw) const;

  // Smallest admissible d_zp for this d_ia (0 when there is no near clamp).
  double nearBound(double interaxial) const;
  // Largest admissible d_zp for this d_ia (+inf when there is no far clamp).
  double farBound(double interaxial) const;

  double defaultDelta() const
  {
    return defaultDelta_;
  }
  double slope() const
  {
    return slope_;
  }
  // Band edges as absolute angle differences, radians.
  double lowerTarget() const
  {
    return lowerTarget_;
  }
  double upperTarget() const
  {
    return upperTarget_;
  }

 private:
  double slope_;
  double defaultDelta_;
  double lowerTarget_;
  double upperTarget_;
  bool zeroSeparationAllowed_;
  bool positiveSeparationAllowed_;
  // s at the band edges; 0 / +inf mean "edge not reachable".
  double nearS_{std::numeric_limits<double>::infinity()};
  double farS_{0.0};
};

ClampResult clampZeroParallax(const HmdProfile &profile, const ComfortBand &band,
    double interaxial, double zeroParallaxRaw);

} // namespace stereocam
