// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/comfort.h"
#include "stereocam/errors.h"

#include <cmath>
#include <numbers>
#include <utility>

namespace stereocam {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Bracket [lo, hi] around the s with angleDifference(k, s) == target, for
// 0 < target < atan(2k). Iterates until the bracket is down to adjacent
// doubles, far below kBisectionTolerance.
std::pair<double, double> bisect(double slope, double target)
{
  double lo = 0.0;
  double hi = slope;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    if (angleDifference(slope, mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

} // namespace

double angleDifference(double slope, double s)
{
  // atan(k + s) - atan(k - s) without the cancellation
  return std::atan2(2.0 * s, 1.0 + slope * slope - s * s);
}

AngleState angleDelta(const HmdProfile &profile, double interaxial, double zeroParallax)
{
  if (!(zeroParallax > 0.0) || !std::isfinite(zeroParallax))
    throw ArgumentError("zero-parallax distance must be positive and finite");
  if (!(interaxial >= 0.0) || !std::isfinite(interaxial))
    throw ArgumentError("interaxial separation must be finite and non-negative");
  const double k = profile.horizontalSlope();
  const double s = interaxial / (2.0 * zeroParallax);
  if (!(s < k))
    throw ArgumentError("interaxial separation must be narrower than the frustum width at d_zp");

  AngleState st;
  st.alpha = std::atan(k + s);
  st.beta = std::atan(k - s);
  st.delta = angleDifference(k, s);
  st.defaultDelta = defaultDelta(profile);
  return st;
}

double eyeDefaultDelta(const EyeTangents &t, Eye eye)
{
  const double outer = eye == Eye::Left ? t.left : t.right;
  const double inner = eye == Eye::Left ? t.right : t.left;
  return std::atan(std::abs(outer)) - std::atan(std::abs(inner));
}

double defaultDelta(const HmdProfile &profile)
{
  const double dl = eyeDefaultDelta(profile.leftEye, Eye::Left);
  const double dr = eyeDefaultDelta(profile.rightEye, Eye::Right);
  if (std::abs(dl - dr) > kEyeAgreementTolerance)
    throw ArgumentError("left and right eye default frusta are not mirror images");
  return 0.5 * (dl + dr);
}

ComfortLimiter::ComfortLimiter(const HmdProfile &profile, const ComfortBand &band)
    : slope_(profile.horizontalSlope()), defaultDelta_(stereocam::defaultDelta(profile))
{
  if (!(band.loDeg < band.hiDeg))
    throw ArgumentError("comfort band requires lo_deg < hi_deg");
  lowerTarget_ = defaultDelta_ + band.loDeg * kDegToRad;
  upperTarget_ = defaultDelta_ + band.hiDeg * kDegToRad;

  // achievable angle differences for d_ia > 0 form the open interval
  // (0, atan(2k)); the upper end is the degenerate B = 0 frustum
  const double supremum = std::atan(2.0 * slope_);
  zeroSeparationAllowed_ = lowerTarget_ <= 0.0 && 0.0 <= upperTarget_;
  positiveSeparationAllowed_ = upperTarget_ > 0.0 && lowerTarget_ < supremum;

  if (positiveSeparationAllowed_) {
    if (upperTarget_ < supremum)
      nearS_ = bisect(slope_, upperTarget_).first;
    if (lowerTarget_ > 0.0)
      farS_ = bisect(slope_, lowerTarget_).second;
  }
}

double ComfortLimiter::nearBound(double interaxial) const
{
  return std::isinf(nearS_) ? 0.0 : interaxial / (2.0 * nearS_);
}

double ComfortLimiter::farBound(double interaxial) const
{
  return farS_ == 0.0 ? std::numeric_limits<double>::infinity()
                      : interaxial / (2.0 * farS_);
}

ClampResult ComfortLimiter::clamp(double interaxial, double raw) const
{
  if (!(interaxial >= 0.0) || !std::isfinite(interaxial))
    throw ArgumentError("interaxial separation must be finite and non-negative");
  if (!(raw > 0.0) || !std::isfinite(raw))
    throw ArgumentError("zero-parallax distance must be positive and finite");

  if (interaxial == 0.0) {
    if (!zeroSeparationAllowed_)
      throw UnsatisfiableBandError("comfort band excludes the zero angle difference of d_ia = 0");
    return {raw, false, ActiveBound::None};
  }
  if (!positiveSeparationAllowed_)
    throw UnsatisfiableBandError("comfort band excludes every achievable angle difference");

  const double lo = nearBound(interaxial);
  const double hi = farBound(interaxial);
  if (raw < lo)
    return {lo, true, ActiveBound::Near};
  if (raw > hi)
    return {hi, true, ActiveBound::Far};
  if (std::isinf(nearS_) && !(interaxial / (2.0 * raw) < slope_))
    throw ArgumentError("interaxial separation must be narrower than the frustum width at d_zp");
  return {raw, false, ActiveBound::None};
}

ClampResult clampZeroParallax(const HmdProfile &profile, const ComfortBand &band,
    double interaxial, double zeroParallaxRaw)
{
  return ComfortLimiter(profile, band).clamp(interaxial, zeroParallaxRaw);
}

} // namespace stereocam
