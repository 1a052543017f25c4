// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/comfort.h"
#include "stereocam/errors.h"
#include "test_support.h"

#include <doctest.h>

#include <algorithm>

using namespace stereocam;
using namespace stereocam::testing;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// 50-digit oracles, rounded to double.
constexpr double kDeltaAt2 = 0.016000682614233074; // atan(1.016) - atan(0.984)
constexpr double kDefaultDelta = 0.047583103276983396; // atan(1.1) - atan(1)
constexpr double kNearBound = 1.8335580106905363; // 0.064 / (2 s), atan(1+s) - atan(1-s) = 1 deg

HmdProfile randomProfile(Rng &rng)
{
  HmdProfile p = unitProfile();
  p.verticalFov = uniform(rng, 0.5, 2.6);
  p.aspect = uniform(rng, 0.6, 1.8);
  // mostly wider on the temple side, as headset lenses are; sometimes inverted
  const double inner = uniform(rng, 0.8, 1.4);
  const double outer = rng() % 10 == 0 ? uniform(rng, 0.8, 1.4) : inner + uniform(rng, 0.0, 0.4);
  p.leftEye = {-outer, inner, 1.2, -1.2};
  p.rightEye = {-inner, outer, 1.2, -1.2};
  return p;
}

ComfortBand randomBand(Rng &rng)
{
  return rng() % 2 ? ComfortBand{uniform(rng, -12.0, 0.0), uniform(rng, 0.0, 5.0)}
                   : ComfortBand{-uniform(rng, 0.0, 2.0), uniform(rng, 0.01, 2.0)};
}

double logUniform(Rng &rng, double lo, double hi)
{
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

} // namespace

TEST_CASE("angle difference")
{
  const HmdProfile p = unitProfile();
  CHECK(angleDelta(p, 0.0, 2.0).delta == 0.0);
  const AngleState st = angleDelta(p, 0.064, 2.0);
  CHECK(st.delta == doctest::Approx(kDeltaAt2).epsilon(1e-13));
  CHECK(st.alpha - st.beta == doctest::Approx(st.delta).epsilon(1e-13));
  CHECK(st.alpha >= st.beta);
  CHECK(st.beta >= 0.0);
  CHECK(st.defaultDelta == 0.0);

  double prev = st.delta;
  for (double d = 4.0; d < 1e7; d *= 2.0) {
    const double delta = angleDelta(p, 0.064, d).delta;
    REQUIRE(delta < prev);
    REQUIRE(delta > 0.0);
    prev = delta;
  }
  CHECK(prev < 1e-8);

  CHECK_THROWS_AS(angleDelta(p, 5.0, 2.0), ArgumentError);
  CHECK_THROWS_AS(angleDelta(p, 0.064, 0.0), ArgumentError);
  CHECK_THROWS_AS(angleDelta(p, -0.01, 2.0), ArgumentError);
}

TEST_CASE("delta decreases strictly with distance")
{
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const HmdProfile p = randomProfile(rng);
    const double dia = uniform(rng, 1e-3, 0.2);
    std::vector<double> d(40);
    for (double &v : d)
      v = logUniform(rng, dia / p.horizontalSlope(), 1e4);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    for (size_t i = 1; i < d.size(); ++i)
      REQUIRE(angleDelta(p, dia, d[i]).delta < angleDelta(p, dia, d[i - 1]).delta);
  }
}

TEST_CASE("default delta")
{
  CHECK(defaultDelta(unitProfile()) == 0.0);

  HmdProfile p = unitProfile();
  p.leftEye = {-1.1, 1.0, 1.0, -1.0};
  p.rightEye = {-1.0, 1.1, 1.0, -1.0};
  CHECK(eyeDefaultDelta(p.leftEye, Eye::Left) == doctest::Approx(kDefaultDelta).epsilon(1e-15));
  CHECK(eyeDefaultDelta(p.leftEye, Eye::Left) == eyeDefaultDelta(p.rightEye, Eye::Right));
  CHECK(defaultDelta(p) == doctest::Approx(kDefaultDelta).epsilon(1e-15));

  p.rightEye = {-1.0, 1.3, 1.0, -1.0};
  CHECK_THROWS_AS(defaultDelta(p), ArgumentError);
}

TEST_CASE("clamp examples")
{
  const HmdProfile p = unitProfile();
  const ComfortBand band = ComfortBand::literal();

  const ClampResult keep = clampZeroParallax(p, band, 0.064, 2.0);
  CHECK(keep.zeroParallax == 2.0);
  CHECK_FALSE(keep.wasClamped);
  CHECK((keep.bound == ActiveBound::None));

  const ClampResult near = clampZeroParallax(p, band, 0.064, 1.0);
  CHECK(near.wasClamped);
  CHECK((near.bound == ActiveBound::Near));
  CHECK(near.zeroParallax == doctest::Approx(kNearBound).epsilon(1e-12));
  CHECK(std::abs(near.zeroParallax - 1.833) <= 1e-3);
  CHECK(std::abs(angleDelta(p, 0.064, near.zeroParallax).delta / kDeg - 1.0) <= 1e-7);

  for (double raw : {0.11, 1.0, 2.0, 1e3})
    CHECK(clampZeroParallax(p, band, 0.0, raw).zeroParallax == raw);
}

TEST_CASE("far bound appears when the band sits above zero separation")
{
  // an outward-skewed default lifts the lower band edge above zero
  HmdProfile p = unitProfile();
  p.leftEye = {-1.1, 1.0, 1.0, -1.0};
  p.rightEye = {-1.0, 1.1, 1.0, -1.0};
  const ComfortLimiter lim(p, ComfortBand::symmetric());
  CHECK(lim.lowerTarget() == doctest::Approx(kDefaultDelta - kDeg));
  const double far = lim.farBound(0.064);
  CHECK(std::isfinite(far));
  const ClampResult c = lim.clamp(0.064, 100.0);
  CHECK((c.bound == ActiveBound::Far));
  CHECK(c.zeroParallax == far);
  CHECK(std::abs(angleDelta(p, 0.064, far).delta - lim.lowerTarget()) <= kBisectionTolerance);
  CHECK_THROWS_AS(lim.clamp(0.0, 2.0), UnsatisfiableBandError);
}

TEST_CASE("unsatisfiable bands")
{
  const HmdProfile p = unitProfile();
  // every achievable difference lies below atan(2k) = 63.4 degrees
  const ComfortLimiter high(p, {70.0, 80.0});
  CHECK_THROWS_AS(high.clamp(0.064, 2.0), UnsatisfiableBandError);
  CHECK_THROWS_AS(high.clamp(0.0, 2.0), UnsatisfiableBandError);

  // the generic preset's skew puts the symmetric band's lower edge above zero
  const ComfortLimiter generic(HmdProfile::generic(), ComfortBand::symmetric());
  CHECK(generic.lowerTarget() > 0.0);
  CHECK_THROWS_AS(generic.clamp(0.0, 2.0), UnsatisfiableBandError);
  CHECK_NOTHROW(generic.clamp(0.064, 2.0));

  CHECK_THROWS_AS(ComfortLimiter(p, {1.0, 1.0}), ArgumentError);
}

TEST_CASE("clamp properties on random inputs")
{
  Rng rng(42);
  size_t exercised = 0, clampedNear = 0, clampedFar = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const HmdProfile p = randomProfile(rng);
    const ComfortBand band = randomBand(rng);
    const ComfortLimiter lim(p, band);
    const double dia = rng() % 10 == 0 ? 0.0 : uniform(rng, 1e-3, 0.2);
    const double raw = logUniform(rng, 1e-2, 1e3);
    ClampResult c;
    try {
      c = lim.clamp(dia, raw);
    } catch (const UnsatisfiableBandError &) {
      // legitimate only when the band misses every achievable difference
      const double sup = std::atan(2.0 * lim.slope());
      const bool zeroOk = lim.lowerTarget() <= 0.0 && lim.upperTarget() >= 0.0;
      REQUIRE((dia == 0.0 ? !zeroOk : (lim.upperTarget() <= 0.0 || lim.lowerTarget() >= sup)));
      continue;
    } catch (const ArgumentError &) {
      // no near clamp and the raw plane is inside the eye separation
      REQUIRE(lim.nearBound(dia) == 0.0);
      REQUIRE(dia / (2.0 * raw) >= lim.slope());
      continue;
    }
    ++exercised;
    clampedNear += c.bound == ActiveBound::Near;
    clampedFar += c.bound == ActiveBound::Far;

    const double rel = angleDelta(p, dia, c.zeroParallax).delta - lim.defaultDelta();
    REQUIRE(rel >= band.loDeg * kDeg - 1e-9);
    REQUIRE(rel <= band.hiDeg * kDeg + 1e-9);
    REQUIRE(c.wasClamped == (c.zeroParallax != raw));

    // idempotence
    const ClampResult again = lim.clamp(dia, c.zeroParallax);
    REQUIRE(again.zeroParallax == c.zeroParallax);
    REQUIRE_FALSE(again.wasClamped);

    // order preservation
    const double raw2 = raw * uniform(rng, 1.0, 3.0);
    REQUIRE(lim.clamp(dia, raw2).zeroParallax >= c.zeroParallax);

    // continuity in d_ia: clamped bounds scale linearly with d_ia, so the
    // output moves by at most 1e-9 D / d_ia
    if (dia > 0.0) {
      const double moved = lim.clamp(dia + 1e-9, raw).zeroParallax;
      const double change = std::abs(moved - c.zeroParallax);
      REQUIRE(change <= 1e-9 * c.zeroParallax / dia * (1.0 + 1e-6) + 1e-15 * c.zeroParallax);
      if (c.zeroParallax / dia <= 1e3)
        REQUIRE(change <= 1e-6);
    }
  }
  CHECK(exercised > 15000);
  CHECK(clampedNear > 1000);
  CHECK(clampedFar > 100);
}
