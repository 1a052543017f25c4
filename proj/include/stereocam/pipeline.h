// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "stereocam/comfort.h"
#include "stereocam/layout.h"
#include "stereocam/path.h"
#include "stereocam/projection.h"
#include "stereocam/rbf.h"

#include <optional>
#include <string_view>
#include <vector>

namespace stereocam {

struct FrameRecord
{
  double t{0.0}; // playback parameter
  double u{0.0}; // curve parameter the pose was evaluated at
  Pose pose;
  double eyeOffset{0.0}; // lateral offset of each eye in the view transform, d_ia / 2
  double interaxial{0.0};
  double zeroParallaxRaw{0.0};
  double zeroParallax{0.0};
  bool wasClamped{false};
  ActiveBound bound{ActiveBound::None};
  StereoProjectionPair projections;
};

enum class Spacing
{
  UniformParameter,
  UniformArcLength
};

std::string_view spacingName(Spacing spacing);
std::optional<Spacing> spacingFromString(std::string_view s);

struct DepthProbe
{
  double t{0.0};
  double minDepth{0.0};
  double maxDepth{0.0};
};

// Scene render depth along the path, supplied by a renderer.
struct DepthProbeSeries
{
  std::vector<DepthProbe> samples;
};

// Throws ArgumentError unless t is strictly increasing in [0, 1] and
// 0 < min <= max for every sample.
void checkProbes(const DepthProbeSeries &probes);

// Depth relative to the zero-parallax plane: negative values sit in front of
// it (negative disparity).
struct DepthChartSample
{
  double t{0.0};
  double relMin{0.0};
  double relMax{0.0};
  double zeroParallax{0.0};
};

struct DepthChartSeries
{
  std::vector<DepthChartSample> samples;
};

// Either a fitted RBF surface or a constant (fixed-parameter sessions).
class ParameterField
{
 public:
  explicit ParameterField(RbfModel model) : model_(std::move(model)) {}
  explicit ParameterField(double constant) : constant_(constant) {}

  double operator()(const Eigen::Vector2d &x) const
  {
    return model_ ? (*model_)(x) : constant_;
  }
  const std::optional<RbfModel> &model() const
  {
    return model_;
  }

 private:
  std::optional<RbfModel> model_;
  double constant_{0.0};
};

constexpr size_t kSessionArcSamples = 1024;

// Everything a playback needs, solved once up front. Immutable; frame
// evaluation is const and safe to call from several threads.
class Session
{
 public:
  // Throws LayoutError listing the violations when the layout is invalid,
  // and propagates solver errors.
  static Session prepare(const DepthLayout &layout, PathMode mode);
  static Session prepare(const DepthLayout &layout)
  {
    return prepare(layout, layout.pathMode);
  }

  // Default-HMD emulation: the layout's path, but constant d_ia and d_zp.
  static Session prepareFixed(const DepthLayout &layout, PathMode mode, double interaxial,
      double zeroParallax);

  FrameRecord frame(double t) const;
  std::vector<FrameRecord> frames(size_t count, Spacing spacing) const;
  DepthChartSeries depthChart(const DepthProbeSeries &probes) const;

  const CameraPath &path() const
  {
    return path_;
  }
  const ParameterField &interaxialField() const
  {
    return interaxial_;
  }
  const ParameterField &zeroParallaxField() const
  {
    return zeroParallax_;
  }
  const HmdProfile &profile() const
  {
    return profile_;
  }
  const ComfortBand &band() const
  {
    return band_;
  }
  const ComfortLimiter &limiter() const
  {
    return limiter_;
  }

 private:
  Session(CameraPath path, ParameterField interaxial, ParameterField zeroParallax,
      const HmdProfile &profile, const ComfortBand &band);

  FrameRecord evaluate(double t, double u) const;

  CameraPath path_;
  ParameterField interaxial_;
  ParameterField zeroParallax_;
  HmdProfile profile_;
  ComfortBand band_;
  ComfortLimiter limiter_;
};

} // namespace stereocam
