// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON documents shared by the CLI and the HTTP service. Both front ends call
// the render* functions below, so the same inputs give the same bytes.

#include "stereocam/layout.h"
#include "stereocam/pipeline.h"
#include "stereocam/rbf.h"

#include <json.hpp>

#include <string>
#include <string_view>

namespace stereocam {

enum class SurfaceParam
{
  Interaxial,
  ZeroParallax
};

std::optional<SurfaceParam> surfaceParamFromString(std::string_view s); // "ia" | "zp"

nlohmann::json toJson(const RbfModel &model);
nlohmann::json toJson(const FrameRecord &frame);
nlohmann::json toJson(const DepthChartSeries &chart);

// Row-major 16 numbers.
nlohmann::json matrixJson(const Eigen::Matrix4d &m);

// {"samples": [{"t", "d_min", "d_max"}, ...]}; throws ParseError.
DepthProbeSeries probesFromJson(const nlohmann::json &doc);
DepthProbeSeries parseProbes(std::string_view bytes);

// Waypoint ground-plane bounding rectangle grown by 20% (10% per side); a
// degenerate axis gets half a meter on each side.
GridBounds defaultSurfaceBounds(const DepthLayout &layout);

std::string renderValidation(const DepthLayout &layout);
std::string renderFrames(const Session &session, size_t count, Spacing spacing);
std::string renderPath(const Session &session, size_t count);
std::string renderSurface(const Session &session, SurfaceParam param, const GridBounds &bounds,
    size_t xRes, size_t zRes);
std::string renderChart(const Session &session, const DepthProbeSeries &probes);

} // namespace stereocam
