// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/documents.h"
#include "stereocam/errors.h"
#include "stereocam/layout_io.h"

#include <algorithm>

namespace stereocam {

using nlohmann::json;

namespace {

json vec3(const Eigen::Vector3d &v)
{
  return {v.x(), v.y(), v.z()};
}

json quat(const Eigen::Quaterniond &q)
{
  return {q.w(), q.x(), q.y(), q.z()};
}

std::string_view boundName(ActiveBound b)
{
  switch (b) {
  case ActiveBound::Near:
    return "near";
  case ActiveBound::Far:
    return "far";
  case ActiveBound::None:
    break;
  }
  return "none";
}

std::string finish(const json &doc)
{
  return doc.dump() + "\n";
}

} // namespace

std::optional<SurfaceParam> surfaceParamFromString(std::string_view s)
{
  if (s == "ia")
    return SurfaceParam::Interaxial;
  if (s == "zp")
    return SurfaceParam::ZeroParallax;
  return std::nullopt;
}

json matrixJson(const Eigen::Matrix4d &m)
{
  json out = json::array();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out.push_back(m(r, c));
  return out;
}

json toJson(const RbfModel &model)
{
  json centers = json::array();
  for (const auto &c : model.centers())
    centers.push_back({c.x(), c.y()});
  json weights = json::array(), values = json::array();
  for (Eigen::Index i = 0; i < model.weights().size(); ++i) {
    weights.push_back(model.weights()[i]);
    values.push_back(model.values()[i]);
  }
  return {{"basis", {{"kind", std::string(basisName(model.basis().kind))}, {"r0", model.basis().shape}}},
      {"centers", std::move(centers)},
      {"weights", std::move(weights)},
      {"values", std::move(values)},
      {"residual", model.residual()}};
}

json toJson(const FrameRecord &f)
{
  return {{"t", f.t},
      {"u", f.u},
      {"position", vec3(f.pose.position)},
      {"orientation", quat(f.pose.orientation)},
      {"eye_offset", f.eyeOffset},
      {"d_ia", f.interaxial},
      {"d_zp_raw", f.zeroParallaxRaw},
      {"d_zp", f.zeroParallax},
      {"was_clamped", f.wasClamped},
      {"active_bound", std::string(boundName(f.bound))},
      {"projection_left", matrixJson(f.projections.left)},
      {"projection_right", matrixJson(f.projections.right)}};
}

json toJson(const DepthChartSeries &chart)
{
  json samples = json::array();
  for (const auto &s : chart.samples)
    samples.push_back({{"t", s.t}, {"rel_min", s.relMin}, {"rel_max", s.relMax}, {"d_zp", s.zeroParallax}});
  return {{"format", "stereocam-chart/1"},
      {"quantity", "scene depth minus zero-parallax distance, meters; negative is in front of the plane"},
      {"samples", std::move(samples)}};
}

DepthProbeSeries probesFromJson(const json &doc)
{
  if (!doc.is_object())
    throw ParseError("", "expected an object");
  const auto it = doc.find("samples");
  if (it == doc.end())
    throw ParseError("/samples", "missing required field");
  if (!it->is_array())
    throw ParseError("/samples", "expected an array");
  DepthProbeSeries out;
  for (size_t i = 0; i < it->size(); ++i) {
    const json &s = (*it)[i];
    const std::string path = "/samples/" + std::to_string(i);
    if (!s.is_object())
      throw ParseError(path, "expected an object");
    DepthProbe p;
    for (auto [key, dst] : {std::pair{"t", &p.t}, std::pair{"d_min", &p.minDepth},
             std::pair{"d_max", &p.maxDepth}}) {
      const auto f = s.find(key);
      if (f == s.end())
        throw ParseError(path + "/" + key, "missing required field");
      if (!f->is_number())
        throw ParseError(path + "/" + key, "expected a number");
      *dst = f->get<double>();
    }
    out.samples.push_back(p);
  }
  return out;
}

DepthProbeSeries parseProbes(std::string_view bytes)
{
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error &e) {
    throw ParseError("", std::string("malformed syntax: ") + e.what());
  }
  return probesFromJson(doc);
}

GridBounds defaultSurfaceBounds(const DepthLayout &layout)
{
  if (layout.waypoints.empty())
    return {-1.0, 1.0, -1.0, 1.0};
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, z0 = x0, z1 = -x0;
  for (const Waypoint &w : layout.waypoints) {
    const Eigen::Vector2d g = groundPoint(w.position);
    x0 = std::min(x0, g.x());
    x1 = std::max(x1, g.x());
    z0 = std::min(z0, g.y());
    z1 = std::max(z1, g.y());
  }
  const auto pad = [](double lo, double hi) { return hi - lo > 0.0 ? 0.1 * (hi - lo) : 0.5; };
  const double px = pad(x0, x1), pz = pad(z0, z1);
  return {x0 - px, x1 + px, z0 - pz, z1 + pz};
}

std::string renderValidation(const DepthLayout &layout)
{
  return finish({{"violations", toJson(validateLayout(layout))},
      {"advisories", authoringAdvisories(layout)}});
}

std::string renderFrames(const Session &session, size_t count, Spacing spacing)
{
  json frames = json::array();
  for (const FrameRecord &f : session.frames(count, spacing))
    frames.push_back(toJson(f));
  return finish({{"format", "stereocam-frames/1"},
      {"mode", std::string(pathModeName(session.path().mode()))},
      {"spacing", std::string(spacingName(spacing))},
      {"matrix_order", "row-major"},
      {"count", count},
      {"frames", std::move(frames)}});
}

std::string renderPath(const Session &session, size_t count)
{
  if (count < 2)
    throw ArgumentError("path sample count must be at least 2");
  const CameraPath &path = session.path();
  json samples = json::array();
  for (size_t i = 0; i < count; ++i) {
    const double u = i + 1 == count ? 1.0 : double(i) / double(count - 1);
    samples.push_back({{"u", u}, {"position", vec3(path.position(u))},
        {"orientation", quat(path.orientation(u))}});
  }
  json cps = json::array();
  for (const auto &p : path.controlPoints())
    cps.push_back(vec3(p));
  return finish({{"format", "stereocam-path/1"},
      {"mode", std::string(pathModeName(path.mode()))},
      {"control_points", std::move(cps)},
      {"samples", std::move(samples)}});
}

std::string renderSurface(const Session &session, SurfaceParam param, const GridBounds &bounds,
    size_t xRes, size_t zRes)
{
  const ParameterField &field = param == SurfaceParam::Interaxial ? session.interaxialField()
                                                                  : session.zeroParallaxField();
  if (!field.model())
    throw LayoutError("session has no fitted surface for this parameter");
  const ScalarGrid grid = evaluateGrid(*field.model(), bounds, xRes, zRes);
  json rows = json::array();
  for (size_t j = 0; j < grid.zRes; ++j) {
    json row = json::array();
    for (size_t i = 0; i < grid.xRes; ++i)
      row.push_back(grid.at(i, j));
    rows.push_back(std::move(row));
  }
  return finish({{"format", "stereocam-surface/1"},
      {"param", param == SurfaceParam::Interaxial ? "ia" : "zp"},
      {"bounds", {{"x_min", bounds.xMin}, {"x_max", bounds.xMax}, {"z_min", bounds.zMin},
                     {"z_max", bounds.zMax}}},
      {"res", {xRes, zRes}},
      {"lattice", "values[j][i] at x = x_min + i (x_max - x_min) / (res[0] - 1), "
                  "z = z_min + j (z_max - z_min) / (res[1] - 1)"},
      {"values", std::move(rows)},
      {"model", toJson(*field.model())}});
}

std::string renderChart(const Session &session, const DepthProbeSeries &probes)
{
  return finish(toJson(session.depthChart(probes)));
}

} // namespace stereocam
