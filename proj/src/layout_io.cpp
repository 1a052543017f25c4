// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/layout_io.h"
#include "stereocam/errors.h"

#include <cmath>
#include <initializer_list>

namespace stereocam {

using nlohmann::json;

namespace {

void checkFinite(double v, const char *what)
{
  if (!std::isfinite(v))
    throw ArgumentError(std::string("cannot serialize non-finite ") + what);
}

json tangentsJson(const EyeTangents &t)
{
  return {{"left", t.left}, {"right", t.right}, {"top", t.top}, {"bottom", t.bottom}};
}

void requireObject(const json &j, const std::string &path)
{
  if (!j.is_object())
    throw ParseError(path, "expected an object");
}

void checkKeys(const json &j, std::initializer_list<std::string_view> allowed,
    const std::string &path)
{
  for (const auto &[key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed)
      known = known || key == a;
    if (!known)
      throw ParseError(path + "/" + key, "unknown field");
  }
}

const json &field(const json &j, const char *key, const std::string &path)
{
  const auto it = j.find(key);
  if (it == j.end())
    throw ParseError(path + "/" + key, "missing required field");
  return *it;
}

double asNumber(const json &j, const std::string &path)
{
  if (!j.is_number())
    throw ParseError(path, "expected a number");
  return j.get<double>();
}

double number(const json &j, const char *key, const std::string &path)
{
  return asNumber(field(j, key, path), path + "/" + key);
}

template <size_t N>
std::array<double, N> numbers(const json &j, const std::string &path)
{
  if (!j.is_array() || j.size() != N)
    throw ParseError(path, "expected an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (size_t i = 0; i < N; ++i)
    out[i] = asNumber(j[i], path + "/" + std::to_string(i));
  return out;
}

EyeTangents tangentsFromJson(const json &j, const std::string &path)
{
  requireObject(j, path);
  checkKeys(j, {"left", "right", "top", "bottom"}, path);
  return {number(j, "left", path), number(j, "right", path), number(j, "top", path),
      number(j, "bottom", path)};
}

HmdProfile profileFromJson(const json &j, const std::string &path)
{
  if (j.is_string()) {
    if (j.get<std::string>() == "generic")
      return HmdProfile::generic();
    throw ParseError(path, "unknown HMD preset '" + j.get<std::string>() + "'");
  }
  requireObject(j, path);
  checkKeys(j, {"theta", "q", "n", "f", "default_ipd", "default_tangents"}, path);
  HmdProfile p;
  p.verticalFov = number(j, "theta", path);
  p.aspect = number(j, "q", path);
  p.nearPlane = number(j, "n", path);
  p.farPlane = number(j, "f", path);
  p.defaultIpd = number(j, "default_ipd", path);
  const std::string tpath = path + "/default_tangents";
  const json &t = field(j, "default_tangents", path);
  requireObject(t, tpath);
  checkKeys(t, {"left", "right"}, tpath);
  p.leftEye = tangentsFromJson(field(t, "left", tpath), tpath + "/left");
  p.rightEye = tangentsFromJson(field(t, "right", tpath), tpath + "/right");
  return p;
}

} // namespace

json toJson(const HmdProfile &p)
{
  for (double v : {p.verticalFov, p.aspect, p.nearPlane, p.farPlane, p.defaultIpd,
           p.leftEye.left, p.leftEye.right, p.leftEye.top, p.leftEye.bottom,
           p.rightEye.left, p.rightEye.right, p.rightEye.top, p.rightEye.bottom})
    checkFinite(v, "HMD profile value");
  return {{"theta", p.verticalFov},
      {"q", p.aspect},
      {"n", p.nearPlane},
      {"f", p.farPlane},
      {"default_ipd", p.defaultIpd},
      {"default_tangents",
          {{"left", tangentsJson(p.leftEye)}, {"right", tangentsJson(p.rightEye)}}}};
}

json toJson(const Waypoint &w)
{
  const auto &q = w.orientation;
  for (double v : {w.position.x(), w.position.y(), w.position.z(), q.w(), q.x(), q.y(), q.z(),
           w.interaxial, w.zeroParallax})
    checkFinite(v, "waypoint value");
  return {{"position", {w.position.x(), w.position.y(), w.position.z()}},
      {"orientation", {q.w(), q.x(), q.y(), q.z()}},
      {"d_ia", w.interaxial},
      {"d_zp", w.zeroParallax}};
}

json toJson(const DepthLayout &layout)
{
  checkFinite(layout.comfortBand.loDeg, "comfort band");
  checkFinite(layout.comfortBand.hiDeg, "comfort band");
  checkFinite(layout.rbfShape, "RBF shape");
  json wps = json::array();
  for (const Waypoint &w : layout.waypoints)
    wps.push_back(toJson(w));
  return {{"version", kLayoutVersion},
      {"name", layout.name},
      {"hmd_profile", toJson(layout.hmdProfile)},
      {"comfort_band", {{"lo_deg", layout.comfortBand.loDeg}, {"hi_deg", layout.comfortBand.hiDeg}}},
      {"rbf", {{"r0", layout.rbfShape}}},
      {"path_mode", pathModeName(layout.pathMode)},
      {"waypoints", std::move(wps)}};
}

std::string serializeLayout(const DepthLayout &layout)
{
  return toJson(layout).dump(2) + "\n";
}

Waypoint waypointFromJson(const json &j, const std::string &path)
{
  requireObject(j, path);
  checkKeys(j, {"position", "orientation", "d_ia", "d_zp"}, path);
  Waypoint w;
  const auto p = numbers<3>(field(j, "position", path), path + "/position");
  const auto q = numbers<4>(field(j, "orientation", path), path + "/orientation");
  w.position = {p[0], p[1], p[2]};
  w.orientation = Eigen::Quaterniond(q[0], q[1], q[2], q[3]);
  w.interaxial = number(j, "d_ia", path);
  w.zeroParallax = number(j, "d_zp", path);
  return w;
}

Waypoint applyWaypointPatch(const Waypoint &base, const json &patch)
{
  requireObject(patch, "");
  checkKeys(patch, {"position", "orientation", "d_ia", "d_zp"}, "");
  Waypoint w = base;
  if (patch.contains("position")) {
    const auto p = numbers<3>(patch["position"], "/position");
    w.position = {p[0], p[1], p[2]};
  }
  if (patch.contains("orientation")) {
    const auto q = numbers<4>(patch["orientation"], "/orientation");
    w.orientation = Eigen::Quaterniond(q[0], q[1], q[2], q[3]);
  }
  if (patch.contains("d_ia"))
    w.interaxial = number(patch, "d_ia", "");
  if (patch.contains("d_zp"))
    w.zeroParallax = number(patch, "d_zp", "");
  return w;
}

DepthLayout layoutFromJson(const json &doc)
{
  requireObject(doc, "");
  checkKeys(doc, {"version", "name", "hmd_profile", "comfort_band", "rbf", "path_mode", "waypoints"}, "");

  const json &version = field(doc, "version", "");
  if (!version.is_string())
    throw ParseError("/version", "expected a string");
  if (version.get<std::string>() != kLayoutVersion)
    throw ParseError("/version", "unsupported layout version '" + version.get<std::string>() + "'");

  DepthLayout layout;
  const json &name = field(doc, "name", "");
  if (!name.is_string())
    throw ParseError("/name", "expected a string");
  layout.name = name.get<std::string>();

  layout.hmdProfile = profileFromJson(field(doc, "hmd_profile", ""), "/hmd_profile");

  if (const auto it = doc.find("comfort_band"); it != doc.end()) {
    requireObject(*it, "/comfort_band");
    checkKeys(*it, {"lo_deg", "hi_deg"}, "/comfort_band");
    layout.comfortBand = {number(*it, "lo_deg", "/comfort_band"), number(*it, "hi_deg", "/comfort_band")};
  }
  if (const auto it = doc.find("rbf"); it != doc.end()) {
    requireObject(*it, "/rbf");
    checkKeys(*it, {"r0"}, "/rbf");
    layout.rbfShape = number(*it, "r0", "/rbf");
  }
  if (const auto it = doc.find("path_mode"); it != doc.end()) {
    const auto mode = it->is_string() ? pathModeFromString(it->get<std::string>()) : std::nullopt;
    if (!mode)
      throw ParseError("/path_mode", "expected \"single-bezier\" or \"piecewise-c1\"");
    layout.pathMode = *mode;
  }

  const json &wps = field(doc, "waypoints", "");
  if (!wps.is_array())
    throw ParseError("/waypoints", "expected an array");
  for (size_t i = 0; i < wps.size(); ++i)
    layout.waypoints.push_back(waypointFromJson(wps[i], "/waypoints/" + std::to_string(i)));
  return layout;
}

DepthLayout deserializeLayout(std::string_view bytes)
{
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error &e) {
    throw ParseError("", std::string("malformed syntax: ") + e.what());
  }
  return layoutFromJson(doc);
}

json toJson(const ValidationReport &report)
{
  json out = json::array();
  for (const Violation &v : report) {
    json item = {{"waypoint", nullptr}, {"field", v.field}, {"message", v.message}};
    if (v.waypoint)
      item["waypoint"] = *v.waypoint;
    out.push_back(std::move(item));
  }
  return out;
}

} // namespace stereocam
