// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/service.h"
#include "stereocam/documents.h"
#include "stereocam/errors.h"
#include "stereocam/layout_io.h"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

namespace stereocam {

using nlohmann::json;

namespace {

constexpr size_t kMaxSamples = 100000;
constexpr size_t kMaxGridRes = 1024;

Response reply(int status, const json &body)
{
  return {status, body.dump() + "\n"};
}

Response error(int status, const std::string &message)
{
  return reply(status, {{"error", message}});
}

Response parseError(const ParseError &e)
{
  return reply(400, {{"error", e.what()}, {"path", e.path()}});
}

Response notFound(const std::string &id)
{
  return error(404, "unknown session '" + id + "'");
}

Response report(const DepthLayout &layout)
{
  return reply(200, {{"violations", toJson(validateLayout(layout))},
      {"advisories", authoringAdvisories(layout)},
      {"waypoints", layout.waypoints.size()}});
}

std::optional<std::string> param(const Query &q, const std::string &key)
{
  const auto it = q.find(key);
  if (it == q.end())
    return std::nullopt;
  return it->second;
}

size_t sizeParam(const Query &q, const std::string &key, size_t fallback, size_t lo, size_t hi)
{
  const auto s = param(q, key);
  if (!s)
    return fallback;
  size_t v = 0;
  const auto [end, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
  if (ec != std::errc() || end != s->data() + s->size() || v < lo || v > hi)
    throw ArgumentError("query parameter '" + key + "' must be an integer in [" + std::to_string(lo)
        + ", " + std::to_string(hi) + "]");
  return v;
}

double doubleParam(const Query &q, const std::string &key)
{
  const std::string s = *param(q, key);
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v))
      return v;
  } catch (const std::exception &) {
  }
  throw ArgumentError("query parameter '" + key + "' must be a finite number");
}

PathMode modeParam(const Query &q, PathMode fallback)
{
  const auto s = param(q, "mode");
  if (!s)
    return fallback;
  const auto mode = pathModeFromString(*s);
  if (!mode)
    throw ArgumentError("query parameter 'mode' must be single-bezier or piecewise-c1");
  return *mode;
}

json parseBody(const std::string &body)
{
  try {
    return json::parse(body);
  } catch (const json::parse_error &e) {
    throw ParseError("", std::string("malformed syntax: ") + e.what());
  }
}

bool plainName(const std::string &s, bool allowDot)
{
  static const std::regex stem("[A-Za-z0-9_-]+");
  static const std::regex file("[A-Za-z0-9_-][A-Za-z0-9_.-]*");
  return std::regex_match(s, allowDot ? file : stem);
}

} // namespace

DepthLayout loadPreset(const std::filesystem::path &presetDir, const std::string &id)
{
  if (!plainName(id, false))
    throw ArgumentError("invalid preset id '" + id + "'");
  std::ifstream in(presetDir / (id + ".json"), std::ios::binary);
  if (!in)
    throw ArgumentError("unknown preset '" + id + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserializeLayout(ss.str());
}

Service::Service(ServiceOptions options) : options_(std::move(options)) {}

std::shared_ptr<Service::Entry> Service::find(const std::string &id) const
{
  std::shared_lock lock(sessionsMutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::shared_ptr<const Session> Service::prepared(Entry &entry, PathMode mode)
{
  std::lock_guard lock(entry.cacheMutex);
  auto &slot = entry.prepared[mode];
  if (!slot)
    slot = std::make_shared<const Session>(Session::prepare(entry.layout, mode));
  return slot;
}

Response Service::createSession(const std::string &body, const Query &query)
{
  DepthLayout layout;
  try {
    if (const auto preset = param(query, "preset"))
      layout = loadPreset(options_.presetDir, *preset);
    else
      layout = deserializeLayout(body);
  } catch (const ParseError &e) {
    return parseError(e);
  } catch (const ArgumentError &e) {
    return error(400, e.what());
  }

  auto entry = std::make_shared<Entry>();
  entry->layout = std::move(layout);
  const std::string id = "s" + std::to_string(nextId_++);
  {
    std::unique_lock lock(sessionsMutex_);
    sessions_[id] = entry;
  }
  std::shared_lock lock(entry->mutex);
  return reply(200, {{"id", id},
      {"violations", toJson(validateLayout(entry->layout))},
      {"advisories", authoringAdvisories(entry->layout)}});
}

Response Service::listPresets() const
{
  std::vector<std::string> ids;
  std::error_code ec;
  for (const auto &e : std::filesystem::directory_iterator(options_.presetDir, ec))
    if (e.path().extension() == ".json")
      ids.push_back(e.path().stem().string());
  std::sort(ids.begin(), ids.end());
  return reply(200, {{"presets", ids}});
}

Response Service::getLayout(const std::string &id)
{
  const auto entry = find(id);
  if (!entry)
    return notFound(id);
  std::shared_lock lock(entry->mutex);
  return {200, serializeLayout(entry->layout)};
}

Response Service::addWaypoint(const std::string &id, const std::string &body)
{
  const auto entry = find(id);
  if (!entry)
    return notFound(id);
  Waypoint w;
  try {
    w = waypointFromJson(parseBody(body));
  } catch (const ParseError &e) {
    return parseError(e);
  }
  std::unique_lock lock(entry->mutex);
  entry->layout.waypoints.push_back(w);
  {
    std::lock_guard cache(entry->cacheMutex);
    entry->prepared.clear();
  }
  return report(entry->layout);
}

Response Service::removeLastWaypoint(const std::string &id)
{
  const auto entry = find(id);
  if (!entry)
    return notFound(id);
  std::unique_lock lock(entry->mutex);
  if (entry->layout.waypoints.size() <= kMinWaypoints)
    return error(409, "a layout keeps at least " + std::to_string(kMinWaypoints) + " waypoints");
  entry->layout.waypoints.pop_back();
  {
    std::lock_guard cache(entry->cacheMutex);
    entry->prepared.clear();
  }
  return report(entry->layout);
}

Response Service::editWaypoint(const std::string &id, const std::string &index, const std::string &body)
{
  const auto entry = find(id);
  if (!entry)
    return notFound(id);
  json patch;
  try {
    patch = parseBody(body);
  } catch (const ParseError &e) {
    return parseError(e);
  }

  std::unique_lock lock(entry->mutex);
  size_t k = 0;
  const auto [end, ec] = std::from_chars(index.data(), index.data() + index.size(), k);
  if (ec != std::errc() || end != index.data() + index.size() || k >= entry->layout.waypoints.size())
    return error(404, "no waypoint '" + index + "'");

  Waypoint &current = entry->layout.waypoints[k];
  Waypoint updated;
  try {
    updated = applyWaypointPatch(current, patch);
  } catch (const ParseError &e) {
    return parseError(e);
  }
  const double moved = (updated.position - current.position).norm();
  if (!(moved <= options_.editRadius)) {
    std::ostringstream os;
    os << "waypoint " << k << " may move at most " << options_.editRadius << " m per edit (requested "
       << moved << " m)";
    return error(409, os.str());
  }
  current = updated;
  {
    std::lock_guard cache(entry->cacheMutex);
    entry->prepared.clear();
  }
  return report(entry->layout);
}

template <typename Fn>
Response Service::withPrepared(const std::string &id, const Query &query, Fn &&fn)
{
  const auto entry = find(id);
  if (!entry)
    return notFound(id);
  std::shared_lock lock(entry->mutex);
  try {
    const PathMode mode = modeParam(query, entry->layout.pathMode);
    const ValidationReport violations = validateLayout(entry->layout);
    if (!violations.empty())
      return reply(409, {{"error", "layout is not preparable"}, {"violations", toJson(violations)}});
    std::shared_ptr<const Session> session;
    try {
      session = prepared(*entry, mode);
    } catch (const std::runtime_error &e) {
      return reply(409, {{"error", e.what()}, {"violations", json::array()}});
    }
    return Response{200, fn(*session, entry->layout)};
  } catch (const ParseError &e) {
    return parseError(e);
  } catch (const ArgumentError &e) {
    return error(400, e.what());
  } catch (const std::runtime_error &e) {
    // degenerate interpolant, unsatisfiable band, ...
    return error(409, e.what());
  }
}

Response Service::getPath(const std::string &id, const Query &query)
{
  return withPrepared(id, query, [&](const Session &s, const DepthLayout &) {
    return renderPath(s, sizeParam(query, "n", 64, 2, kMaxSamples));
  });
}

Response Service::getSurface(const std::string &id, const Query &query)
{
  return withPrepared(id, query, [&](const Session &s, const DepthLayout &layout) {
    const auto name = param(query, "param");
    const auto which = name ? surfaceParamFromString(*name) : std::nullopt;
    if (!which)
      throw ArgumentError("query parameter 'param' must be ia or zp");
    const size_t res = sizeParam(query, "res", 64, 2, kMaxGridRes);
    GridBounds bounds = defaultSurfaceBounds(layout);
    const char *keys[] = {"x_min", "x_max", "z_min", "z_max"};
    const auto given = std::count_if(std::begin(keys), std::end(keys),
        [&](const char *k) { return query.count(k) > 0; });
    if (given == 4)
      bounds = {doubleParam(query, "x_min"), doubleParam(query, "x_max"), doubleParam(query, "z_min"),
          doubleParam(query, "z_max")};
    else if (given != 0)
      throw ArgumentError("give all of x_min, x_max, z_min, z_max or none");
    return renderSurface(s, *which, bounds, res, res);
  });
}

Response Service::getFrames(const std::string &id, const Query &query)
{
  return withPrepared(id, query, [&](const Session &s, const DepthLayout &) {
    const size_t n = sizeParam(query, "n", 100, 2, kMaxSamples);
    Spacing spacing = Spacing::UniformParameter;
    if (const auto sp = param(query, "spacing")) {
      const auto parsed = spacingFromString(*sp);
      if (!parsed)
        throw ArgumentError("query parameter 'spacing' must be uniform-parameter or uniform-arc-length");
      spacing = *parsed;
    }
    return renderFrames(s, n, spacing);
  });
}

Response Service::postChart(const std::string &id, const std::string &body, const Query &query)
{
  return withPrepared(id, query, [&](const Session &s, const DepthLayout &) {
    return renderChart(s, parseProbes(body));
  });
}

Response Service::save(const std::string &id, const std::string &body)
{
  const auto entry = find(id);
  if (!entry)
    return notFound(id);
  if (options_.saveDir.empty())
    return error(409, "saving is disabled (no save directory configured)");
  std::string file;
  try {
    const json req = parseBody(body);
    if (!req.is_object() || !req.contains("file") || !req["file"].is_string())
      throw ParseError("/file", "expected a file name string");
    file = req["file"].get<std::string>();
  } catch (const ParseError &e) {
    return parseError(e);
  }
  if (!plainName(file, true))
    return error(400, "file must be a plain file name");

  std::shared_lock lock(entry->mutex);
  std::string bytes;
  try {
    bytes = serializeLayout(entry->layout);
  } catch (const ArgumentError &e) {
    return error(409, e.what());
  }
  const auto target = options_.saveDir / file;
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  out << bytes;
  if (!out)
    return error(500, "could not write " + target.string());
  return reply(200, {{"saved", target.string()}});
}

void Service::mount(httplib::Server &server)
{
  const auto send = [](httplib::Response &res, const Response &r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  const auto guarded = [send](auto fn) {
    return [send, fn](const httplib::Request &req, httplib::Response &res) {
      try {
        send(res, fn(req));
      } catch (const std::exception &e) {
        send(res, error(500, e.what()));
      }
    };
  };

  server.Put("/sessions", guarded([this](const httplib::Request &req) {
    return createSession(req.body, req.params);
  }));
  server.Get("/presets", guarded([this](const httplib::Request &) { return listPresets(); }));
  server.Get(R"(/sessions/([^/]+)/layout)", guarded([this](const httplib::Request &req) {
    return getLayout(req.matches[1]);
  }));
  server.Post(R"(/sessions/([^/]+)/waypoints)", guarded([this](const httplib::Request &req) {
    return addWaypoint(req.matches[1], req.body);
  }));
  server.Delete(R"(/sessions/([^/]+)/waypoints/last)", guarded([this](const httplib::Request &req) {
    return removeLastWaypoint(req.matches[1]);
  }));
  server.Patch(R"(/sessions/([^/]+)/waypoints/([^/]+))", guarded([this](const httplib::Request &req) {
    return editWaypoint(req.matches[1], req.matches[2], req.body);
  }));
  server.Get(R"(/sessions/([^/]+)/path)", guarded([this](const httplib::Request &req) {
    return getPath(req.matches[1], req.params);
  }));
  server.Get(R"(/sessions/([^/]+)/surface)", guarded([this](const httplib::Request &req) {
    return getSurface(req.matches[1], req.params);
  }));
  server.Get(R"(/sessions/([^/]+)/frames)", guarded([this](const httplib::Request &req) {
    return getFrames(req.matches[1], req.params);
  }));
  server.Post(R"(/sessions/([^/]+)/chart)", guarded([this](const httplib::Request &req) {
    return postChart(req.matches[1], req.body, req.params);
  }));
  server.Post(R"(/sessions/([^/]+)/save)", guarded([this](const httplib::Request &req) {
    return save(req.matches[1], req.body);
  }));
}

void serve(Service &service, const std::string &bind, int port)
{
  httplib::Server server;
  service.mount(server);
  if (!server.listen(bind, port))
    throw std::runtime_error("could not listen on " + bind + ":" + std::to_string(port));
}

} // namespace stereocam
