// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "stereocam/layout.h"
#include "stereocam/pipeline.h"

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace httplib {
class Server;
}

namespace stereocam {

struct ServiceOptions
{
  double editRadius{2.0}; // meters a waypoint may move per edit
  std::filesystem::path presetDir; // bundled layouts, loadable by id
  std::filesystem::path saveDir; // empty disables POST .../save
};

struct Response
{
  int status{200};
  std::string body;
};

using Query = std::multimap<std::string, std::string>;

// In-memory layout sessions. Each session is single-writer / multi-reader:
// edits take an exclusive lock, previews a shared one, so a preview never
// sees half an edit. Prepared playback state is cached per path mode and
// dropped on every edit.
class Service
{
 public:
  explicit Service(ServiceOptions options = {});

  // PUT /sessions (body = layout document, or ?preset=<id> with empty body)
  Response createSession(const std::string &body, const Query &query);
  // GET /presets
  Response listPresets() const;
  // GET /sessions/{id}/layout
  Response getLayout(const std::string &id);
  // POST /sessions/{id}/waypoints
  Response addWaypoint(const std::string &id, const std::string &body);
  // DELETE /sessions/{id}/waypoints/last
  Response removeLastWaypoint(const std::string &id);
  // PATCH /sessions/{id}/waypoints/{k}
  Response editWaypoint(const std::string &id, const std::string &index, const std::string &body);
  // GET /sessions/{id}/path?n=&mode=
  Response getPath(const std::string &id, const Query &query);
  // GET /sessions/{id}/surface?param=ia|zp&res=&x_min=&x_max=&z_min=&z_max=
  Response getSurface(const std::string &id, const Query &query);
  // GET /sessions/{id}/frames?n=&spacing=&mode=
  Response getFrames(const std::string &id, const Query &query);
  // POST /sessions/{id}/chart?mode= (body = probe document)
  Response postChart(const std::string &id, const std::string &body, const Query &query);
  // POST /sessions/{id}/save (body = {"file": "name.json"})
  Response save(const std::string &id, const std::string &body);

  // Registers every route above on `server`.
  void mount(httplib::Server &server);

  const ServiceOptions &options() const
  {
    return options_;
  }

 private:
  struct Entry
  {
    std::shared_mutex mutex;
    DepthLayout layout;
    std::mutex cacheMutex;
    std::map<PathMode, std::shared_ptr<const Session>> prepared;
  };

  std::shared_ptr<Entry> find(const std::string &id) const;
  // Caller holds entry.mutex (shared is enough).
  std::shared_ptr<const Session> prepared(Entry &entry, PathMode mode);

  template <typename Fn>
  Response withPrepared(const std::string &id, const Query &query, Fn &&fn);

  ServiceOptions options_;
  mutable std::shared_mutex sessionsMutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::atomic<unsigned long> nextId_{1};
};

// Loads `<presetDir>/<id>.json`; id must be a plain file stem.
DepthLayout loadPreset(const std::filesystem::path &presetDir, const std::string &id);

// Runs an HTTP server until the process is stopped.
void serve(Service &service, const std::string &bind, int port);

} // namespace stereocam
