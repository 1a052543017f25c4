// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "stereocam/layout.h"

#include <json.hpp>

#include <string>
#include <string_view>

namespace stereocam {

// Layout files are JSON:
//
//   {
//     "version": "stereocam-layout/1",
//     "name": "...",
//     "hmd_profile": {"theta", "q", "n", "f", "default_ipd",
//                     "default_tangents": {"left": {"left", "right", "top", "bottom"},
//                                          "right": {...}}},
//     "comfort_band": {"lo_deg", "hi_deg"},        optional, default (-10, +1)
//     "rbf": {"r0"},                               optional, default 2
//     "path_mode": "single-bezier" | "piecewise-c1", optional
//     "waypoints": [{"position": [x, y, z], "orientation": [w, x, y, z],
//                    "d_ia", "d_zp"}, ...]
//   }
//
// "hmd_profile" may also be the name of a built-in preset ("generic").
// Numbers are written as shortest round-trip decimals, so a parse of the
// output reproduces every double bit for bit.
inline constexpr std::string_view kLayoutVersion = "stereocam-layout/1";

std::string serializeLayout(const DepthLayout &layout);

// Throws ParseError (with a JSON pointer to the bad element) on malformed
// syntax, an unknown version, a missing or mistyped field, or unknown keys.
// Does not validate; run validateLayout on the result.
DepthLayout deserializeLayout(std::string_view bytes);

nlohmann::json toJson(const DepthLayout &layout);
nlohmann::json toJson(const Waypoint &waypoint);
nlohmann::json toJson(const HmdProfile &profile);

DepthLayout layoutFromJson(const nlohmann::json &doc);
// `where` prefixes error paths.
Waypoint waypointFromJson(const nlohmann::json &j, const std::string &where = "");

// Partial update {position?, orientation?, d_ia?, d_zp?} applied to `base`.
Waypoint applyWaypointPatch(const Waypoint &base, const nlohmann::json &patch);

nlohmann::json toJson(const ValidationReport &report);

} // namespace stereocam
