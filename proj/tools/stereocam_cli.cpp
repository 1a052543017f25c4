// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/documents.h"
#include "stereocam/errors.h"
#include "stereocam/layout_io.h"
#include "stereocam/service.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace stereocam;

namespace {

#ifndef STEREOCAM_PRESET_DIR
#define STEREOCAM_PRESET_DIR "layouts"
#endif

std::string readFile(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "preset:<id>" loads a bundled layout, anything else is a file path.
DepthLayout loadLayout(const std::string &arg, const std::string &presetDir)
{
  constexpr std::string_view prefix = "preset:";
  if (arg.rfind(prefix, 0) == 0)
    return loadPreset(presetDir, arg.substr(prefix.size()));
  return deserializeLayout(readFile(arg));
}

void emit(const std::string &bytes, const std::string &out)
{
  if (out.empty() || out == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  f << bytes;
  if (!f)
    throw std::runtime_error("cannot write " + out);
}

Session prepareFor(const DepthLayout &layout, const std::string &mode)
{
  PathMode m = layout.pathMode;
  if (!mode.empty()) {
    const auto parsed = pathModeFromString(mode);
    if (!parsed)
      throw ArgumentError("--mode must be single-bezier or piecewise-c1");
    m = *parsed;
  }
  return Session::prepare(layout, m);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"stereocam: stereoscopic camera control from authored depth layouts"};
  app.require_subcommand(1);

  std::string presetDir = STEREOCAM_PRESET_DIR;
  app.add_option("--presets", presetDir, "Directory of bundled layouts")->capture_default_str();

  std::string layoutArg, out, mode;

  auto *validate = app.add_subcommand("validate", "Check a layout and list violations");
  validate->add_option("layout", layoutArg, "Layout file or preset:<id>")->required();

  size_t frameCount = 100;
  std::string spacing = "uniform-parameter";
  auto *frames = app.add_subcommand("frames", "Emit the per-frame stream");
  frames->add_option("layout", layoutArg, "Layout file or preset:<id>")->required();
  frames->add_option("--n", frameCount, "Number of frames (>= 2)")->capture_default_str();
  frames->add_option("--spacing", spacing, "uniform-parameter | uniform-arc-length")->capture_default_str();
  frames->add_option("--mode", mode, "single-bezier | piecewise-c1 (default: layout's)");
  frames->add_option("--out", out, "Output file (default stdout)");

  std::string surfaceParam = "zp";
  size_t res = 64;
  auto *surface = app.add_subcommand("surface", "Sample a fitted parameter surface on a grid");
  surface->add_option("layout", layoutArg, "Layout file or preset:<id>")->required();
  surface->add_option("--param", surfaceParam, "ia | zp")->capture_default_str();
  surface->add_option("--res", res, "Grid resolution per axis (>= 2)")->capture_default_str();
  surface->add_option("--out", out, "Output file (default stdout)");

  std::string probesFile;
  auto *chart = app.add_subcommand("chart", "Depth chart relative to the zero-parallax plane");
  chart->add_option("layout", layoutArg, "Layout file or preset:<id>")->required();
  chart->add_option("--probes", probesFile, "Depth probe file")->required();
  chart->add_option("--mode", mode, "single-bezier | piecewise-c1 (default: layout's)");
  chart->add_option("--out", out, "Output file (default stdout)");

  int port = 8080;
  std::string bind = "127.0.0.1";
  std::string saveDir;
  double editRadius = 2.0;
  auto *serveCmd = app.add_subcommand("serve", "Run the local HTTP JSON API");
  serveCmd->add_option("--port", port)->capture_default_str();
  serveCmd->add_option("--bind", bind)->capture_default_str();
  serveCmd->add_option("--save-dir", saveDir, "Directory for POST /sessions/{id}/save");
  serveCmd->add_option("--edit-radius", editRadius, "Max waypoint move per edit, meters")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const DepthLayout layout = loadLayout(layoutArg, presetDir);
      emit(renderValidation(layout), "");
      return validateLayout(layout).empty() ? 0 : 1;
    }
    if (*frames) {
      const auto sp = spacingFromString(spacing);
      if (!sp)
        throw ArgumentError("--spacing must be uniform-parameter or uniform-arc-length");
      const Session session = prepareFor(loadLayout(layoutArg, presetDir), mode);
      emit(renderFrames(session, frameCount, *sp), out);
      return 0;
    }
    if (*surface) {
      const auto which = surfaceParamFromString(surfaceParam);
      if (!which)
        throw ArgumentError("--param must be ia or zp");
      const DepthLayout layout = loadLayout(layoutArg, presetDir);
      const Session session = Session::prepare(layout);
      emit(renderSurface(session, *which, defaultSurfaceBounds(layout), res, res), out);
      return 0;
    }
    if (*chart) {
      const Session session = prepareFor(loadLayout(layoutArg, presetDir), mode);
      emit(renderChart(session, parseProbes(readFile(probesFile))), out);
      return 0;
    }
    if (*serveCmd) {
      ServiceOptions opts;
      opts.editRadius = editRadius;
      opts.presetDir = presetDir;
      opts.saveDir = saveDir;
      Service service(opts);
      std::cerr << "listening on http://" << bind << ":" << port << "\n";
      serve(service, bind, port);
      return 0;
    }
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
