// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace stereocam {

// Contract violation on a numeric argument (NaN, negative distance, u
// outside [0,1], d_ia too wide for the frustum, ...).
class ArgumentError : public std::invalid_argument
{
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed layout / probe document. `path` is a JSON pointer to the
// offending element ("" for the document root).
class ParseError : public std::runtime_error
{
 public:
  ParseError(std::string path, const std::string &what);
  const std::string &path() const
  {
    return path_;
  }

 private:
  std::string path_;
};

// RBF kernel matrix is rank deficient; carries the closest center pair.
class SingularSystemError : public std::runtime_error
{
 public:
  SingularSystemError(size_t i, size_t j, double distance);
  size_t first() const
  {
    return first_;
  }
  size_t second() const
  {
    return second_;
  }
  double distance() const
  {
    return distance_;
  }

 private:
  size_t first_;
  size_t second_;
  double distance_;
};

// Comfort band excludes every achievable angle difference.
class UnsatisfiableBandError : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

// Layout cannot be prepared or evaluated (fewer than two waypoints,
// zero-parallax interpolant at or inside the near plane, ...).
class LayoutError : public std::runtime_error
{
 public:
  using std::runtime_error::runtime_error;
};

// Interpolated zero-parallax distance at or inside the near plane.
class DegenerateInterpolantError : public LayoutError
{
 public:
  using LayoutError::LayoutError;
};

} // namespace stereocam
