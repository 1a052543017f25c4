// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/errors.h"

#include <sstream>

namespace stereocam {

ParseError::ParseError(std::string path, const std::string &what)
    : std::runtime_error(
        (path.empty() ? std::string("<root>") : path) + ": " + what),
      path_(std::move(path))
{}

static std::string singularMessage(size_t i, size_t j, double distance)
{
  std::ostringstream os;
  os.precision(17);
  os << "singular RBF system: centers " << i << " and " << j
     << " are " << distance << " m apart";
  return os.str();
}

SingularSystemError::SingularSystemError(size_t i, size_t j, double distance)
    : std::runtime_error(singularMessage(i, j, distance)), first_(i), second_(j), distance_(distance)
{}

} // namespace stereocam
