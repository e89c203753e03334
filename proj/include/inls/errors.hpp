#pragma once

#include <stdexcept>
#include <string>

namespace inls {

/// Raised when a computation detects it is under-resolved (NaN fields,
/// singular behavior below the grid scale, quadrature failure). The CLI
/// maps this to a distinct exit code so callers can retry at higher n.
struct resolution_error : std::runtime_error {
  explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed run configuration files.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace inls
