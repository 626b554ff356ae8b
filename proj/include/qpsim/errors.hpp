#pragma once

#include <stdexcept>
#include <string>

namespace qpsim {

/// A numerical sampling requirement is violated. `criterion()` names the
/// requirement (e.g. "mode-resolution", "fresnel-sampling") so drivers can
/// report it verbatim.
class SamplingError : public std::runtime_error {
 public:
  SamplingError(std::string criterion, const std::string& detail)
      : std::runtime_error(criterion + ": " + detail), criterion_(std::move(criterion)) {}

  const std::string& criterion() const noexcept { return criterion_; }

 private:
  std::string criterion_;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpsim
