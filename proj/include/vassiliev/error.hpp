#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace vassiliev {

// Every library failure carries the module that raised it so the CLI can
// report machine-readable errors.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), module_(std::move(module)), position_(position) {}

  const std::string& module() const noexcept { return module_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  std::string module_;
  std::optional<std::size_t> position_;
};

}  // namespace vassiliev
