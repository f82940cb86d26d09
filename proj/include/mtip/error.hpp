#pragma once

#include <stdexcept>
#include <string>

namespace mtip {

// Every library failure carries a stable machine-readable code next to the
// human-readable message. The CLI forwards both on stderr.
class Error : public std::invalid_argument {
 public:
  Error(std::string code, const std::string& message)
      : std::invalid_argument(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace mtip
