#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace li {

enum class ErrorKind {
  validation,   // bad configuration or arguments
  domain,       // argument outside an operation's domain
  pole,         // evaluation at a pole
  precision,    // requested accuracy cannot be reached with the given budget
  convention,   // Stieltjes table in the wrong (or missing) convention
  coverage,     // a table is too short for the requested index
  format,       // malformed file contents
  checksum,     // cache checksum mismatch
  io,           // filesystem failure
  resource,     // term/memory budget exceeded
  verification  // a cross-check failed
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `module()` names the subsystem that
/// raised it so the CLI can report provenance.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message)
      : std::runtime_error(message), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string module, const std::string& message) {
  throw Error(kind, std::move(module), message);
}

}  // namespace li
