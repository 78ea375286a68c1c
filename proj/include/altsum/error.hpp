#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace altsum {

// Error categories, surfaced through the CLI as machine-readable "kind" strings.
enum class errc {
  invalid_argument,
  division_by_zero,
  out_of_range,
  guard_exceeded,
  backend_mismatch,
  hypothesis_failed,
  unknown_constant,
  no_known_limit,
  unreachable_eps,
  parse_error,
  io_error,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::division_by_zero: return "division_by_zero";
    case errc::out_of_range: return "out_of_range";
    case errc::guard_exceeded: return "guard_exceeded";
    case errc::backend_mismatch: return "backend_mismatch";
    case errc::hypothesis_failed: return "hypothesis_failed";
    case errc::unknown_constant: return "unknown_constant";
    case errc::no_known_limit: return "no_known_limit";
    case errc::unreachable_eps: return "unreachable_eps";
    case errc::parse_error: return "parse_error";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  errc code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  errc code_;
  std::string context_;
};

[[noreturn]] inline void raise(errc code, const std::string& message,
                               std::string context = {}) {
  throw Error(code, message, std::move(context));
}

}  // namespace altsum
