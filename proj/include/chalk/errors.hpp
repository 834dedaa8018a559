#pragma once

#include <stdexcept>
#include <string>

namespace chalk {

/// Exit-code categories surfaced by the CLI.
enum class ErrorKind { Validation = 1, Config = 2, Io = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error config_error(std::string code, const std::string& what) {
  return Error(ErrorKind::Config, std::move(code), what);
}
inline Error validation_error(std::string code, const std::string& what) {
  return Error(ErrorKind::Validation, std::move(code), what);
}
inline Error io_error(std::string code, const std::string& what) {
  return Error(ErrorKind::Io, std::move(code), what);
}

}  // namespace chalk
