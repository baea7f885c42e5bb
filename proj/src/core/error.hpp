#pragma once

#include <stdexcept>
#include <string>

namespace ltc {

// Error categories shared by the library, the C API and the CLI exit codes.
enum class Status {
  Ok = 0,
  Usage = 1,
  Parse = 2,
  Validation = 3,
  Invariant = 4,
  Size = 5,
  Io = 6,
  Internal = 7,
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Usage: return "usage-error";
    case Status::Parse: return "parse-error";
    case Status::Validation: return "validation-error";
    case Status::Invariant: return "invariant-error";
    case Status::Size: return "size-error";
    case Status::Io: return "io-error";
    case Status::Internal: return "internal-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(Status status, std::string message)
      : std::runtime_error(std::move(message)), status_(status) {}

  Status status() const noexcept { return status_; }

private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

}  // namespace ltc
