#pragma once

#include <stdexcept>
#include <string>

namespace cnp {

// Error classes map to CLI exit codes: input/validation -> 1,
// hypothesis violations -> 2, cap/truncation/window overflow -> 3.
enum class ErrorKind {
  BadInput,
  InconsistentFlags,
  Undecided,
  HypothesisViolation,
  TruncationExceeded,
  NotSimple,
  NullHomotopic,
  LevelMismatch,
  NotSeparating,
  CapExceeded,
  Unreachable,
  AnnularSpec,
  EmptyProjection,
  EmptyWitness,
  WindowOverflow,
  ConstantInfeasible,
  TooFewTypes,
  DisconnectedBall,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::HypothesisViolation:
        return 2;
      case ErrorKind::TruncationExceeded:
      case ErrorKind::CapExceeded:
      case ErrorKind::WindowOverflow:
        return 3;
      default:
        return 1;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace cnp
