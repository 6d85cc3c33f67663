#pragma once

#include <stdexcept>
#include <string>

namespace dtcell {

enum class ErrorKind {
  InvalidArgument,
  IndexOutOfRange,
  NonReducedWord,
  InapplicableMove,
  SingularMatrix,
  NotGaussianDecomposable,
  ZeroFunction,
  ZeroFaceValue,
  NonGenericPoint,
  FrozenVertex,
  UnknownVertex,
  NotSeedIsomorphism,
  SeedMismatch,
  NotGreedyWord,
  PlanVerificationFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace dtcell
