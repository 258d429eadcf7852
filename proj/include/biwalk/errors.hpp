#pragma once

#include <stdexcept>
#include <string>

namespace biwalk {

// Every domain failure carries one of these codes so callers (and tests)
// can dispatch without parsing message text.
enum class Err {
  NonSymmetric,
  NonHermitian,
  NoConvergence,
  NotBipartite,
  DuplicateEdge,
  IsolatedVertex,
  BadSize,
  BadLabel,
  NotPrime,
  NotPrimePower,
  InvalidRotation,
  Disconnected,
  SpectralMismatch,
  NotUnit,
  DriftExceeded,
  MinusOnePersists,
  InternalInconsistency,
  NotIsomorphic,
  NoGamma,
  Mismatch,
  NotUniversal,
  Parse,
  Usage,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, Err code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace biwalk
