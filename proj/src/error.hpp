#pragma once

#include <stdexcept>
#include <string>

namespace clusterhodge {

enum class ErrorCode {
  Parse,
  InvalidIndex,
  NotSkewSymmetric,
  Precondition,
  NotLouise,
  UnsupportedDimension,
  OpenCase,        // mathematically open (Case 1 with general weights, Case 2, ...)
  NotFiniteType,
  InconsistentRank,
  DualityUnavailable,
  Domain,
  InsufficientSamples,
  NonIntegral,
  HeldOutMismatch,
  Overflow,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace clusterhodge
