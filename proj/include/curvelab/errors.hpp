#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  VertexOutOfSupport,
  EdgeOutOfSupport,
  EmptyInterval,
  NotNormalized,
  NotConcave,
  NotPositive,
  NotComplete,
  NonPositiveArgument,
  DimensionNotAboveTwo,
  DimensionBelowFour,
  CdHypothesisFailed,
  HypothesisFailed,
  MeasureKindUnsupported,
  RadiusExceedsSupport,
  Disconnected,
  NotWeaklySymmetric,
  InconsistentSpec,
  ParameterOrderViolated,
  Unsupported,
  AssertionFailed,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace curvelab
