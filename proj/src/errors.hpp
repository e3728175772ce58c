#pragma once

#include <stdexcept>
#include <string>

namespace detrep {

enum class Err {
  Syntax,
  Inhomogeneous,
  NotZeroDimensional,
  NotSmooth,
  DegreeTooSmall,
  PointNotOnCurve,
  FormVanishesOnCurve,
  WrongDegree,
  EffectiveDivisor,
  InternalRankError,
  DivisionFailure,
  NotThetaCharacteristic,
  NotProportional,
  ZeroDeterminant,
  NotDivisible,
  BadPresentation,
  DegenerateAdjugate,
  NotAnAutomorphism,
  UnknownName,
  FileFormat,
  Internal,
};

// payload: h0 for EffectiveDivisor, input position for Syntax, 0 otherwise.
class Error : public std::runtime_error {
public:
  Error(Err code, std::string msg, long payload = 0)
      : std::runtime_error(std::move(msg)), code_(code), payload_(payload) {}
  Err code() const { return code_; }
  long payload() const { return payload_; }

private:
  Err code_;
  long payload_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg, long payload = 0) {
  throw Error(code, msg, payload);
}

}  // namespace detrep
