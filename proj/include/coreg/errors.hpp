// Error taxonomy shared by all modules.

#pragma once

#include <stdexcept>
#include <string>

namespace coreg {

enum class Errc {
  ConductorMismatch,
  ConductorOverflow,
  DivisionByZero,
  NonInvertibleGenerator,
  OrderCapExceeded,
  EigenvalueOutsideField,
  UnrecognizedGroup,
  UnclassifiableGroup,
  NotClosed,
  InvalidConfiguration,
  NotLogCYShape,
  NotACorner,
  NotAnAction,
  WrongDimension,
  DimensionMismatch,
  InvalidQuadricData,
  NoFixedPoint,
  InvalidDP7Data,
  InvalidDP6Data,
  PresetSelfTestFailed,
  InvalidInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::ConductorOverflow: return "ConductorOverflow";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonInvertibleGenerator: return "NonInvertibleGenerator";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::EigenvalueOutsideField: return "EigenvalueOutsideField";
    case Errc::UnrecognizedGroup: return "UnrecognizedGroup";
    case Errc::UnclassifiableGroup: return "UnclassifiableGroup";
    case Errc::NotClosed: return "NotClosed";
    case Errc::InvalidConfiguration: return "InvalidConfiguration";
    case Errc::NotLogCYShape: return "NotLogCYShape";
    case Errc::NotACorner: return "NotACorner";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidQuadricData: return "InvalidQuadricData";
    case Errc::NoFixedPoint: return "NoFixedPoint";
    case Errc::InvalidDP7Data: return "InvalidDP7Data";
    case Errc::InvalidDP6Data: return "InvalidDP6Data";
    case Errc::PresetSelfTestFailed: return "PresetSelfTestFailed";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace coreg
