// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace aligndof {

enum class Errc {
  NonPositiveDimension,
  DimensionMismatch,
  InvalidArgument,
  InfeasibleKappa,
  InsufficientNullSpace,
  RankDeficientPrecoder,
  InvalidKr,
  DirectionsBudgetExceeded,
  NoFeasiblePlan,
  DegenerateBound,
  PreconditionViolated,
  ConstructiveFailure,
  Overflow,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositiveDimension: return "NonPositiveDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InfeasibleKappa: return "InfeasibleKappa";
    case Errc::InsufficientNullSpace: return "InsufficientNullSpace";
    case Errc::RankDeficientPrecoder: return "RankDeficientPrecoder";
    case Errc::InvalidKr: return "InvalidKr";
    case Errc::DirectionsBudgetExceeded: return "DirectionsBudgetExceeded";
    case Errc::NoFeasiblePlan: return "NoFeasiblePlan";
    case Errc::DegenerateBound: return "DegenerateBound";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ConstructiveFailure: return "ConstructiveFailure";
    case Errc::Overflow: return "Overflow";
  }
  return "UnknownError";
}

/// All library errors carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace aligndof
