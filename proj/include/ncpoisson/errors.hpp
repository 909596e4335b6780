#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncp {

/// Failure categories raised by the library. The CLI prints the name of the
/// category next to the message, so the names double as stable error ids.
enum class Errc {
  DimensionMismatch,
  SingularMatrix,
  InvalidAlgebra,
  NotAssociative,
  NotLie,
  NotCoherent,
  NotQuasiRep,
  RepNotFull,
  DegreeUnsupported,
  DualNotPoisson,
  NotMatchedPair,
  BadSplit,
  NotFullBialgebra,
  NotSkew,
  NotSymmetric,
  NotPybe,
  ComponentInvalid,
  NotPrePoisson,
  NotPreLie,
  NotOOperator,
  PremiseViolated,
  ParseError,
  UnknownLaw,
};

inline constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::InvalidAlgebra: return "InvalidAlgebra";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotLie: return "NotLie";
    case Errc::NotCoherent: return "NotCoherent";
    case Errc::NotQuasiRep: return "NotQuasiRep";
    case Errc::RepNotFull: return "RepNotFull";
    case Errc::DegreeUnsupported: return "DegreeUnsupported";
    case Errc::DualNotPoisson: return "DualNotPoisson";
    case Errc::NotMatchedPair: return "NotMatchedPair";
    case Errc::BadSplit: return "BadSplit";
    case Errc::NotFullBialgebra: return "NotFullBialgebra";
    case Errc::NotSkew: return "NotSkew";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotPybe: return "NotPybe";
    case Errc::ComponentInvalid: return "ComponentInvalid";
    case Errc::NotPrePoisson: return "NotPrePoisson";
    case Errc::NotPreLie: return "NotPreLie";
    case Errc::NotOOperator: return "NotOOperator";
    case Errc::PremiseViolated: return "PremiseViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownLaw: return "UnknownLaw";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ncp
