#include "ellm/error.hpp"

namespace ellm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadHeader: return "bad header";
    case Errc::BadField: return "bad field";
    case Errc::LengthMismatch: return "length mismatch";
    case Errc::NonPrimeModulus: return "non-prime modulus";
    case Errc::BadColorChar: return "bad color character";
    case Errc::DomainError: return "domain error";
    case Errc::EquationViolated: return "equation violated";
    case Errc::GuardExceeded: return "guard exceeded";
    case Errc::PrecisionInsufficient: return "precision insufficient";
    case Errc::PreconditionViolated: return "precondition violated";
    case Errc::SearchExhausted: return "search exhausted";
    case Errc::Internal: return "internal invariant violated";
  }
  return "unknown";
}

}  // namespace ellm
