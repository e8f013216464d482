#pragma once

#include <stdexcept>
#include <string>

namespace ellm {

// Error categories, kept stable so callers (and the CLI exit-code mapping)
// can dispatch on them.
enum class Errc {
  BadHeader,             // coloring file: first line is not "zqcoloring v1"
  BadField,              // coloring file: malformed q= / seed= / colors= line
  LengthMismatch,        // coloring file: colors string length != q
  NonPrimeModulus,       // q fails the primality / oddness check
  BadColorChar,          // colors string contains a char other than 'R'/'B'
  DomainError,           // argument outside an operation's stated domain
  EquationViolated,      // exact-input identity does not hold
  GuardExceeded,         // enumeration guard tripped
  PrecisionInsufficient, // float input too coarse to classify stably
  PreconditionViolated,  // operation refused, e.g. coloring not red-free
  SearchExhausted,       // no parameter in the search space qualifies
  Internal,              // invariant the math says is unreachable
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ellm
