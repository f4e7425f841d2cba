#pragma once

#include <stdexcept>
#include <string>

namespace qsign {

/// Caller violated a documented precondition (bad flag, mismatched truncation, range out of bounds).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematical domain violation (non-coprime pair, non-unit constant term, vanishing factor).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Outcome of a certified comparison. Unknown means the enclosures overlap at the working precision.
enum class Verdict { False, True, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace qsign
