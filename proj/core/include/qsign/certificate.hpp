#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsign/family.hpp"
#include "qsign/product_spec.hpp"
#include "qsign/rational.hpp"

namespace qsign {

inline constexpr int certificate_schema_version = 1;

/// Sign claim "X(5n + residue) has sign `expected_sign` for every n >= first_n".
struct Target {
  std::string id;     // "A5n", "B5n", "D5n1"
  std::string claim;  // "A(5n)<0", ...
  std::string spec_name;
  FamilyName family;
  long residue;
  long modulus;
  int expected_sign;
  long first_n;  // exact check over n in [first_n, last_n]
  long last_n;
  long n0;  // index-level start of the asymptotic claim
  Rational expected_omega;
};

const std::vector<Target>& targets();
/// Accepts the id ("A5n") or the claim text ("A(5n)<0"); usage_error otherwise.
const Target& target_by_name(std::string_view name);

struct CertifyOptions {
  long precision = default_precision_bits;
  long precision_cap = max_precision_bits;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  const SpecRegistry* registry = nullptr;  // builtin when null
};

enum class CertOutcome { Certified, SignViolation, DominanceUnknown };

struct Certificate {
  std::string target;
  std::string claim;
  std::string spec_name;
  std::string spec_digest;
  long lo = 0, hi = 0;  // index range of the exact check
  long trunc = 0;
  bool all_ok = false;
  std::vector<long> exceptions;
  std::string finite_note;
  EventualCertificate asymptotic;
  Rational omega;
  bool omega_matches = false;
  std::vector<std::pair<long, long>> lpos;
  std::vector<Rational> lpos_delta;
  std::string version;
  std::uint64_t seed = 0;
  std::string hash;
  CertOutcome outcome = CertOutcome::DominanceUnknown;

  bool valid() const { return outcome == CertOutcome::Certified; }
  /// Canonical JSON (fixed key order, two-space indent, trailing newline).
  std::string to_json() const;
};

/// 0 certified, 2 sign violation, 3 asymptotic part not established.
int exit_code(CertOutcome outcome);
const char* to_string(CertOutcome outcome);

/// Exact finite check plus eventual dominance. Never throws on a failed claim; the outcome says why.
Certificate certify(const Target& target, const CertifyOptions& opts = {});

struct ResidueCheck {
  long residue;
  int expected_sign;
  long lo;
  long hi;
  bool holds;
  std::vector<long> exceptions;
};

struct SignTable {
  std::string spec_name;
  long modulus = 5;
  std::vector<ResidueCheck> residues;
  std::vector<long> exceptions;  // union over residues, sorted
  long cutoff = 0;               // one past the largest exception (0 if none)
  bool all_hold() const { return exceptions.empty(); }
};

/// Sign patterns for A, B, C, D over indices 1..N (C and D residue-0 patterns from index 5).
std::vector<SignTable> verify_known_theorems(long N = 800, unsigned workers = 1,
                                             const SpecRegistry* registry = nullptr);

/// Eventual patterns of c = 1/R and d = R over 0..N with the empirical cutoff and exceptions.
std::vector<SignTable> richmond_szekeres_scan(long N = 2000, unsigned workers = 1);

}  // namespace qsign
