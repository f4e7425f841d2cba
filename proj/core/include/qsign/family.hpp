#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsign/enclosure.hpp"
#include "qsign/errors.hpp"
#include "qsign/rational.hpp"

namespace qsign {

enum class FamilyName { A, B, D };

/// coeff * exp(e0 + e_pi * pi)
struct ExpTerm {
  long coeff;
  Rational e0;
  Rational e_pi;
};

/// Main term M(n) = amplitude * cos(pi (a n + b)/5) * x^{-1/2} * I_{-1}((4 pi/5) sqrt x), x = n + shift.
/// Error bound E(n) = sum(constant_terms) + (2 pi^{5/4}/5) e^{(2 pi/5) sqrt x} x^{1/2}.
struct FamilyModel {
  FamilyName name;
  std::string label;
  std::string spec_name;
  long shift;
  long cos_a;
  long cos_b;
  std::vector<ExpTerm> constant_terms;

  long x_of(long n) const { return n + shift; }
  /// cos factor as exact turns of pi: cos(pi * t).
  Rational cos_turns(long n) const { return Rational(cos_a * n + cos_b, 5); }
  /// Smallest index in the asymptotic regime (x >= 1).
  long min_index() const { return 1 - shift > 1 ? 1 - shift : 1; }
};

FamilyModel family_model(FamilyName name);
/// "A", "B" or "D"; usage_error otherwise.
FamilyModel family_model(std::string_view label);

/// The constant prefactor, -(4 pi/5) for A and B, -(2 pi/5) cos(pi/5)/(1+cos(2 pi/5)) for D.
Enclosure amplitude(const FamilyModel& fam, long prec);
Enclosure main_term(const FamilyModel& fam, long n, long prec);
/// Constant part of the error bound.
Enclosure error_constant(const FamilyModel& fam, long prec);
/// Requires n >= 20.
Enclosure error_bound(const FamilyModel& fam, long n, long prec);

struct DominanceResult {
  std::string family;
  long n = 0;
  Enclosure main;
  Enclosure bound;
  Verdict verdict = Verdict::Unknown;
  long precision_bits = 0;
};

/// True iff |main| > bound is certified, False if |main| < bound is certified.
DominanceResult dominance(const FamilyModel& fam, long n, long prec);
/// Doubles precision from `prec` while the verdict is Unknown, up to `cap` bits.
DominanceResult dominance_escalating(const FamilyModel& fam, long n, long prec = default_precision_bits,
                                     long cap = max_precision_bits);

/// |amplitude cos| x^{-1/2} e^y / (10 sqrt y) with y = (4 pi/5) sqrt x: a lower bound for |M| once y >= 3.
Enclosure main_lower_bound(const FamilyModel& fam, long residue, long x, long prec);

/// Proof record that |M(n)| > E(n) for every n >= n0 with n = residue (mod 5).
/// Combines: certified dominance at the first class index >= n0; the lower bound W(x0) > E(x0);
/// and sqrt(x0) >= 25/(4 pi), which makes W/E nondecreasing for x >= x0.
struct EventualCertificate {
  std::string family;
  long residue = 0;
  long modulus = 5;
  long n0 = 0;
  long x0 = 0;
  long first_index = 0;
  DominanceResult at_first_index;
  Enclosure lower_at_x0;
  Enclosure bound_at_x0;
  Enclosure sqrt_x0;
  Enclosure monotone_threshold;
  bool lower_bound_applicable = false;
  bool lower_dominates = false;
  bool monotone_ok = false;
  Rational cos_turns;
  int main_sign = 0;
  Verdict verdict = Verdict::Unknown;
  long precision_bits = 0;
};

/// usage_error when n0 < 20 or the monotonicity precondition fails.
EventualCertificate eventual_dominance_certificate(const FamilyModel& fam, long n0, long residue, long prec);
EventualCertificate eventual_dominance_certificate_escalating(const FamilyModel& fam, long n0, long residue,
                                                              long prec = default_precision_bits,
                                                              long cap = max_precision_bits);

struct ConstantAudit {
  std::string name;
  Enclosure lhs;
  Enclosure rhs;
  bool holds = false;
  /// log(rhs) - log(lhs)
  Enclosure log_margin;
};

/// Numeric inequalities the error constants rely on.
std::vector<ConstantAudit> audit_constant_chain(long prec = default_precision_bits);

}  // namespace qsign
