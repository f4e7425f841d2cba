#include "qsign/family.hpp"

#include <algorithm>
#include <utility>

#include "qsign/bessel.hpp"

namespace qsign {

namespace {

Enclosure rat(const Rational& r, long prec) { return Enclosure::from_rational(r, prec); }

Enclosure exp_term(const ExpTerm& t, long prec) {
  const Enclosure e = rat(t.e0, prec) + rat(t.e_pi, prec) * Enclosure::pi(prec);
  return Enclosure(t.coeff, prec) * exp(e);
}

Enclosure growth_part(long x, long prec) {
  // (2 pi^{5/4} / 5) e^{(2 pi/5) sqrt x} x^{1/2}
  const Enclosure pi = Enclosure::pi(prec);
  const Enclosure sx = sqrt(Enclosure(x, prec));
  const Enclosure coef = Enclosure(2, prec) * pow(pi, Rational(5, 4)) / Enclosure(5, prec);
  return coef * exp(Enclosure(2, prec) * pi / Enclosure(5, prec) * sx) * sx;
}

Enclosure bessel_arg(long x, long prec) {
  return Enclosure(4, prec) * Enclosure::pi(prec) / Enclosure(5, prec) * sqrt(Enclosure(x, prec));
}

long first_in_class(long n0, long residue) {
  long n = n0;
  while (((n - residue) % 5 + 5) % 5 != 0) ++n;
  return n;
}

}  // namespace

FamilyModel family_model(FamilyName name) {
  switch (name) {
    case FamilyName::A:
      // (2e^54 + e^{8pi} + 185) e^2
      return {name, "A", "A", -1, 2, 1, {{2, Rational(56), Rational(0)}, {1, Rational(2), Rational(8)}, {185, Rational(2), Rational(0)}}};
    case FamilyName::B:
      return {name, "B", "B", 1, 4, -2, {{2, Rational(56), Rational(0)}, {1, Rational(2), Rational(8)}, {185, Rational(2), Rational(0)}}};
    case FamilyName::D:
      // e^332 + e^272 + e^{8pi+2}
      return {name, "D", "D", 0, 2, 1, {{1, Rational(332), Rational(0)}, {1, Rational(272), Rational(0)}, {1, Rational(2), Rational(8)}}};
  }
  throw usage_error("unknown family");
}

FamilyModel family_model(std::string_view label) {
  if (label == "A") return family_model(FamilyName::A);
  if (label == "B") return family_model(FamilyName::B);
  if (label == "D") return family_model(FamilyName::D);
  throw usage_error("unknown family '" + std::string(label) + "' (expected A, B or D)");
}

Enclosure amplitude(const FamilyModel& fam, long prec) {
  const Enclosure pi = Enclosure::pi(prec);
  if (fam.name == FamilyName::D) {
    const Enclosure c = cos_pi(Rational(1, 5), prec) / (Enclosure(1, prec) + cos_pi(Rational(2, 5), prec));
    return -(Enclosure(2, prec) * pi / Enclosure(5, prec)) * c;
  }
  return -(Enclosure(4, prec) * pi / Enclosure(5, prec));
}

Enclosure main_term(const FamilyModel& fam, long n, long prec) {
  const long x = fam.x_of(n);
  if (x < 1 || n < 1) {
    throw usage_error("main_term for family " + fam.label + " needs n >= " + std::to_string(fam.min_index()));
  }
  const long wp = prec + 16;
  const Enclosure i1 = bessel_Im1(bessel_arg(x, wp), wp);
  const Enclosure v = amplitude(fam, wp) * cos_pi(fam.cos_turns(n), wp) / sqrt(Enclosure(x, wp)) * i1;
  return v.with_precision(prec);
}

Enclosure error_constant(const FamilyModel& fam, long prec) {
  Enclosure total(0, prec);
  for (const auto& t : fam.constant_terms) total += exp_term(t, prec);
  return total;
}

Enclosure error_bound(const FamilyModel& fam, long n, long prec) {
  if (n < 20) throw usage_error("error_bound needs n >= 20 (got " + std::to_string(n) + ")");
  const long wp = prec + 16;
  return (error_constant(fam, wp) + growth_part(fam.x_of(n), wp)).with_precision(prec);
}

DominanceResult dominance(const FamilyModel& fam, long n, long prec) {
  DominanceResult r;
  r.family = fam.label;
  r.n = n;
  r.precision_bits = prec;
  r.main = main_term(fam, n, prec);
  r.bound = error_bound(fam, n, prec);
  const Enclosure m = abs(r.main);
  if (r.bound.certainly_less(m)) {
    r.verdict = Verdict::True;
  } else if (m.certainly_less(r.bound)) {
    r.verdict = Verdict::False;
  } else {
    r.verdict = Verdict::Unknown;
  }
  return r;
}

DominanceResult dominance_escalating(const FamilyModel& fam, long n, long prec, long cap) {
  DominanceResult r = dominance(fam, n, prec);
  while (r.verdict == Verdict::Unknown && prec < cap) {
    prec = std::min(prec * 2, cap);
    r = dominance(fam, n, prec);
  }
  return r;
}

Enclosure main_lower_bound(const FamilyModel& fam, long residue, long x, long prec) {
  const Enclosure c = abs(amplitude(fam, prec) * cos_pi(fam.cos_turns(residue), prec));
  return c / sqrt(Enclosure(x, prec)) * wang_lower(bessel_arg(x, prec));
}

EventualCertificate eventual_dominance_certificate(const FamilyModel& fam, long n0, long residue, long prec) {
  if (n0 < 20) throw usage_error("eventual dominance needs n0 >= 20");
  if (residue < 0 || residue >= 5) throw usage_error("residue must lie in [0, 5)");
  EventualCertificate c;
  c.family = fam.label;
  c.residue = residue;
  c.n0 = n0;
  c.x0 = fam.x_of(n0);
  c.precision_bits = prec;
  c.cos_turns = fam.cos_turns(residue);

  const Enclosure pi = Enclosure::pi(prec);
  c.sqrt_x0 = sqrt(Enclosure(c.x0, prec));
  c.monotone_threshold = Enclosure(25, prec) / (Enclosure(4, prec) * pi);
  c.monotone_ok = !c.sqrt_x0.certainly_less(c.monotone_threshold) &&
                  mpfr_greaterequal_p(c.sqrt_x0.lo(), c.monotone_threshold.hi());
  if (!c.monotone_ok) {
    throw usage_error("monotonicity precondition sqrt(x0) >= 25/(4 pi) fails at n0 = " + std::to_string(n0));
  }

  const Enclosure main_sign = amplitude(fam, prec) * cos_pi(c.cos_turns, prec);
  c.main_sign = main_sign.positive() ? 1 : (main_sign.negative() ? -1 : 0);

  c.first_index = first_in_class(n0, residue);
  c.at_first_index = dominance(fam, c.first_index, prec);

  c.lower_bound_applicable = !bessel_arg(c.x0, prec).certainly_less(Enclosure(3, prec)) &&
                             mpfr_cmp_si(bessel_arg(c.x0, prec).lo(), 3) >= 0;
  c.lower_at_x0 = main_lower_bound(fam, residue, c.x0, prec);
  c.bound_at_x0 = error_bound(fam, n0, prec);
  c.lower_dominates = c.bound_at_x0.certainly_less(c.lower_at_x0);

  const bool all_true = c.main_sign != 0 && c.lower_bound_applicable && c.lower_dominates &&
                        c.at_first_index.verdict == Verdict::True;
  const bool any_false = c.at_first_index.verdict == Verdict::False || !c.lower_bound_applicable;
  c.verdict = all_true ? Verdict::True : (any_false ? Verdict::False : Verdict::Unknown);
  return c;
}

EventualCertificate eventual_dominance_certificate_escalating(const FamilyModel& fam, long n0, long residue,
                                                              long prec, long cap) {
  EventualCertificate c = eventual_dominance_certificate(fam, n0, residue, prec);
  while (c.verdict == Verdict::Unknown && prec < cap) {
    prec = std::min(prec * 2, cap);
    c = eventual_dominance_certificate(fam, n0, residue, prec);
  }
  return c;
}

std::vector<ConstantAudit> audit_constant_chain(long prec) {
  const Enclosure one(1, prec);
  const Enclosure pi = Enclosure::pi(prec);
  std::vector<ConstantAudit> out;
  auto push = [&](std::string name, Enclosure lhs, Enclosure rhs) {
    ConstantAudit a;
    a.name = std::move(name);
    a.holds = lhs.certainly_less(rhs);
    a.log_margin = log(rhs) - log(lhs);
    a.lhs = std::move(lhs);
    a.rhs = std::move(rhs);
    out.push_back(std::move(a));
  };

  // |1 - e^{2 pi i/5}| = 2 sin(pi/5)
  const Enclosure chord = Enclosure(2, prec) * sin_pi(Rational(1, 5), prec);
  push("e^50 * 2^5 * |1 - e^(2 pi i/5)|^-5 < e^54",
       exp(Enclosure(50, prec)) * Enclosure(32, prec) * pow_si(chord, -5), exp(Enclosure(54, prec)));

  const Enclosure u = exp(-pi / Enclosure(5, prec));
  push("exp(10 e^(-pi/5) / (1 - e^(-pi/5))^2) < e^25",
       exp(Enclosure(10, prec) * u / square(one - u)), exp(Enclosure(25, prec)));

  const Enclosure e1 = exp(-pi);
  const Enclosure e4 = exp(-Enclosure(4, prec) * pi);
  const Enclosure e5 = exp(-Enclosure(5, prec) * pi);
  const Enclosure s = e1 + e4;
  const Enclosure inner = s * e5 / square(one - e5) + (s - Enclosure(2, prec) * e5) / (one - s + e5);
  push("exp(5((e^-pi + e^-4pi) e^-5pi/(1 - e^-5pi)^2 + (e^-pi + e^-4pi - 2e^-5pi)/(1 - e^-pi - e^-4pi + e^-5pi))) < 2",
       exp(Enclosure(5, prec) * inner), Enclosure(2, prec));
  return out;
}

}  // namespace qsign
