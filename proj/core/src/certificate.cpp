#include "qsign/certificate.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "json.hpp"

#include "qsign/errors.hpp"
#include "qsign/hash.hpp"
#include "qsign/modular.hpp"
#include "qsign/version.hpp"

namespace qsign {

namespace {

using ojson = nlohmann::ordered_json;

// Runs fn(i) for i in [0, n) on up to `workers` threads; results land in caller-owned slots.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < w; ++t) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    }));
  }
  for (auto& f : pool) f.get();
}

struct Pattern {
  long residue;
  int sign;
  long start;
};

ResidueCheck check_residue(const QSeries& s, const Pattern& p, long modulus, long N) {
  ResidueCheck rc{p.residue, p.sign, p.start, N, true, {}};
  for (const auto& is : slice_signs(s, p.residue, modulus, static_cast<std::size_t>(p.start), static_cast<std::size_t>(N))) {
    if (static_cast<int>(is.sign) != p.sign) rc.exceptions.push_back(static_cast<long>(is.index));
  }
  rc.holds = rc.exceptions.empty();
  return rc;
}

SignTable make_table(const std::string& name, const QSeries& s, const std::vector<Pattern>& patterns, long N) {
  SignTable t;
  t.spec_name = name;
  for (const auto& p : patterns) {
    t.residues.push_back(check_residue(s, p, t.modulus, N));
    const auto& ex = t.residues.back().exceptions;
    t.exceptions.insert(t.exceptions.end(), ex.begin(), ex.end());
  }
  std::sort(t.exceptions.begin(), t.exceptions.end());
  t.cutoff = t.exceptions.empty() ? 0 : t.exceptions.back() + 1;
  return t;
}

std::string rational_string(const Rational& r) { return r.to_string(); }

}  // namespace

const std::vector<Target>& targets() {
  static const std::vector<Target> all{
      {"A5n", "A(5n)<0", "A", FamilyName::A, 0, 5, -1, 1, 200, 801, Rational(-24)},
      {"B5n", "B(5n)<0", "B", FamilyName::B, 0, 5, -1, 1, 200, 801, Rational(24)},
      {"D5n1", "D(5n+1)>0", "D", FamilyName::D, 1, 5, 1, 0, 3900, 19001, Rational(0)},
  };
  return all;
}

const Target& target_by_name(std::string_view name) {
  for (const auto& t : targets()) {
    if (t.id == name || t.claim == name) return t;
  }
  std::string list;
  for (const auto& t : targets()) list += (list.empty() ? "" : ", ") + t.id;
  throw usage_error("unknown target '" + std::string(name) + "' (expected one of: " + list + ")");
}

int exit_code(CertOutcome outcome) {
  switch (outcome) {
    case CertOutcome::Certified: return 0;
    case CertOutcome::SignViolation: return 2;
    case CertOutcome::DominanceUnknown: return 3;
  }
  return 3;
}

const char* to_string(CertOutcome outcome) {
  switch (outcome) {
    case CertOutcome::Certified: return "certified";
    case CertOutcome::SignViolation: return "sign_violation";
    case CertOutcome::DominanceUnknown: return "dominance_unknown";
  }
  return "dominance_unknown";
}

std::string Certificate::to_json() const {
  ojson j;
  j["schema_version"] = certificate_schema_version;
  j["target"] = target;
  j["spec"] = ojson{{"name", spec_name}, {"digest", spec_digest}};

  ojson fin;
  fin["lo"] = lo;
  fin["hi"] = hi;
  fin["trunc"] = trunc;
  fin["all_ok"] = all_ok;
  fin["exceptions"] = exceptions;
  if (!finite_note.empty()) fin["note"] = finite_note;
  j["finite"] = fin;

  const auto& a = asymptotic;
  ojson as;
  as["n0"] = a.n0;
  as["precision_bits"] = a.precision_bits;
  as["main_lo"] = a.precision_bits > 0 ? abs(a.at_first_index.main).lo_string() : "";
  as["bound_hi"] = a.precision_bits > 0 ? a.at_first_index.bound.hi_string() : "";
  as["monotone_ok"] = a.monotone_ok;
  as["first_index"] = a.first_index;
  as["residue"] = a.residue;
  as["modulus"] = a.modulus;
  as["main_sign"] = a.main_sign;
  as["cos_turns_of_pi"] = rational_string(a.cos_turns);
  as["dominance_at_first_index"] = to_string(a.at_first_index.verdict);
  as["x0"] = a.x0;
  as["lower_at_x0_lo"] = a.precision_bits > 0 ? a.lower_at_x0.lo_string() : "";
  as["bound_at_x0_hi"] = a.precision_bits > 0 ? a.bound_at_x0.hi_string() : "";
  as["sqrt_x0_lo"] = a.precision_bits > 0 ? a.sqrt_x0.lo_string() : "";
  as["monotone_threshold_hi"] = a.precision_bits > 0 ? a.monotone_threshold.hi_string() : "";
  as["verdict"] = to_string(a.verdict);
  as["omega"] = rational_string(omega);
  as["omega_matches_model"] = omega_matches;
  ojson lp = ojson::array();
  for (std::size_t i = 0; i < lpos.size(); ++i) {
    lp.push_back(ojson{{"aleph", lpos[i].first}, {"l", lpos[i].second}, {"delta", rational_string(lpos_delta[i])}});
  }
  as["lpos"] = lp;
  j["asymptotic"] = as;

  j["meta"] = ojson{{"version", version},
                    {"seed", seed},
                    {"claim", claim},
                    {"outcome", to_string(outcome)},
                    {"hash", hash}};
  return j.dump(2) + "\n";
}

Certificate certify(const Target& target, const CertifyOptions& opts) {
  const SpecRegistry& reg = opts.registry ? *opts.registry : SpecRegistry::builtin();
  const ProductSpec& spec = reg.at(target.spec_name);
  const FamilyModel fam = family_model(target.family);

  Certificate c;
  c.target = target.id;
  c.claim = target.claim;
  c.spec_name = target.spec_name;
  c.spec_digest = spec_digest(spec);
  c.lo = target.modulus * target.first_n + target.residue;
  c.hi = target.modulus * target.last_n + target.residue;
  c.trunc = c.hi;
  c.version = version_string;
  c.seed = opts.seed;
  c.finite_note = "exact range ends at index " + std::to_string(c.hi) + ", past n0 = " + std::to_string(target.n0);

  auto finite = [&] {
    const QSeries s = expand_product(spec, static_cast<std::size_t>(c.trunc));
    std::vector<long> ex;
    for (const auto& is : slice_signs(s, target.residue, target.modulus, static_cast<std::size_t>(c.lo),
                                      static_cast<std::size_t>(c.hi))) {
      if (static_cast<int>(is.sign) != target.expected_sign) ex.push_back(static_cast<long>(is.index));
    }
    return ex;
  };
  auto asymptotic = [&] {
    try {
      return eventual_dominance_certificate_escalating(fam, target.n0, target.residue, opts.precision,
                                                       opts.precision_cap);
    } catch (const usage_error&) {
      EventualCertificate e;
      e.family = fam.label;
      e.n0 = target.n0;
      e.residue = target.residue;
      e.verdict = Verdict::False;
      return e;
    }
  };

  if (opts.workers >= 2) {
    auto fut = std::async(std::launch::async, asymptotic);
    c.exceptions = finite();
    c.asymptotic = fut.get();
  } else {
    c.exceptions = finite();
    c.asymptotic = asymptotic();
  }
  c.all_ok = c.exceptions.empty();

  c.omega = omega_of(spec).value;
  c.omega_matches = c.omega == target.expected_omega;
  for (const auto& row : delta_table(spec)) {
    if (!row.in_lpos) continue;
    c.lpos.emplace_back(row.aleph, row.l);
    c.lpos_delta.push_back(row.delta);
  }

  if (!c.all_ok) {
    c.outcome = CertOutcome::SignViolation;
  } else if (c.asymptotic.verdict == Verdict::True && c.omega_matches &&
             c.asymptotic.main_sign == target.expected_sign && c.hi >= target.n0) {
    c.outcome = CertOutcome::Certified;
  } else {
    c.outcome = CertOutcome::DominanceUnknown;
  }

  c.hash.clear();
  c.hash = sha256_hex(c.to_json());
  return c;
}

std::vector<SignTable> verify_known_theorems(long N, unsigned workers, const SpecRegistry* registry) {
  if (N < 5) throw usage_error("verify_known_theorems needs N >= 5");
  const SpecRegistry& reg = registry ? *registry : SpecRegistry::builtin();
  const std::vector<std::pair<std::string, std::vector<Pattern>>> plan{
      {"A", {{1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {4, -1, 4}}},
      {"B", {{1, -1, 1}, {2, 1, 2}, {3, -1, 3}, {4, 1, 4}}},
      {"C", {{1, -1, 1}, {2, 1, 2}, {3, -1, 3}, {4, 1, 4}, {0, -1, 5}}},
      {"D", {{2, 1, 2}, {3, 1, 3}, {4, -1, 4}, {0, -1, 5}}},
  };
  std::vector<SignTable> out(plan.size());
  parallel_for(plan.size(), workers, [&](std::size_t i) {
    const QSeries s = expand_product(reg.at(plan[i].first), static_cast<std::size_t>(N));
    out[i] = make_table(plan[i].first, s, plan[i].second, N);
  });
  return out;
}

std::vector<SignTable> richmond_szekeres_scan(long N, unsigned workers) {
  if (N < 5) throw usage_error("richmond_szekeres_scan needs N >= 5");
  const std::vector<std::pair<std::string, std::vector<Pattern>>> plan{
      {"c", {{0, 1, 0}, {1, 1, 1}, {2, -1, 2}, {3, -1, 3}, {4, -1, 4}}},
      {"d", {{0, 1, 0}, {1, -1, 1}, {2, 1, 2}, {3, -1, 3}, {4, -1, 4}}},
  };
  std::vector<SignTable> out(plan.size());
  parallel_for(plan.size(), workers, [&](std::size_t i) {
    const QSeries s = expand_product(SpecRegistry::builtin().at(plan[i].first), static_cast<std::size_t>(N));
    out[i] = make_table(plan[i].first, s, plan[i].second, N);
  });
  return out;
}

}  // namespace qsign
