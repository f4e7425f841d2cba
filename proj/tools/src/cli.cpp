#include "qsign_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsign/bessel.hpp"
#include "qsign/certificate.hpp"
#include "qsign/circle.hpp"
#include "qsign/errors.hpp"
#include "qsign/family.hpp"
#include "qsign/modular.hpp"
#include "qsign/product_spec.hpp"
#include "qsign/qseries.hpp"
#include "qsign/version.hpp"

namespace qsign::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::uint64_t default_seed = 20240611;
constexpr long min_precision = 64;
constexpr long max_precision = 8192;

struct Flags {
  std::string spec = "A";
  std::string target;
  long trunc = -1;
  long precision = -1;
  std::string format;
  std::string out;
  std::uint64_t seed = default_seed;
  unsigned workers = 0;
  std::string registry;

  // command specific
  bool audit = false;
  std::string family = "A";
  long n = 805;
  bool eventual = false;
  long n0 = -1;
  long residue = -1;
  std::string identity = "eta";
  long samples = 100;
  double tolerance = 1e-25;
  long repeat = 3;
  long order = 0;
};

struct Context {
  Flags flags;
  SpecRegistry registry = SpecRegistry::builtin();
  long precision = default_precision_bits;
  unsigned workers = 1;
  std::ostream* data = nullptr;
  std::ostream* diag = nullptr;
  std::unique_ptr<std::ofstream> file;
};

long resolve_precision(long flag) {
  long p = flag;
  if (p < 0) {
    if (const char* env = std::getenv("QSIGN_PRECISION"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      p = std::strtol(env, &end, 10);
      if (end == env || *end != '\0') {
        throw usage_error(std::string("QSIGN_PRECISION is not an integer: ") + env);
      }
    } else {
      p = default_precision_bits;
    }
  }
  if (p < min_precision || p > max_precision) {
    throw usage_error("precision must lie in [" + std::to_string(min_precision) + ", " +
                      std::to_string(max_precision) + "] bits, got " + std::to_string(p));
  }
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void load_registry(Context& ctx) {
  if (ctx.flags.registry.empty()) return;
  const SpecRegistry overlay = SpecRegistry::from_json(slurp(ctx.flags.registry));
  for (const auto& name : overlay.names()) ctx.registry.set(name, overlay.at(name));
}

/// Named spec or inline JSON literal.
std::pair<std::string, ProductSpec> resolve_spec(const Context& ctx) {
  const std::string& s = ctx.flags.spec;
  const auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && s[first] == '[') return {"inline", ProductSpec::from_json(s)};
  return {s, ctx.registry.at(s)};
}

std::string format_or(const Context& ctx, const char* fallback) {
  return ctx.flags.format.empty() ? std::string(fallback) : ctx.flags.format;
}

long trunc_or(const Context& ctx, long fallback) {
  const long t = ctx.flags.trunc < 0 ? fallback : ctx.flags.trunc;
  if (t < 0) throw usage_error("--trunc must be nonnegative");
  return t;
}

void open_output(Context& ctx, std::ostream& out) {
  ctx.data = &out;
  if (ctx.flags.out.empty()) return;
  ctx.file = std::make_unique<std::ofstream>(ctx.flags.out, std::ios::binary | std::ios::trunc);
  if (!*ctx.file) throw usage_error("cannot open " + ctx.flags.out + " for writing");
  ctx.data = ctx.file.get();
}

// ---------------------------------------------------------------- expand

int cmd_expand(Context& ctx) {
  const auto [name, spec] = resolve_spec(ctx);
  const long N = trunc_or(ctx, 100);
  const std::string fmt = format_or(ctx, "csv");
  std::ostream& os = *ctx.data;

  const QSeries s = expand_product(spec, static_cast<std::size_t>(N));
  const auto c = s.coeffs();
  if (fmt == "csv") {
    os << "index,coefficient\n";
    for (std::size_t i = 0; i < c.size(); ++i) os << i << ',' << c[i].get_str() << '\n';
  } else if (fmt == "json") {
    os << "{\"spec\":\"" << name << "\",\"digest\":\"" << spec_digest(spec) << "\",\"trunc\":" << N
       << ",\"coefficients\":[";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << '"' << c[i].get_str() << '"';
    os << "]}\n";
  } else {
    os << std::setw(8) << "n" << "  coefficient\n";
    for (std::size_t i = 0; i < c.size(); ++i) os << std::setw(8) << i << "  " << c[i].get_str() << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- delta

std::string pairs_to_string(const std::vector<std::pair<long, long>>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? ", (" : "(") + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
  }
  return s + "}";
}

int cmd_delta(Context& ctx) {
  const auto [name, spec] = resolve_spec(ctx);
  const std::string fmt = format_or(ctx, "table");
  const bool audit = ctx.flags.audit;
  const auto rows = delta_table(spec);
  const OmegaValue omega = omega_of(spec);
  const auto lpos = lpos_set(spec);
  std::ostream& os = *ctx.data;

  if (fmt == "csv") {
    os << "spec,aleph,l,delta_num,delta_den,in_Lpos";
    if (audit) os << ",literal_num,literal_den";
    os << '\n';
    for (const auto& r : rows) {
      os << name << ',' << r.aleph << ',' << r.l << ',' << r.delta.numerator().get_str() << ','
         << r.delta.denominator().get_str() << ',' << (r.in_lpos ? 1 : 0);
      if (audit) {
        os << ',' << r.delta_literal_variant.numerator().get_str() << ','
           << r.delta_literal_variant.denominator().get_str();
      }
      os << '\n';
    }
  } else if (fmt == "json") {
    ojson j;
    j["spec"] = name;
    j["level"] = spec.level();
    j["omega"] = omega.value.to_string();
    ojson lp = ojson::array();
    for (const auto& [a, l] : lpos) lp.push_back({a, l});
    j["lpos"] = std::move(lp);
    ojson cls = ojson::array();
    for (const auto& r : rows) {
      ojson o;
      o["aleph"] = r.aleph;
      o["l"] = r.l;
      o["delta"] = r.delta.to_string();
      o["in_lpos"] = r.in_lpos;
      if (audit) o["delta_literal"] = r.delta_literal_variant.to_string();
      cls.push_back(std::move(o));
    }
    j["classes"] = std::move(cls);
    os << j.dump(2) << '\n';
  } else {
    os << "spec " << name << "  level " << spec.level() << "  Omega " << omega.value.to_string()
       << "  Lpos " << pairs_to_string(lpos) << '\n';
    os << std::setw(6) << "aleph" << std::setw(6) << "l" << std::setw(12) << "Delta";
    if (audit) os << std::setw(12) << "literal";
    os << "  Lpos\n";
    for (const auto& r : rows) {
      os << std::setw(6) << r.aleph << std::setw(6) << r.l << std::setw(12) << r.delta.to_string();
      if (audit) os << std::setw(12) << r.delta_literal_variant.to_string();
      os << "  " << (r.in_lpos ? "yes" : "-") << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------- dominance

int cmd_dominance(Context& ctx) {
  const FamilyModel fam = family_model(ctx.flags.family);
  const long cap = std::max(ctx.precision, max_precision_bits);
  std::ostream& os = *ctx.data;

  if (ctx.flags.eventual) {
    if (ctx.flags.n0 < 0) throw usage_error("--eventual needs --n0");
    if (ctx.flags.residue < 0 || ctx.flags.residue > 4) throw usage_error("--eventual needs --residue in 0..4");
    const auto ec = eventual_dominance_certificate_escalating(fam, ctx.flags.n0, ctx.flags.residue,
                                                              ctx.precision, cap);
    ojson j;
    j["family"] = ec.family;
    j["residue"] = ec.residue;
    j["modulus"] = ec.modulus;
    j["n0"] = ec.n0;
    j["first_index"] = ec.first_index;
    j["x0"] = ec.x0;
    j["dominance_at_first_index"] = to_string(ec.at_first_index.verdict);
    j["lower_at_x0_lo"] = ec.lower_at_x0.lo_string();
    j["bound_at_x0_hi"] = ec.bound_at_x0.hi_string();
    j["monotone_ok"] = ec.monotone_ok;
    j["main_sign"] = ec.main_sign;
    j["verdict"] = to_string(ec.verdict);
    j["precision_bits"] = ec.precision_bits;
    os << j.dump(2) << '\n';
    return ec.verdict == Verdict::True ? 0 : 3;
  }

  const DominanceResult r = dominance_escalating(fam, ctx.flags.n, ctx.precision, cap);
  const std::string fmt = format_or(ctx, "json");
  if (fmt == "json") {
    ojson j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["main_lo"] = r.main.lo_string();
    j["main_hi"] = r.main.hi_string();
    j["bound_hi"] = r.bound.hi_string();
    j["verdict"] = to_string(r.verdict);
    j["precision_bits"] = r.precision_bits;
    os << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    os << "family,n,main_lo,main_hi,bound_hi,verdict,precision_bits\n"
       << r.family << ',' << r.n << ',' << r.main.lo_string() << ',' << r.main.hi_string() << ','
       << r.bound.hi_string() << ',' << to_string(r.verdict) << ',' << r.precision_bits << '\n';
  } else {
    os << "family " << r.family << "  n " << r.n << "\n  main  " << r.main.to_string() << "\n  bound <= "
       << r.bound.hi_string() << "\n  |main| > bound: " << to_string(r.verdict) << "  (" << r.precision_bits
       << " bits)\n";
  }
  return r.verdict == Verdict::True ? 0 : 3;
}

// ---------------------------------------------------------------- xcheck

ojson report_json(const IdentityReport& r) {
  ojson j;
  j["identity"] = r.identity;
  j["samples"] = r.samples;
  j["max_residual"] = r.max_residual;
  j["precision_bits"] = r.precision_bits;
  j["seed"] = r.seed;
  return j;
}

int cmd_xcheck(Context& ctx) {
  if (ctx.flags.samples < 1) throw usage_error("--samples must be positive");
  std::vector<std::string> ids;
  if (ctx.flags.identity == "all") {
    ids = identity_names();
  } else {
    const auto& known = identity_names();
    if (std::find(known.begin(), known.end(), ctx.flags.identity) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      throw usage_error("unknown identity '" + ctx.flags.identity + "' (known: " + list + ", all)");
    }
    ids.push_back(ctx.flags.identity);
  }

  bool ok = true;
  ojson all = ojson::array();
  for (const auto& id : ids) {
    *ctx.diag << "xcheck " << id << ": " << ctx.flags.samples << " samples\n";
    const IdentityReport r = run_identity_check(id, ctx.flags.samples, ctx.flags.seed, ctx.precision);
    ok = ok && r.max_residual < ctx.flags.tolerance;
    all.push_back(report_json(r));
  }
  const std::string fmt = format_or(ctx, "json");
  std::ostream& os = *ctx.data;
  if (fmt == "json") {
    os << (all.size() == 1 ? all.front() : all).dump(2) << '\n';
  } else if (fmt == "csv") {
    os << "identity,samples,max_residual,precision_bits,seed\n";
    for (const auto& j : all) {
      os << j["identity"].get<std::string>() << ',' << j["samples"] << ',' << j["max_residual"] << ','
         << j["precision_bits"] << ',' << j["seed"] << '\n';
    }
  } else {
    for (const auto& j : all) {
      os << std::left << std::setw(15) << j["identity"].get<std::string>() << std::right << std::setw(6)
         << j["samples"].get<long>() << "  max residual " << std::scientific << std::setprecision(3)
         << j["max_residual"].get<double>() << std::defaultfloat << '\n';
    }
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- certify

int cmd_certify(Context& ctx) {
  if (ctx.flags.target.empty()) throw usage_error("certify needs --target (A5n, B5n or D5n1)");
  const Target& target = target_by_name(ctx.flags.target);
  CertifyOptions opts;
  opts.precision = ctx.precision;
  opts.precision_cap = std::max(ctx.precision, max_precision_bits);
  opts.seed = ctx.flags.seed;
  opts.workers = ctx.workers;
  opts.registry = &ctx.registry;

  *ctx.diag << "certify " << target.claim << ": exact range to index "
            << target.modulus * target.last_n + target.residue << ", n0 = " << target.n0 << '\n';
  const Certificate cert = certify(target, opts);
  *ctx.data << cert.to_json();

  switch (cert.outcome) {
    case CertOutcome::Certified:
      *ctx.diag << target.id << ": certified\n";
      break;
    case CertOutcome::SignViolation: {
      *ctx.diag << "error: " << target.claim << " fails at index " << cert.exceptions.front();
      if (cert.exceptions.size() > 1) *ctx.diag << " (" << cert.exceptions.size() << " violations)";
      *ctx.diag << "; spec '" << cert.spec_name << "' digest " << cert.spec_digest << '\n';
      break;
    }
    case CertOutcome::DominanceUnknown:
      *ctx.diag << "error: " << target.claim << ": asymptotic part not established (dominance "
                << to_string(cert.asymptotic.verdict) << ", Omega "
                << (cert.omega_matches ? "matches" : "does not match") << " the model, "
                << cert.asymptotic.precision_bits << " bits)\n";
      break;
  }
  return exit_code(cert.outcome);
}

// ---------------------------------------------------------------- verify / scan

std::string sign_text(int s) { return s < 0 ? "<0" : (s > 0 ? ">0" : "=0"); }

std::string residue_text(const std::string& name, long residue, long modulus) {
  return name + "(" + std::to_string(modulus) + "n" + (residue ? "+" + std::to_string(residue) : "") + ")";
}

void write_tables(Context& ctx, const std::vector<SignTable>& tables, bool with_cutoff) {
  const std::string fmt = format_or(ctx, "table");
  std::ostream& os = *ctx.data;
  if (fmt == "json") {
    ojson arr = ojson::array();
    for (const auto& t : tables) {
      ojson j;
      j["spec"] = t.spec_name;
      j["modulus"] = t.modulus;
      ojson rs = ojson::array();
      for (const auto& r : t.residues) {
        ojson o;
        o["residue"] = r.residue;
        o["sign"] = r.expected_sign;
        o["lo"] = r.lo;
        o["hi"] = r.hi;
        o["holds"] = r.holds;
        o["exceptions"] = r.exceptions;
        rs.push_back(std::move(o));
      }
      j["residues"] = std::move(rs);
      j["exceptions"] = t.exceptions;
      if (with_cutoff) j["cutoff"] = t.cutoff;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
  } else if (fmt == "csv") {
    os << "spec,residue,sign,lo,hi,holds,exceptions\n";
    for (const auto& t : tables) {
      for (const auto& r : t.residues) {
        std::string ex;
        for (long e : r.exceptions) ex += (ex.empty() ? "" : " ") + std::to_string(e);
        os << t.spec_name << ',' << r.residue << ',' << r.expected_sign << ',' << r.lo << ',' << r.hi << ','
           << (r.holds ? 1 : 0) << ',' << ex << '\n';
      }
    }
  } else {
    for (const auto& t : tables) {
      os << "spec " << t.spec_name;
      if (with_cutoff) os << "  cutoff " << t.cutoff;
      os << '\n';
      for (const auto& r : t.residues) {
        os << "  " << std::left << std::setw(10) << residue_text(t.spec_name, r.residue, t.modulus) << std::right
           << sign_text(r.expected_sign) << "  [" << r.lo << ", " << r.hi << "]  "
           << (r.holds ? "holds" : "FAILS");
        if (!r.exceptions.empty()) {
          os << "  exceptions:";
          for (long e : r.exceptions) os << ' ' << e;
        }
        os << '\n';
      }
    }
  }
}

int cmd_verify(Context& ctx) {
  const long N = trunc_or(ctx, 800);
  const auto tables = verify_known_theorems(N, ctx.workers, &ctx.registry);
  write_tables(ctx, tables, false);
  bool ok = true;
  for (const auto& t : tables) {
    for (long e : t.exceptions) {
      *ctx.diag << "error: sign pattern of " << t.spec_name << " fails at index " << e << '\n';
      ok = false;
    }
  }
  return ok ? 0 : 2;
}

int cmd_scan(Context& ctx) {
  const long N = trunc_or(ctx, 2000);
  write_tables(ctx, richmond_szekeres_scan(N, ctx.workers), true);
  return 0;
}

// ---------------------------------------------------------------- audit

int cmd_audit(Context& ctx) {
  const auto rows = audit_constant_chain(ctx.precision);
  const std::string fmt = format_or(ctx, "table");
  std::ostream& os = *ctx.data;
  bool ok = true;
  if (fmt == "json") {
    ojson arr = ojson::array();
    for (const auto& r : rows) {
      ojson j;
      j["name"] = r.name;
      j["lhs_hi"] = r.lhs.hi_string();
      j["rhs_lo"] = r.rhs.lo_string();
      j["log_margin_lo"] = r.log_margin.lo_string();
      j["holds"] = r.holds;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      os << r.name << "\n  lhs <= " << r.lhs.hi_string() << "\n  rhs >= " << r.rhs.lo_string()
         << "\n  log margin >= " << r.log_margin.lo_string(8) << "  " << (r.holds ? "holds" : "FAILS") << '\n';
    }
  }
  for (const auto& r : rows) ok = ok && r.holds;
  return ok ? 0 : 3;
}

// ---------------------------------------------------------------- numeric

int cmd_numeric(Context& ctx) {
  const auto [name, spec] = resolve_spec(ctx);
  const long n = ctx.flags.n;
  if (n < 0) throw usage_error("--n must be nonnegative");
  const long order = ctx.flags.order > 0 ? ctx.flags.order : default_farey_order(n);
  const QSeries s = expand_product(spec, static_cast<std::size_t>(n));
  const NumericCoefficient nc = numeric_coefficient(spec, n, order);
  const double exact = s[static_cast<std::size_t>(n)].get_d();
  const double approx = nc.value.mid_double();
  const double rel = std::abs(approx - exact) / std::max(1.0, std::abs(exact));

  ojson j;
  j["spec"] = name;
  j["n"] = n;
  j["order"] = nc.order;
  j["exact"] = s[static_cast<std::size_t>(n)].get_str();
  j["numeric"] = approx;
  j["imag"] = nc.imag;
  j["rel_error"] = rel;
  j["evaluations"] = nc.evaluations;
  *ctx.data << j.dump(2) << '\n';
  return rel <= 1e-6 ? 0 : 1;
}

// ---------------------------------------------------------------- bench

int cmd_bench(Context& ctx) {
  const auto [name, spec] = resolve_spec(ctx);
  const long N = trunc_or(ctx, 19501);
  if (ctx.flags.repeat < 1) throw usage_error("--repeat must be positive");
  std::vector<double> ms;
  for (long r = 0; r < ctx.flags.repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const QSeries s = expand_product(spec, static_cast<std::size_t>(N));
    const auto t1 = std::chrono::steady_clock::now();
    ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    *ctx.diag << "run " << r + 1 << ": " << ms.back() << " ms\n";
  }
  const double best = *std::min_element(ms.begin(), ms.end());
  double mean = 0;
  for (double v : ms) mean += v;
  mean /= static_cast<double>(ms.size());

  const std::string fmt = format_or(ctx, "table");
  if (fmt == "json") {
    ojson j;
    j["spec"] = name;
    j["trunc"] = N;
    j["repeat"] = ctx.flags.repeat;
    j["min_ms"] = best;
    j["mean_ms"] = mean;
    *ctx.data << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    *ctx.data << "spec,trunc,repeat,min_ms,mean_ms\n"
              << name << ',' << N << ',' << ctx.flags.repeat << ',' << best << ',' << mean << '\n';
  } else {
    *ctx.data << "expand " << name << " to " << N << ": min " << best << " ms, mean " << mean << " ms over "
              << ctx.flags.repeat << " runs\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx;
  Flags& f = ctx.flags;

  CLI::App app{"Sign patterns of Rogers-Ramanujan continued fraction powers: expansion, modular tables, "
               "dominance and certificates.",
               "qsign"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string);

  app.add_option("--spec", f.spec, "Registered spec name or inline JSON factor list")->capture_default_str();
  app.add_option("--target", f.target, "Certification target: A5n, B5n, D5n1");
  app.add_option("--trunc", f.trunc, "Truncation order N")->check(CLI::NonNegativeNumber);
  app.add_option("--precision", f.precision, "Working precision in bits (env QSIGN_PRECISION)");
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", f.out, "Write data to this file instead of stdout");
  app.add_option("--seed", f.seed, "Seed for random sampling")->capture_default_str();
  app.add_option("--workers", f.workers, "Worker threads (default: available parallelism)");
  app.add_option("--registry", f.registry, "JSON file of spec definitions overriding the built-ins");

  auto* expand = app.add_subcommand("expand", "Exact coefficients of a product spec");
  auto* delta = app.add_subcommand("delta", "Delta(aleph,l) table, Omega and the positive classes");
  delta->add_flag("--audit", f.audit, "Also print the literal-variant Delta");
  auto* dom = app.add_subcommand("dominance", "Certified |main| > error check");
  dom->add_option("--family", f.family, "A, B or D")->check(CLI::IsMember({"A", "B", "D"}));
  dom->add_option("--n", f.n, "Coefficient index");
  dom->add_flag("--eventual", f.eventual, "Monotone eventual certificate for a residue class");
  dom->add_option("--n0", f.n0, "Start index of the eventual claim");
  dom->add_option("--residue", f.residue, "Residue class mod 5");
  auto* xcheck = app.add_subcommand("xcheck", "Random-sample check of the transformation identities");
  xcheck->add_option("--identity", f.identity, "eta, theta, quasi, psi, product, factorization, mobius or all");
  xcheck->add_option("--samples", f.samples, "Number of samples");
  xcheck->add_option("--tolerance", f.tolerance, "Residual threshold for a zero exit status");
  auto* cert = app.add_subcommand("certify", "Exact finite check plus eventual dominance");
  auto* verify = app.add_subcommand("verify", "Known sign patterns of A, B, C, D");
  auto* scan = app.add_subcommand("scan", "Empirical sign pattern cutoffs of 1/R and R");
  auto* audit = app.add_subcommand("audit", "Numeric inequalities behind the error constants");
  auto* numeric = app.add_subcommand("numeric", "Circle-method quadrature of one coefficient");
  numeric->add_option("--n", f.n, "Coefficient index");
  numeric->add_option("--order", f.order, "Farey order (default chosen from n)");
  auto* bench = app.add_subcommand("bench", "Time the exact series engine");
  bench->add_option("--repeat", f.repeat, "Number of timed runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    ctx.diag = &err;
    ctx.precision = resolve_precision(f.precision);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    ctx.workers = f.workers == 0 ? hw : f.workers;
    load_registry(ctx);
    open_output(ctx, out);

    int rc = 0;
    if (expand->parsed()) rc = cmd_expand(ctx);
    else if (delta->parsed()) rc = cmd_delta(ctx);
    else if (dom->parsed()) rc = cmd_dominance(ctx);
    else if (xcheck->parsed()) rc = cmd_xcheck(ctx);
    else if (cert->parsed()) rc = cmd_certify(ctx);
    else if (verify->parsed()) rc = cmd_verify(ctx);
    else if (scan->parsed()) rc = cmd_scan(ctx);
    else if (audit->parsed()) rc = cmd_audit(ctx);
    else if (numeric->parsed()) rc = cmd_numeric(ctx);
    else if (bench->parsed()) rc = cmd_bench(ctx);
    ctx.data->flush();
    return rc;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qsign::cli
