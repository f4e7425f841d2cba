#include "qsign/product_spec.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "qsign/errors.hpp"
#include "qsign/hash.hpp"

namespace qsign {

namespace {

std::vector<PsiFactor> parse_factor_array(const nlohmann::json& j) {
  if (!j.is_array()) throw usage_error("spec literal must be a JSON array");
  std::vector<PsiFactor> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("r") || !item.contains("m") || !item.contains("delta")) {
      throw usage_error("spec factor must be an object with integer fields r, m, delta");
    }
    const auto& r = item.at("r");
    const auto& m = item.at("m");
    const auto& d = item.at("delta");
    if (!r.is_number_integer() || !m.is_number_integer() || !d.is_number_integer()) {
      throw usage_error("spec factor fields r, m, delta must be integers");
    }
    out.push_back({r.get<long>(), m.get<long>(), d.get<long>()});
  }
  return out;
}

}  // namespace

ProductSpec::ProductSpec(std::vector<PsiFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw usage_error("ProductSpec needs at least one factor");
  for (const auto& f : factors_) {
    if (f.m < 2 || f.r < 1 || f.r >= f.m) {
      throw usage_error("ProductSpec factor needs 1 <= r < m (got r=" + std::to_string(f.r) +
                        ", m=" + std::to_string(f.m) + ")");
    }
    if (f.delta == 0) throw usage_error("ProductSpec factor exponent delta must be nonzero");
    level_ = std::lcm(level_, f.m);
  }
}

ProductSpec ProductSpec::negated() const {
  std::vector<PsiFactor> neg = factors_;
  for (auto& f : neg) f.delta = -f.delta;
  return ProductSpec(std::move(neg));
}

std::vector<PochhammerFactor> ProductSpec::pochhammer_factors() const {
  std::vector<PochhammerFactor> out;
  out.reserve(2 * factors_.size());
  for (const auto& f : factors_) {
    const int e = static_cast<int>(f.delta);
    out.push_back({static_cast<std::size_t>(f.r), static_cast<std::size_t>(f.m), e});
    out.push_back({static_cast<std::size_t>(f.m - f.r), static_cast<std::size_t>(f.m), e});
  }
  return out;
}

std::string ProductSpec::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : factors_) {
    nlohmann::ordered_json o;
    o["r"] = f.r;
    o["m"] = f.m;
    o["delta"] = f.delta;
    arr.push_back(std::move(o));
  }
  return arr.dump();
}

ProductSpec ProductSpec::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw usage_error(std::string("spec literal is not valid JSON: ") + e.what());
  }
  return ProductSpec(parse_factor_array(j));
}

const SpecRegistry& SpecRegistry::builtin() {
  static const SpecRegistry reg = [] {
    SpecRegistry r;
    r.set("A", ProductSpec({{2, 5, 5}, {1, 5, -5}}));
    r.set("B", ProductSpec({{2, 5, -5}, {1, 5, 5}}));
    r.set("C", ProductSpec({{2, 5, -5}, {1, 5, 5}, {10, 25, 1}, {5, 25, -1}}));
    r.set("D", ProductSpec({{2, 5, 5}, {1, 5, -5}, {5, 25, 1}, {10, 25, -1}}));
    r.set("c", ProductSpec({{2, 5, 1}, {1, 5, -1}}));
    r.set("d", ProductSpec({{2, 5, -1}, {1, 5, 1}}));
    return r;
  }();
  return reg;
}

SpecRegistry SpecRegistry::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw usage_error(std::string("spec registry is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw usage_error("spec registry must be a JSON object of name -> factor list");
  SpecRegistry r;
  for (auto it = j.begin(); it != j.end(); ++it) {
    r.set(it.key(), ProductSpec(parse_factor_array(it.value())));
  }
  return r;
}

const ProductSpec& SpecRegistry::at(std::string_view name) const {
  auto it = specs_.find(name);
  if (it == specs_.end()) {
    std::ostringstream msg;
    msg << "unknown spec '" << name << "'; registered specs:";
    for (const auto& [k, v] : specs_) msg << ' ' << k;
    throw usage_error(msg.str());
  }
  return it->second;
}

bool SpecRegistry::contains(std::string_view name) const { return specs_.find(name) != specs_.end(); }

std::vector<std::string> SpecRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : specs_) out.push_back(k);
  return out;
}

void SpecRegistry::set(std::string name, ProductSpec spec) {
  specs_.insert_or_assign(std::move(name), std::move(spec));
}

QSeries expand_product(const ProductSpec& spec, std::size_t N) {
  QSeries s = QSeries::one(N);
  // Positive exponents first keeps intermediate coefficients small.
  for (const auto& f : spec.pochhammer_factors()) {
    if (f.exponent > 0) apply_pochhammer(s, f);
  }
  for (const auto& f : spec.pochhammer_factors()) {
    if (f.exponent < 0) apply_pochhammer(s, f);
  }
  return s;
}

QSeries expand_product_via_inverse(const ProductSpec& spec, std::size_t N) {
  QSeries num = QSeries::one(N);
  QSeries den = QSeries::one(N);
  bool has_den = false;
  for (const auto& f : spec.pochhammer_factors()) {
    if (f.exponent > 0) {
      apply_pochhammer(num, f);
    } else {
      apply_pochhammer(den, PochhammerFactor{f.offset, f.modulus, -f.exponent});
      has_den = true;
    }
  }
  if (!has_den) return num;
  return ps_mul(num, ps_inv(den));
}

std::string spec_digest(const ProductSpec& spec) { return sha256_hex(spec.to_json()); }

}  // namespace qsign
