#include "permfact/qpoly.hpp"

#include <algorithm>

namespace permfact {

namespace {
void trim_exps(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}
}  // namespace

QPoly QPoly::constant(const Rat& c) {
  QPoly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

QPoly QPoly::variable(int index, int exp) {
  if (index < 0 || exp < 0) throw DomainViolation("bad variable index or exponent");
  if (exp == 0) return constant(1);
  QPoly p;
  std::vector<int> e(index + 1, 0);
  e[index] = exp;
  p.terms_[e] = 1;
  return p;
}

QPoly QPoly::monomial(std::vector<int> exps, const Rat& c) {
  QPoly p;
  trim_exps(exps);
  if (c != 0) p.terms_[std::move(exps)] = c;
  return p;
}

QPoly QPoly::from_signature(const Signature& beta) {
  std::vector<int> e;
  for (long long b : beta.raw()) e.push_back(static_cast<int>(b));
  return monomial(std::move(e), 1);
}

bool QPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat QPoly::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat QPoly::constant_value() const {
  if (!is_constant()) throw DomainViolation("polynomial is not constant");
  return constant_term();
}

Rat QPoly::coeff(const std::vector<int>& exps) const {
  std::vector<int> e = exps;
  trim_exps(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void QPoly::add_term(const std::vector<int>& exps, const Rat& c) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (c != 0) terms_[exps] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

QPoly& QPoly::mul_scalar(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

long long QPoly::depth_of(const std::vector<int>& exps) {
  long long d = 0;
  for (size_t i = 0; i < exps.size(); ++i) d += static_cast<long long>(i + 1) * exps[i];
  return d;
}

long long QPoly::max_depth() const {
  long long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, depth_of(e));
  return d;
}

QPoly QPoly::truncate_depth(long long cap) const {
  if (cap < 0) return *this;
  QPoly p;
  for (const auto& [e, c] : terms_)
    if (depth_of(e) <= cap) p.terms_[e] = c;
  return p;
}

long long QPoly::total_degree_of(const std::vector<int>& exps) {
  long long d = 0;
  for (int e : exps) d += e;
  return d;
}

QPoly QPoly::truncate_total_degree(long long cap) const {
  if (cap < 0) return *this;
  QPoly p;
  for (const auto& [e, c] : terms_)
    if (total_degree_of(e) <= cap) p.terms_[e] = c;
  return p;
}

Rat QPoly::evaluate(const std::vector<Rat>& values) const {
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= values.size()) throw DomainViolation("missing value for variable in evaluation");
      Rat base = values[i];
      for (int t = 0; t < e[i]; ++t) term *= base;
    }
    total += term;
  }
  return total;
}

QPoly QPoly::substitute_u_depth() const {
  QPoly out;
  for (const auto& [e, c] : terms_) {
    long long d = depth_of(e);
    Rat coeff = (d % 2 == 0) ? c : -c;
    out += QPoly::monomial(std::vector<int>{static_cast<int>(d)}, coeff);
  }
  return out;
}

std::string QPoly::to_string(const std::string& varname, int index_offset) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.get_str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      s += "*" + varname + std::to_string(static_cast<int>(i) + index_offset);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

}  // namespace permfact
