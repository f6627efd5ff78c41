#include "permfact/xseries.hpp"

#include <algorithm>
#include <numeric>

namespace permfact {

namespace {
long long total_degree(const std::vector<int>& e) {
  return std::accumulate(e.begin(), e.end(), 0LL);
}
}  // namespace

XSeries::XSeries(int vars, int order, long long depth_cap)
    : vars_(vars), order_(order), depth_cap_(depth_cap) {
  if (vars < 1) throw DomainViolation("series needs at least one variable");
  if (order < 0) throw DomainViolation("series order must be nonnegative");
}

XSeries XSeries::constant(int vars, int order, const QPoly& c, long long depth_cap) {
  XSeries s(vars, order, depth_cap);
  s.set_coeff(std::vector<int>(vars, 0), c);
  return s;
}

XSeries XSeries::variable(int vars, int order, int index, long long depth_cap) {
  XSeries s(vars, order, depth_cap);
  if (index < 0 || index >= vars) throw DomainViolation("variable index out of range");
  if (order >= 1) {
    std::vector<int> e(vars, 0);
    e[index] = 1;
    s.set_coeff(e, QPoly::constant(1));
  }
  return s;
}

QPoly XSeries::clip(QPoly c) const {
  return depth_cap_ >= 0 ? c.truncate_depth(depth_cap_) : c;
}

const QPoly& XSeries::coeff(const std::vector<int>& exps) const {
  static const QPoly kZero;
  auto it = coeffs_.find(exps);
  return it == coeffs_.end() ? kZero : it->second;
}

void XSeries::set_coeff(const std::vector<int>& exps, QPoly c) {
  if (static_cast<int>(exps.size()) != vars_) throw DomainViolation("exponent arity mismatch");
  if (total_degree(exps) > order_) return;
  c = clip(std::move(c));
  if (c.is_zero())
    coeffs_.erase(exps);
  else
    coeffs_[exps] = std::move(c);
}

void XSeries::add_coeff(const std::vector<int>& exps, const QPoly& c) {
  if (static_cast<int>(exps.size()) != vars_) throw DomainViolation("exponent arity mismatch");
  if (total_degree(exps) > order_) return;
  auto it = coeffs_.find(exps);
  if (it == coeffs_.end()) {
    QPoly nc = clip(c);
    if (!nc.is_zero()) coeffs_[exps] = std::move(nc);
    return;
  }
  it->second += c;
  it->second = clip(std::move(it->second));
  if (it->second.is_zero()) coeffs_.erase(it);
}

int XSeries::valuation() const {
  long long v = order_ + 1;
  for (const auto& [e, c] : coeffs_) v = std::min(v, total_degree(e));
  return static_cast<int>(v);
}

XSeries& XSeries::operator+=(const XSeries& o) {
  if (vars_ != o.vars_ || order_ != o.order_)
    throw DomainViolation("series arity/order mismatch in addition");
  for (const auto& [e, c] : o.coeffs_) add_coeff(e, c);
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) {
  if (vars_ != o.vars_ || order_ != o.order_)
    throw DomainViolation("series arity/order mismatch in subtraction");
  for (const auto& [e, c] : o.coeffs_) add_coeff(e, -c);
  return *this;
}

XSeries XSeries::operator-() const {
  XSeries s(vars_, order_, depth_cap_);
  for (const auto& [e, c] : coeffs_) s.coeffs_[e] = -c;
  return s;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  if (a.vars_ != b.vars_ || a.order_ != b.order_)
    throw DomainViolation("series arity/order mismatch in multiplication");
  XSeries s(a.vars_, a.order_, a.depth_cap_ >= 0 ? a.depth_cap_ : b.depth_cap_);
  std::vector<int> e(a.vars_, 0);
  for (const auto& [ea, ca] : a.coeffs_) {
    long long da = total_degree(ea);
    for (const auto& [eb, cb] : b.coeffs_) {
      if (da + total_degree(eb) > s.order_) continue;
      for (int i = 0; i < s.vars_; ++i) e[i] = ea[i] + eb[i];
      s.add_coeff(e, ca * cb);
    }
  }
  return s;
}

XSeries XSeries::mul_qpoly(const QPoly& c) const {
  XSeries s(vars_, order_, depth_cap_);
  for (const auto& [e, v] : coeffs_) s.add_coeff(e, v * c);
  return s;
}

XSeries XSeries::mul_scalar(const Rat& c) const {
  XSeries s(vars_, order_, depth_cap_);
  if (c == 0) return s;
  for (const auto& [e, v] : coeffs_) {
    QPoly t = v;
    t.mul_scalar(c);
    s.coeffs_[e] = std::move(t);
  }
  return s;
}

XSeries XSeries::inverse_unit() const {
  std::vector<int> zero(vars_, 0);
  QPoly c0 = coeff(zero);
  if (!c0.is_constant() || c0.constant_value() == 0)
    throw DomainViolation("series inverse requires a nonzero rational constant term");
  Rat c = c0.constant_value();
  // this = c (1 - u), valuation(u) >= 1; inverse = (1/c) sum u^k
  XSeries u = mul_scalar(Rat(-1) / c);
  u.add_coeff(zero, QPoly::constant(1));
  XSeries acc = XSeries::constant(vars_, order_, QPoly::constant(1), depth_cap_);
  XSeries powu = acc;
  if (u.valuation() < 1) throw DomainViolation("series inverse: inconsistent constant term");
  for (int k = 1; k <= order_; ++k) {
    powu = powu * u;
    if (powu.is_zero()) break;
    acc += powu;
  }
  return acc.mul_scalar(Rat(1) / c);
}

XSeries XSeries::divide_unit(const XSeries& den) const { return *this * den.inverse_unit(); }

XSeries XSeries::divide_linear_difference(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= vars_ || j >= vars_)
    throw DomainViolation("divide_linear_difference: bad variable pair");
  // Group terms by homogeneous total degree; (x_i - x_j) is homogeneous of
  // degree 1, so each component divides independently and no precision is
  // lost beyond the final degree (order decreases by one).
  std::map<long long, std::map<std::vector<int>, QPoly>> by_degree;
  for (const auto& [e, c] : coeffs_) by_degree[total_degree(e)][e] = c;
  XSeries out(vars_, order_ - 1 >= 0 ? order_ - 1 : 0, depth_cap_);
  for (auto& [deg, terms] : by_degree) {
    // peel terms ordered by descending exponent of x_i
    auto cmp = [&](const std::vector<int>& a, const std::vector<int>& b) {
      if (a[i] != b[i]) return a[i] > b[i];
      return a < b;
    };
    std::map<std::vector<int>, QPoly, decltype(cmp)> work(cmp);
    for (auto& [e, c] : terms) work[e] = std::move(c);
    while (!work.empty()) {
      auto it = work.begin();
      std::vector<int> e = it->first;
      QPoly c = std::move(it->second);
      work.erase(it);
      if (c.is_zero()) continue;
      internal_check(e[i] > 0, "series not divisible by (x_i - x_j)");
      std::vector<int> q = e;
      q[i] -= 1;
      if (total_degree(q) <= out.order_) out.add_coeff(q, c);
      // remainder gains the x_j-shifted term: c * x^q * x_j
      std::vector<int> shifted = q;
      shifted[j] += 1;
      auto jt = work.find(shifted);
      if (jt == work.end()) {
        if (!c.is_zero()) work[shifted] = std::move(c);
      } else {
        jt->second += c;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return out;
}

XSeries XSeries::log_series() const {
  std::vector<int> zero(vars_, 0);
  QPoly c0 = coeff(zero);
  if (!(c0.is_constant() && c0.constant_value() == 1))
    throw DomainViolation("log requires constant term 1");
  XSeries u = *this;
  u.add_coeff(zero, QPoly::constant(-1));  // u = this - 1, valuation >= 1
  XSeries acc(vars_, order_, depth_cap_);
  XSeries powu = XSeries::constant(vars_, order_, QPoly::constant(1), depth_cap_);
  for (int k = 1; k <= order_; ++k) {
    powu = powu * u;
    if (powu.is_zero()) break;
    acc += powu.mul_scalar(Rat((k % 2 == 1) ? 1 : -1, k));
  }
  return acc;
}

XSeries XSeries::exp_series() const {
  std::vector<int> zero(vars_, 0);
  if (!coeff(zero).is_zero()) throw DomainViolation("exp requires constant term 0");
  XSeries acc = XSeries::constant(vars_, order_, QPoly::constant(1), depth_cap_);
  XSeries powu = acc;
  Rat invfact = 1;
  for (int k = 1; k <= order_; ++k) {
    powu = powu * *this;
    if (powu.is_zero()) break;
    invfact /= k;
    acc += powu.mul_scalar(invfact);
  }
  return acc;
}

XSeries XSeries::compose_polynomial(const std::vector<QPoly>& outer) const {
  if (valuation() < 1 && outer.size() > 1)
    throw DomainViolation("composition requires inner series of positive valuation");
  XSeries acc(vars_, order_, depth_cap_);
  XSeries pow = XSeries::constant(vars_, order_, QPoly::constant(1), depth_cap_);
  for (size_t j = 0; j < outer.size(); ++j) {
    if (j > 0) {
      pow = pow * *this;
      if (pow.is_zero()) break;
    }
    if (!outer[j].is_zero()) acc += pow.mul_qpoly(outer[j]);
  }
  return acc;
}

XSeries XSeries::total_derivative() const {
  return scale_by_degree([](long long d) { return Rat(static_cast<long>(d)); });
}

XSeries XSeries::scale_by_degree(const std::function<Rat(long long)>& factor) const {
  XSeries s(vars_, order_, depth_cap_);
  for (const auto& [e, c] : coeffs_) {
    QPoly t = c;
    t.mul_scalar(factor(total_degree(e)));
    if (!t.is_zero()) s.coeffs_[e] = std::move(t);
  }
  return s;
}

XSeries XSeries::divide_by_degree(const std::function<Rat(long long)>& factor) const {
  XSeries s(vars_, order_, depth_cap_);
  for (const auto& [e, c] : coeffs_) {
    Rat f = factor(total_degree(e));
    if (f == 0)
      throw DomainViolation("coefficientwise division by zero degree factor (constant term?)");
    QPoly t = c;
    t.mul_scalar(Rat(1) / f);
    s.coeffs_[e] = std::move(t);
  }
  return s;
}

XSeries XSeries::truncate(int new_order) const {
  XSeries s(vars_, std::min(new_order, order_), depth_cap_);
  for (const auto& [e, c] : coeffs_)
    if (total_degree(e) <= s.order_) s.coeffs_[e] = c;
  return s;
}

XSeries XSeries::with_depth_cap(long long cap) const {
  XSeries s(vars_, order_, cap);
  for (const auto& [e, c] : coeffs_) s.set_coeff(e, c);
  return s;
}

XSeries XSeries::substitute_q(const std::vector<Rat>& values) const {
  XSeries s(vars_, order_, -1);
  for (const auto& [e, c] : coeffs_) {
    Rat v = c.evaluate(values);
    if (v != 0) s.coeffs_[e] = QPoly::constant(v);
  }
  return s;
}

XSeries XSeries::embed(int vars, int index) const {
  if (vars_ != 1) throw DomainViolation("embed expects a univariate series");
  if (index < 0 || index >= vars) throw DomainViolation("embed: variable index out of range");
  XSeries s(vars, order_, depth_cap_);
  for (const auto& [e, c] : coeffs_) {
    std::vector<int> ne(vars, 0);
    ne[index] = e[0];
    s.coeffs_[ne] = c;
  }
  return s;
}

XSeries alternating_pole_sum(const std::vector<XSeries>& C) {
  int m = static_cast<int>(C.size());
  if (m < 1) throw DomainViolation("alternating_pole_sum needs at least one term");
  if (m == 1) return C[0];
  int vars = C[0].vars();
  int order = C[0].order();
  for (const auto& s : C)
    if (s.vars() != vars || s.order() != order)
      throw DomainViolation("alternating_pole_sum: mismatched series");
  // sum_i C_i / D_i with D_i = prod_{j!=i} (x_i - x_j): over the common
  // denominator V = prod_{j<k} (x_j - x_k), term i carries sign (-1)^i and
  // the complementary factors prod_{j<k, j,k != i} (x_j - x_k).
  XSeries numer(vars, order, C[0].depth_cap());
  for (int i = 0; i < m; ++i) {
    XSeries t = C[i];
    for (int j = 0; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        if (j == i || k == i) continue;
        XSeries diff = XSeries::variable(vars, order, j, t.depth_cap()) -
                       XSeries::variable(vars, order, k, t.depth_cap());
        t = t * diff;
      }
    if (i % 2 == 1) t = -t;
    numer += t;
  }
  XSeries out = numer;
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) out = out.divide_linear_difference(j, k);
  return out;
}

}  // namespace permfact
