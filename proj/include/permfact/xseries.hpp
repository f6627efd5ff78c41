#pragma once

#include <functional>
#include <map>
#include <vector>

#include "permfact/qpoly.hpp"

namespace permfact {

// Truncated multivariate formal power series in x_1..x_m with QPoly
// coefficients, exact modulo total degree > order. Coefficients may carry an
// implied-depth cap: q-monomials of depth weight > depth_cap are dropped
// (depth only grows under multiplication, so dropping is closed). All
// arithmetic here is exact rational; no floating point.
class XSeries {
 public:
  XSeries() = default;
  XSeries(int vars, int order, long long depth_cap = -1);

  static XSeries constant(int vars, int order, const QPoly& c, long long depth_cap = -1);
  static XSeries variable(int vars, int order, int index, long long depth_cap = -1);

  int vars() const { return vars_; }
  int order() const { return order_; }
  long long depth_cap() const { return depth_cap_; }
  bool is_zero() const { return coeffs_.empty(); }

  const QPoly& coeff(const std::vector<int>& exps) const;
  const std::map<std::vector<int>, QPoly>& coeffs() const { return coeffs_; }
  void set_coeff(const std::vector<int>& exps, QPoly c);
  void add_coeff(const std::vector<int>& exps, const QPoly& c);

  // Smallest total degree with a nonzero coefficient (order+1 when zero).
  int valuation() const;

  XSeries& operator+=(const XSeries& o);
  XSeries& operator-=(const XSeries& o);
  XSeries operator-() const;
  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  XSeries& operator*=(const XSeries& o) { return *this = *this * o; }

  XSeries mul_qpoly(const QPoly& c) const;
  XSeries mul_scalar(const Rat& c) const;

  // 1/this; requires the constant coefficient to be a nonzero rational.
  XSeries inverse_unit() const;
  XSeries divide_unit(const XSeries& den) const;  // this / den

  // Exact division by (x_i - x_j) (0-based indices), degree by degree;
  // an inexact division is an internal-consistency error.
  XSeries divide_linear_difference(int i, int j) const;

  XSeries log_series() const;  // constant term must be 1
  XSeries exp_series() const;  // constant term must be 0

  // Substitute this series (valuation >= 1) into sum_j outer[j] z^j.
  XSeries compose_polynomial(const std::vector<QPoly>& outer) const;

  // D_x = sum_i x_i d/dx_i: multiplies each coefficient by its total degree.
  XSeries total_derivative() const;
  // Coefficientwise map degree d -> factor(d) (exact rational multiply).
  XSeries scale_by_degree(const std::function<Rat(long long)>& factor) const;
  // Coefficientwise divide by factor(d); requires every nonzero coefficient
  // to have factor(d) != 0 (in particular a zero constant term when
  // factor(0) = 0).
  XSeries divide_by_degree(const std::function<Rat(long long)>& factor) const;

  XSeries truncate(int new_order) const;
  XSeries with_depth_cap(long long cap) const;

  // Substitute rational values for the q variables in every coefficient.
  XSeries substitute_q(const std::vector<Rat>& values) const;

  // Map a univariate series into variable `index` of a `vars`-variable ring.
  XSeries embed(int vars, int index) const;

  bool operator==(const XSeries&) const = default;

 private:
  QPoly clip(QPoly c) const;
  int vars_ = 1;
  int order_ = 0;
  long long depth_cap_ = -1;
  std::map<std::vector<int>, QPoly> coeffs_;  // exponent vectors of length vars_
};

// sum_i C_i / prod_{j != i} (x_i - x_j) for m = C.size() series in m
// variables; every pole must cancel in the sum (internal error otherwise).
XSeries alternating_pole_sum(const std::vector<XSeries>& C);

}  // namespace permfact
