#pragma once

#include <map>
#include <string>
#include <vector>

#include "permfact/permutation.hpp"
#include "permfact/rational.hpp"

namespace permfact {

// Sparse polynomial over exact rationals in variables indexed 0,1,2,...
// In series contexts variable i stands for q_{i+2} (a marker for (i+2)-cycles,
// of depth weight i+1); the group algebra reuses the same container for a
// single variable u. Exponent vectors never carry trailing zeros and no zero
// coefficients are stored.
class QPoly {
 public:
  QPoly() = default;
  static QPoly zero() { return QPoly(); }
  static QPoly constant(const Rat& c);
  static QPoly variable(int index, int exp = 1);
  static QPoly monomial(std::vector<int> exps, const Rat& c);
  static QPoly from_signature(const Signature& beta);  // q^beta

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;  // coefficient of the empty monomial
  Rat constant_value() const;  // requires is_constant

  Rat coeff(const std::vector<int>& exps) const;
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly& mul_scalar(const Rat& c);

  bool operator==(const QPoly&) const = default;

  // Depth weight of the q-interpretation: sum over variables (i+1)*exp_i.
  static long long depth_of(const std::vector<int>& exps);
  long long max_depth() const;
  // Drop all terms of depth weight > cap (cap < 0 means keep everything).
  QPoly truncate_depth(long long cap) const;
  // Total degree = sum of exponents.
  static long long total_degree_of(const std::vector<int>& exps);
  QPoly truncate_total_degree(long long cap) const;

  Rat evaluate(const std::vector<Rat>& values) const;  // values[i] for variable i
  // q_{i+2} := (-u)^{i+1}; returns a polynomial in the single variable u.
  QPoly substitute_u_depth() const;

  std::string to_string(const std::string& varname = "q", int index_offset = 2) const;

 private:
  void add_term(const std::vector<int>& exps, const Rat& c);
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace permfact
