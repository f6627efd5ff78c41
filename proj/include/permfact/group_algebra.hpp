#pragma once

#include <map>
#include <string>
#include <vector>

#include "permfact/qpoly.hpp"

namespace permfact {

// Element of Q S_n with sparse polynomial coefficients, truncated by total
// q-degree (the number of marked cycles). Iteration order over permutations
// is fixed by the lexicographic one-line form.
class AlgebraElement {
 public:
  AlgebraElement(int n, long long truncation);

  int n() const { return n_; }
  long long truncation() const { return trunc_; }

  static AlgebraElement unit(int n, long long truncation);  // 1 * identity
  void add(const Permutation& p, const QPoly& c);
  const QPoly& coeff(const Permutation& p) const;
  const std::map<Permutation, QPoly>& coeffs() const { return coeffs_; }
  bool operator==(const AlgebraElement&) const = default;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

 private:
  int n_;
  long long trunc_;
  std::map<Permutation, QPoly> coeffs_;
};

// Convolution: (ab)(pi) = sum_{sigma tau = pi} a(sigma) b(tau), truncated.
AlgebraElement ga_multiply(const AlgebraElement& a, const AlgebraElement& b);

// Two-sided inverse up to truncation; requires the q-degree-0 part to be
// exactly c * identity with c != 0.
AlgebraElement ga_invert(const AlgebraElement& a);

// sum over all sigma in S_n of q^{beta(sigma)} sigma.
AlgebraElement signature_weighted_sum(int n, long long truncation);

// Whole-family sums feeding the verifications (and the cross-check that
// substituting q_k = (-u)^{k-1} turns the signed cycle-count sum into the
// signed depth sum). Truncation: total q-degree, except the depth sum and
// monotone sum which are truncated by u-degree.
AlgebraElement proper_signed_sum(int n, long long degree_bound);
AlgebraElement inequivalent_signed_sum(int n, long long degree_bound);
AlgebraElement inequivalent_depth_sum(int n, long long degree_bound);
AlgebraElement monotone_length_sum(int n, long long degree_bound);

struct IdentityMismatch {
  std::string where;        // which pair of sides differs
  std::string permutation;  // cycle form
  std::string monomial;
  std::string lhs, rhs;
};
struct IdentityReport {
  int n = 0;
  long long degree_bound = 0;
  bool ok = false;
  long long proper_terms = 0;       // factorizations enumerated (proper side)
  long long inequivalent_terms = 0; // canonical representatives
  std::vector<IdentityMismatch> mismatches;
};

// Inverse of the signature-weighted sum vs the signed proper sum vs the
// signed inequivalent sum, including the transitive fixed-genus restriction
// of the proper/inequivalent identity.
IdentityReport verify_qidentity(int n, long long degree_bound);

// Monotone sum_{f} target(f) u^{len f} vs inequivalent signed depth sum,
// including transitive fixed-genus restrictions; u-degree truncated.
IdentityReport verify_uidentity(int n, long long degree_bound);

struct JMReport {
  int n = 0;
  bool ok = false;
  std::vector<std::string> failures;
};
// e_k(J_2..J_n) equals the sum of all permutations of depth k, 0 <= k <= n-1.
JMReport jm_elementary_check(int n);

}  // namespace permfact
