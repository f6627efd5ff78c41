#pragma once

#include "permfact/permutation.hpp"
#include "permfact/rational.hpp"

namespace permfact {

// Direct evaluators for the closed counting formulas, used as independent
// oracles against the enumerators and series. All results exact; evaluators
// that must be integral abort with a diagnostic otherwise.

// n^{m-3} (n+m-2)! prod a_i^{a_i}/(a_i-1)!  (minimal transitive 2-cycle counts)
Int hurwitz_count(const CycleType& alpha);

// n^{l-1} l! / prod beta_k!  for the full cycle; requires depth(beta) = n-1.
Int fullcycle_signature_count(int n, const Signature& beta);

// (2n+l-2)! / ((2n-1)! prod beta_k!)  inequivalent full-cycle analogue.
Int springer_count(int n, const Signature& beta);

// (1/(n-1)) C(3n-3, n-2)
Int eidswick_longyear(int n);

// (2nm/(n+m)) sum_k C(3n, n-1-k) C(3m, m-1-k)
Int two_part_transpositions(int n, int m);

// r ((r-1)n - 1)_(m-3) prod a_i C(r a_i - 1, a_i); polynomial identity in r,
// with x_(-k) = 1/(x+k)_(k). Integer for r >= 2.
Rat constellation_count(const CycleType& alpha, long long r);

// (2n+1)^(m-3) prod a_i C(2 a_i, a_i), with x^(-k) = 1/(x-k)^(k).
Int goulden_monotone(const CycleType& alpha);

}  // namespace permfact
