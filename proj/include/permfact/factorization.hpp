#pragma once

#include <utility>
#include <vector>

#include "permfact/permutation.hpp"

namespace permfact {

// Ordered sequence of nontrivial cycles; written left to right as in text,
// with the product evaluated right to left.
struct CycleFactorization {
  int n = 1;
  std::vector<Cycle> factors;

  int length() const { return static_cast<int>(factors.size()); }
  auto operator<=>(const CycleFactorization&) const = default;
};

// Factors are arbitrary permutations; identity factors allowed.
struct GeneralFactorization {
  int n = 1;
  std::vector<Permutation> factors;

  int length() const { return static_cast<int>(factors.size()); }
  auto operator<=>(const GeneralFactorization&) const = default;
};

void validate(const CycleFactorization& f);
void validate(const GeneralFactorization& f);

Permutation evaluate(const CycleFactorization& f);
Permutation evaluate(const GeneralFactorization& f);

std::pair<Signature, long long> signature_and_depth(const CycleFactorization& f);
std::pair<Signature, long long> signature_and_depth(const GeneralFactorization& f);

bool is_transitive(const CycleFactorization& f);
bool is_transitive(const GeneralFactorization& f);

// Genus per depth = n + l(pi) - 2 + 2g; defined only for transitive f.
long long genus(const CycleFactorization& f);
long long genus(const GeneralFactorization& f);

// The word on nontrivial cycles induced by listing each factor's disjoint
// cycles in increasing order of least element.
CycleFactorization induced_cycle_factorization(const GeneralFactorization& f);

CycleFactorization concat(const CycleFactorization& f, const CycleFactorization& g);

}  // namespace permfact
