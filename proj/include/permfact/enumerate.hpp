#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "permfact/canonical.hpp"
#include "permfact/factorization.hpp"
#include "permfact/rational.hpp"

namespace permfact {

enum class FactorKind { Cycles, Transpositions, KCycles, ProperPerms, AnyPerms };

// Exactly one of {signature, depth, length} per the public contract; a genus
// constraint fixes the depth via depth = n + l(target) - 2 + 2g and is only
// meaningful together with transitive_only.
struct EnumSpec {
  Permutation target;
  FactorKind kind = FactorKind::Cycles;
  int k = 0;  // for KCycles
  std::optional<Signature> signature;
  std::optional<long long> depth;
  std::optional<long long> length;
  bool transitive_only = false;
  std::optional<long long> genus;
  bool monotone_only = false;  // requires Transpositions
};

// Callbacks return false to stop early. Emission order is deterministic:
// depth-first over candidate factors sorted lexicographically.
void enumerate_cycle_factorizations(const EnumSpec& spec,
                                    const std::function<bool(const CycleFactorization&)>& emit);
void enumerate_general_factorizations(const EnumSpec& spec,
                                      const std::function<bool(const GeneralFactorization&)>& emit);

Permutation class_representative(const CycleType& alpha);

long long minimal_depth(const CycleType& alpha, long long g);  // n + m - 2 + 2g

// Counting functions. All prune by residual depth and by connectivity of the
// supports placed so far; jobs > 1 partitions the search by first factor.
long long count_inequivalent(const CycleType& alpha, const Signature& beta, long long g,
                             int jobs = 1);
long long count_ordinary_cycle(const CycleType& alpha, const Signature& beta, long long g,
                               int jobs = 1);
long long count_monotone(const CycleType& alpha, long long g);
long long count_proper(const CycleType& alpha, long long r, long long g);
// C_g(alpha, r) via the binomial transform of proper counts; r may be negative.
Rat count_all(const CycleType& alpha, long long r, long long g);
// Direct enumeration with identity factors allowed (r >= 0), used as an oracle.
long long count_all_direct(const CycleType& alpha, long long r, long long g);

// I_g(alpha, r) and P_g(alpha, r) for all r at once.
std::map<long long, long long> inequivalent_by_length(const CycleType& alpha, long long g,
                                                      int jobs = 1);
std::map<long long, long long> proper_by_length(const CycleType& alpha, long long g,
                                                int jobs = 1);

// Inequivalent counts grouped by signature (all minimal/genus-g classes).
std::map<Signature, long long> inequivalent_by_signature(const CycleType& alpha, long long g,
                                                         int jobs = 1);
std::map<Signature, long long> ordinary_cycle_by_signature(const CycleType& alpha, long long g,
                                                           int jobs = 1);

struct ConnectionsReport {
  CycleType alpha;
  long long g = 0;
  Int monotone_side;        // (-1)^{|a|+l(a)} M_g(a)
  Int inequivalent_side;    // sum_r (-1)^r I_g(a, r)
  Int proper_side;          // sum_r (-1)^r P_g(a, r)
  Rat polynomial_side;      // C_g(a, -1)
  bool ok = false;
};

ConnectionsReport verify_connections(const CycleType& alpha, long long g, int jobs = 1);

// All signatures with the given depth (partitions of d into parts k-1 >= 1).
std::vector<Signature> signatures_with_depth(long long d);
std::vector<std::vector<int>> compositions_of(int n);
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace permfact
