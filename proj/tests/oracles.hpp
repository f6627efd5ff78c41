#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "permfact/canonical.hpp"
#include "permfact/factorization.hpp"

namespace permfact::testing {

// Number of factor orderings reachable by swapping adjacent disjoint factors.
inline long long swap_closure_size(const CycleFactorization& f) {
  std::set<std::vector<Cycle>> seen;
  std::queue<std::vector<Cycle>> queue;
  seen.insert(f.factors);
  queue.push(f.factors);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!cur[i].disjoint_with(cur[i + 1])) continue;
      auto next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) queue.push(next);
    }
  }
  return static_cast<long long>(seen.size());
}

// All members of the commutation class, via the same closure.
inline std::set<std::vector<Cycle>> swap_closure(const CycleFactorization& f) {
  std::set<std::vector<Cycle>> seen;
  std::queue<std::vector<Cycle>> queue;
  seen.insert(f.factors);
  queue.push(f.factors);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!cur[i].disjoint_with(cur[i + 1])) continue;
      auto next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) queue.push(next);
    }
  }
  return seen;
}

// Minimum number of transpositions multiplying to p, by breadth-first search
// over the Cayley graph of S_n generated by all transpositions.
inline int cayley_min_transpositions(const Permutation& p) {
  int n = p.size();
  std::map<std::vector<int>, int> dist;
  std::queue<Permutation> queue;
  Permutation id = Permutation::identity(n);
  dist[id.images()] = 0;
  queue.push(id);
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop();
    int d = dist[cur.images()];
    if (cur == p) return d;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        Permutation next = compose(Permutation::from_cycles(n, {{a, b}}), cur);
        if (dist.emplace(next.images(), d + 1).second) queue.push(next);
      }
  }
  return -1;
}

}  // namespace permfact::testing
