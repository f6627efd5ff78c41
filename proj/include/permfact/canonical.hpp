#pragma once

#include <vector>

#include "permfact/factorization.hpp"

namespace permfact {

// Edges i -> j (i < j in storage order) whenever factors i and j share a
// symbol. Acyclic by construction; linear extensions = commutation class.
struct DependenceDag {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<uint32_t> preds;  // preds[j]: bitmask of predecessors (node_count <= 32)
};

DependenceDag dependence_dag(const CycleFactorization& f);

// Unique trace-minimal representative of the commutation class: greedily emit,
// among factors whose predecessors are all emitted, the one with the smallest
// maximum symbol. Available factors always have pairwise distinct maxima.
CycleFactorization canonical_form(const CycleFactorization& f);

bool is_canonical(const CycleFactorization& f);

bool equivalent(const CycleFactorization& f, const CycleFactorization& g);

// Number of linear extensions of the dependence dag.
long long class_size(const CycleFactorization& f);

// Transpositions with weakly increasing maxima, left to right.
bool is_monotone(const CycleFactorization& f);

// The sign-reversing involution on trace-minimal representatives: monotone
// factorizations are fixed; otherwise merge a transposition (a m) into the
// following cycle, or split a longer cycle (a b1..bk m) into (a m)(a b1..bk).
// Preserves target, signature depth, transitivity and genus; changes length
// by one when not fixed.
CycleFactorization monotone_involution(const CycleFactorization& f);

struct InequivalentClass {
  CycleFactorization canonical;
};

}  // namespace permfact
