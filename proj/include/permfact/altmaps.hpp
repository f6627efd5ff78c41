#pragma once

#include <string>
#include <vector>

#include "permfact/canonical.hpp"
#include "permfact/factorization.hpp"

namespace permfact {

// The alternating map of a cycle factorization. Internal vertices are the
// collapsed shuttles, relabelled in first-discovery order along arrows
// 1..n (application order), which depends only on the commutation class:
// equivalent factorizations build identical values (Lemma on equal digraphs).
struct AlternatingMap {
  int n = 1;
  std::vector<Cycle> vertex_cycles;            // internal vertex id -> its factor cycle
  std::vector<std::vector<int>> symbol_chain;  // symbol s (1-based) -> internal ids, application order

  int internal_count() const { return static_cast<int>(vertex_cycles.size()); }
  auto operator<=>(const AlternatingMap&) const = default;
};

AlternatingMap build_map(const CycleFactorization& f);

struct FaceInfo {
  long long dart_count = 0;
  std::vector<int> source_symbols;  // labels of source leaves on this face
  std::vector<int> sink_symbols;
};

struct MapStats {
  long long vertex_count = 0;
  long long edge_count = 0;
  long long face_count = 0;
  long long components = 0;
  long long genus = 0;  // from Euler-Poincare, summed over components
  bool acyclic = false;
  bool alternating = true;  // by construction; rechecked from the rotation
  std::vector<FaceInfo> faces;
};

MapStats map_stats(const AlternatingMap& m);

// Label-free canonical form of the decorated map: faces labelled through the
// distinguished sources (least symbol of each cycle of the target), rotation
// encoded by BFS from the face-1 source. Requires a connected map.
std::string canonical_serialization(const AlternatingMap& m, const Permutation& target);

// DOT-like dump of the rotation system for manual inspection.
std::string rotation_dump(const AlternatingMap& m);

// Reachability between internal vertices (directed paths).
std::vector<std::vector<bool>> internal_reachability(const AlternatingMap& m);

struct BijectionCase {
  std::string what;
  std::string witness;
};
struct BijectionReport {
  CycleType alpha;
  Signature beta;
  long long g = 0;
  long long class_count = 0;
  long long map_count = 0;
  bool ok = false;
  std::vector<BijectionCase> failures;
};

// Build the map of every inequivalent class of the given class/signature/
// genus; check acyclicity, alternation, genus, face structure and that
// distinct classes give distinct canonical serializations, and compare the
// number of maps with the inequivalent count.
BijectionReport verify_bijection(const CycleType& alpha, const Signature& beta, long long g);

}  // namespace permfact
