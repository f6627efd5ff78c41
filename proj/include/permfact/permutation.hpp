#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "permfact/errors.hpp"

namespace permfact {

// A nontrivial cycle on {1..n}, stored with its least symbol first so the
// textual form of a permutation is unique.
class Cycle {
 public:
  explicit Cycle(std::vector<int> symbols);

  int length() const { return static_cast<int>(symbols_.size()); }
  int min_symbol() const { return symbols_.front(); }
  int max_symbol() const;
  bool contains(int s) const;
  bool disjoint_with(const Cycle& other) const;
  int image_of(int s) const;  // s -> next symbol in the cycle, or s itself
  uint32_t support_mask() const;  // bit (s-1) set for each symbol s
  const std::vector<int>& symbols() const { return symbols_; }

  auto operator<=>(const Cycle&) const = default;

 private:
  std::vector<int> symbols_;
};

class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  int size() const;    // n = sum of parts
  int length() const { return static_cast<int>(parts_.size()); }  // m
  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<int> parts_;
};

// Finitely supported list (beta_2, beta_3, ...); beta_k counts k-cycles.
class Signature {
 public:
  Signature() = default;

  long long count(int k) const;          // beta_k, k >= 2
  void add(int k, long long c = 1);
  long long total() const;               // |beta| = number of cycles marked
  long long depth() const;               // sum (k-1) beta_k
  int max_cycle_length() const;          // largest k with beta_k > 0 (or 1)
  bool empty() const { return beta_.empty(); }
  const std::vector<long long>& raw() const { return beta_; }  // index i <-> k = i+2

  auto operator<=>(const Signature&) const = default;

 private:
  void trim();
  std::vector<long long> beta_;
};

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  static Permutation from_images(std::vector<int> images);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation from_cycle(int n, const Cycle& c);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i - 1]; }
  int operator()(int i) const { return apply(i); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  std::vector<Cycle> disjoint_cycles() const;  // nontrivial, increasing least element
  int cycle_count() const;                     // fixed points included
  CycleType cycle_type() const;                // weakly decreasing, fixed points included
  Signature signature() const;                 // k-cycle counts over disjoint cycles
  uint32_t support_mask() const;               // moved symbols

  std::string to_string() const;  // disjoint cycle notation, e.g. "(1 4 2)(3 6)"

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;  // images_[i-1] = pi(i)
};

// result(i) = p(q(i)); products in this codebase apply the right factor first.
Permutation compose(const Permutation& p, const Permutation& q);

CycleType cycle_type(const Permutation& p);
int perm_depth(const Permutation& p);  // n - number of cycles

// Composition-order cycle type: lengths of the disjoint cycles in increasing
// order of least element (fixed points included).
std::vector<int> cycle_type_by_least(const Permutation& p);

}  // namespace permfact
