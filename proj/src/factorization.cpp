#include "permfact/factorization.hpp"

#include <numeric>

namespace permfact {

namespace {

// Union of factor supports plus singletons covers {1..n} in one block.
bool masks_transitive(int n, const std::vector<uint32_t>& supports) {
  std::vector<uint32_t> comps;
  comps.reserve(n);
  for (int i = 0; i < n; ++i) comps.push_back(1u << i);
  for (uint32_t sup : supports) {
    uint32_t merged = sup;
    std::vector<uint32_t> next;
    for (uint32_t c : comps) {
      if (c & merged)
        merged |= c;
      else
        next.push_back(c);
    }
    next.push_back(merged);
    comps.swap(next);
  }
  return comps.size() == 1;
}

long long genus_from(long long depth, int n, int cycles, bool transitive) {
  if (!transitive) throw DomainViolation("genus is defined only for transitive factorizations");
  long long twice_g = depth - n - cycles + 2;
  internal_check(twice_g >= 0 && twice_g % 2 == 0,
                 "genus relation depth = n + l - 2 + 2g violated");
  return twice_g / 2;
}

}  // namespace

void validate(const CycleFactorization& f) {
  if (f.n < 1) throw DomainViolation("ambient size must be >= 1");
  for (const auto& c : f.factors)
    if (c.max_symbol() > f.n) throw AmbientMismatch("cycle symbol exceeds ambient size");
}

void validate(const GeneralFactorization& f) {
  if (f.n < 1) throw DomainViolation("ambient size must be >= 1");
  for (const auto& p : f.factors)
    if (p.size() != f.n) throw AmbientMismatch("factor ambient size mismatch");
}

Permutation evaluate(const CycleFactorization& f) {
  validate(f);
  Permutation acc = Permutation::identity(f.n);
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
    acc = compose(Permutation::from_cycle(f.n, *it), acc);
  return acc;
}

Permutation evaluate(const GeneralFactorization& f) {
  validate(f);
  Permutation acc = Permutation::identity(f.n);
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

std::pair<Signature, long long> signature_and_depth(const CycleFactorization& f) {
  Signature b;
  for (const auto& c : f.factors) b.add(c.length());
  return {b, b.depth()};
}

std::pair<Signature, long long> signature_and_depth(const GeneralFactorization& f) {
  Signature b;
  for (const auto& p : f.factors)
    for (const auto& c : p.disjoint_cycles()) b.add(c.length());
  return {b, b.depth()};
}

bool is_transitive(const CycleFactorization& f) {
  validate(f);
  std::vector<uint32_t> sup;
  sup.reserve(f.factors.size());
  for (const auto& c : f.factors) sup.push_back(c.support_mask());
  return masks_transitive(f.n, sup);
}

bool is_transitive(const GeneralFactorization& f) {
  validate(f);
  std::vector<uint32_t> sup;
  sup.reserve(f.factors.size());
  for (const auto& p : f.factors) sup.push_back(p.support_mask());
  return masks_transitive(f.n, sup);
}

long long genus(const CycleFactorization& f) {
  auto [beta, depth] = signature_and_depth(f);
  return genus_from(depth, f.n, evaluate(f).cycle_count(), is_transitive(f));
}

long long genus(const GeneralFactorization& f) {
  auto [beta, depth] = signature_and_depth(f);
  return genus_from(depth, f.n, evaluate(f).cycle_count(), is_transitive(f));
}

CycleFactorization induced_cycle_factorization(const GeneralFactorization& f) {
  validate(f);
  CycleFactorization out;
  out.n = f.n;
  for (const auto& p : f.factors)
    for (auto& c : p.disjoint_cycles()) out.factors.push_back(c);
  return out;
}

CycleFactorization concat(const CycleFactorization& f, const CycleFactorization& g) {
  if (f.n != g.n) throw AmbientMismatch("concat: mismatched ambient sizes");
  CycleFactorization out = f;
  out.factors.insert(out.factors.end(), g.factors.begin(), g.factors.end());
  return out;
}

}  // namespace permfact
