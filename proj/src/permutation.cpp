#include "permfact/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace permfact {

Cycle::Cycle(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) throw DomainViolation("cycle must have length >= 2");
  auto mn = std::min_element(symbols_.begin(), symbols_.end());
  std::rotate(symbols_.begin(), mn, symbols_.end());
  std::vector<int> sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainViolation("cycle symbols must be distinct");
  if (sorted.front() < 1) throw DomainViolation("cycle symbols must be >= 1");
}

int Cycle::max_symbol() const { return *std::max_element(symbols_.begin(), symbols_.end()); }

bool Cycle::contains(int s) const {
  return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
}

bool Cycle::disjoint_with(const Cycle& other) const {
  return (support_mask() & other.support_mask()) == 0;
}

int Cycle::image_of(int s) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == s) return symbols_[(i + 1) % symbols_.size()];
  return s;
}

uint32_t Cycle::support_mask() const {
  uint32_t m = 0;
  for (int s : symbols_) m |= 1u << (s - 1);
  return m;
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw DomainViolation("cycle type parts must be >= 1");
}

int CycleType::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

long long Signature::count(int k) const {
  if (k < 2 || k - 2 >= static_cast<int>(beta_.size())) return 0;
  return beta_[k - 2];
}

void Signature::add(int k, long long c) {
  if (k < 2) throw DomainViolation("signature indices start at 2");
  if (k - 2 >= static_cast<int>(beta_.size())) beta_.resize(k - 1, 0);
  beta_[k - 2] += c;
  if (beta_[k - 2] < 0) throw DomainViolation("signature counts must be nonnegative");
  trim();
}

long long Signature::total() const {
  long long t = 0;
  for (long long b : beta_) t += b;
  return t;
}

long long Signature::depth() const {
  long long d = 0;
  for (size_t i = 0; i < beta_.size(); ++i) d += static_cast<long long>(i + 1) * beta_[i];
  return d;
}

int Signature::max_cycle_length() const {
  return beta_.empty() ? 1 : static_cast<int>(beta_.size()) + 1;
}

void Signature::trim() {
  while (!beta_.empty() && beta_.back() == 0) beta_.pop_back();
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainViolation("ambient size must be >= 1");
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), 1);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  if (n < 1) throw DomainViolation("ambient size must be >= 1");
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) throw DomainViolation("images do not form a bijection");
    seen[v - 1] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;  // length-1 cycles are fixed points
    Cycle c(cyc);
    for (int s : c.symbols()) {
      if (s > n) throw AmbientMismatch("cycle symbol exceeds ambient size");
      if (p.images_[s - 1] != s) throw DomainViolation("cycles are not disjoint");
      p.images_[s - 1] = c.image_of(s);
    }
  }
  return p;
}

Permutation Permutation::from_cycle(int n, const Cycle& c) {
  return from_cycles(n, {c.symbols()});
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 0; i < size(); ++i) r.images_[images_[i] - 1] = i + 1;
  return r;
}

std::vector<Cycle> Permutation::disjoint_cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (int s = 1; s <= size(); ++s) {
    if (seen[s - 1] || images_[s - 1] == s) continue;
    std::vector<int> cyc;
    int cur = s;
    while (!seen[cur - 1]) {
      seen[cur - 1] = true;
      cyc.push_back(cur);
      cur = images_[cur - 1];
    }
    out.emplace_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (int s = 1; s <= size(); ++s) {
    if (seen[s - 1]) continue;
    ++count;
    int cur = s;
    while (!seen[cur - 1]) {
      seen[cur - 1] = true;
      cur = images_[cur - 1];
    }
  }
  return count;
}

CycleType Permutation::cycle_type() const {
  std::vector<int> parts;
  std::vector<bool> seen(images_.size(), false);
  for (int s = 1; s <= size(); ++s) {
    if (seen[s - 1]) continue;
    int len = 0, cur = s;
    while (!seen[cur - 1]) {
      seen[cur - 1] = true;
      ++len;
      cur = images_[cur - 1];
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return CycleType(parts);
}

Signature Permutation::signature() const {
  Signature b;
  for (const auto& c : disjoint_cycles()) b.add(c.length());
  return b;
}

uint32_t Permutation::support_mask() const {
  uint32_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) m |= 1u << i;
  return m;
}

std::string Permutation::to_string() const {
  auto cycles = disjoint_cycles();
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (size_t i = 0; i < c.symbols().size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c.symbols()[i]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw AmbientMismatch("compose: mismatched ambient sizes");
  std::vector<int> images(p.size());
  for (int i = 1; i <= p.size(); ++i) images[i - 1] = p.apply(q.apply(i));
  return Permutation::from_images(std::move(images));
}

CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

int perm_depth(const Permutation& p) { return p.size() - p.cycle_count(); }

std::vector<int> cycle_type_by_least(const Permutation& p) {
  std::vector<int> parts;
  std::vector<bool> seen(p.size(), false);
  for (int s = 1; s <= p.size(); ++s) {
    if (seen[s - 1]) continue;
    int len = 0, cur = s;
    while (!seen[cur - 1]) {
      seen[cur - 1] = true;
      ++len;
      cur = p.apply(cur);
    }
    parts.push_back(len);
  }
  return parts;
}

}  // namespace permfact
