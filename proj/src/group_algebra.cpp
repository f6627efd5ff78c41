#include "permfact/group_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "permfact/canonical.hpp"

namespace permfact {

AlgebraElement::AlgebraElement(int n, long long truncation) : n_(n), trunc_(truncation) {
  if (n < 1) throw DomainViolation("ambient size must be >= 1");
  if (truncation < 0) throw DomainViolation("truncation must be nonnegative");
}

AlgebraElement AlgebraElement::unit(int n, long long truncation) {
  AlgebraElement e(n, truncation);
  e.add(Permutation::identity(n), QPoly::constant(1));
  return e;
}

void AlgebraElement::add(const Permutation& p, const QPoly& c) {
  if (p.size() != n_) throw AmbientMismatch("algebra element: permutation size mismatch");
  QPoly clipped = c.truncate_total_degree(trunc_);
  if (clipped.is_zero()) return;
  auto it = coeffs_.find(p);
  if (it == coeffs_.end()) {
    coeffs_[p] = std::move(clipped);
    return;
  }
  it->second += clipped;
  if (it->second.is_zero()) coeffs_.erase(it);
}

const QPoly& AlgebraElement::coeff(const Permutation& p) const {
  static const QPoly kZero;
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? kZero : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (n_ != o.n_ || trunc_ != o.trunc_)
    throw AmbientMismatch("algebra elements differ in n or truncation");
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (n_ != o.n_ || trunc_ != o.trunc_)
    throw AmbientMismatch("algebra elements differ in n or truncation");
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

AlgebraElement ga_multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n() || a.truncation() != b.truncation())
    throw AmbientMismatch("ga_multiply: mismatched n or truncation");
  AlgebraElement out(a.n(), a.truncation());
  for (const auto& [p, cp] : a.coeffs())
    for (const auto& [q, cq] : b.coeffs()) out.add(compose(p, q), cp * cq);
  return out;
}

AlgebraElement ga_invert(const AlgebraElement& a) {
  int n = a.n();
  long long trunc = a.truncation();
  Rat c(0);
  for (const auto& [p, poly] : a.coeffs()) {
    Rat c0 = poly.coeff({});
    if (p.is_identity())
      c = c0;
    else if (c0 != 0)
      throw DomainViolation("ga_invert: non-unit constant term (non-identity support at q^0)");
  }
  if (c == 0) throw DomainViolation("ga_invert: constant term of identity coefficient is zero");
  // a = c (1 - u) with u of positive q-degree; a^{-1} = (1/c) sum_k u^k
  AlgebraElement u(n, trunc);
  for (const auto& [p, poly] : a.coeffs()) {
    QPoly t = poly;
    t.mul_scalar(Rat(-1) / c);
    if (p.is_identity()) t += QPoly::constant(1);
    if (!t.is_zero()) u.add(p, t);
  }
  AlgebraElement acc = AlgebraElement::unit(n, trunc);
  AlgebraElement pw = acc;
  for (long long k = 1; k <= trunc; ++k) {
    pw = ga_multiply(pw, u);
    acc += pw;
  }
  AlgebraElement out(n, trunc);
  for (const auto& [p, poly] : acc.coeffs()) {
    QPoly t = poly;
    t.mul_scalar(Rat(1) / c);
    out.add(p, t);
  }
  return out;
}

AlgebraElement signature_weighted_sum(int n, long long truncation) {
  AlgebraElement out(n, truncation);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation p = Permutation::from_images(images);
    out.add(p, QPoly::from_signature(p.signature()));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace {

using RestrictedMap = std::map<std::pair<Permutation, long long>, QPoly>;

struct SumWithRestriction {
  AlgebraElement total;
  RestrictedMap by_genus;  // transitive terms keyed by (target, genus)
  long long terms = 0;
  SumWithRestriction(int n, long long trunc) : total(n, trunc) {}
};

void add_restricted(RestrictedMap& m, const Permutation& p, long long g, const QPoly& c,
                    long long trunc) {
  QPoly t = c.truncate_total_degree(trunc);
  if (t.is_zero()) return;
  auto key = std::make_pair(p, g);
  auto it = m.find(key);
  if (it == m.end()) {
    m[key] = std::move(t);
    return;
  }
  it->second += t;
  if (it->second.is_zero()) m.erase(it);
}

long long genus_of_transitive(long long depth, int n, const Permutation& target) {
  long long twice_g = depth - n - target.cycle_count() + 2;
  internal_check(twice_g >= 0 && twice_g % 2 == 0,
                 "transitive factorization violates the genus relation");
  return twice_g / 2;
}

std::vector<uint32_t> merge_comp(const std::vector<uint32_t>& comps, uint32_t sup) {
  std::vector<uint32_t> next;
  uint32_t merged = sup;
  for (uint32_t cmask : comps) {
    if (cmask & merged)
      merged |= cmask;
    else
      next.push_back(cmask);
  }
  next.push_back(merged);
  return next;
}

std::vector<uint32_t> singleton_components(int n) {
  std::vector<uint32_t> comps;
  for (int i = 0; i < n; ++i) comps.push_back(1u << i);
  return comps;
}

std::vector<Cycle> all_nontrivial_cycles(int n) {
  std::vector<Cycle> out;
  std::vector<int> cur;
  std::function<void()> extend = [&]() {
    if (cur.size() >= 2) out.emplace_back(cur);
    for (int s = 1; s <= n; ++s) {
      if (cur.empty()) {
        cur.push_back(s);
        extend();
        cur.pop_back();
        continue;
      }
      if (s <= cur.front()) continue;
      if (std::find(cur.begin(), cur.end(), s) != cur.end()) continue;
      cur.push_back(s);
      extend();
      cur.pop_back();
    }
  };
  // seed: choose least symbol then extend
  for (int s = 1; s <= n; ++s) {
    cur.push_back(s);
    extend();
    cur.pop_back();
  }
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.symbols() < b.symbols(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All words over non-identity permutations with total cycle count <= bound,
// weighted (-1)^{len} q^{beta}.
SumWithRestriction proper_sum_impl(int n, long long bound) {
  SumWithRestriction sum(n, bound);
  struct Cand {
    Permutation perm;
    uint32_t support;
    long long qdeg, depth;
    QPoly weight;
  };
  std::vector<Cand> cands;
  {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      Permutation p = Permutation::from_images(images);
      if (p.is_identity()) continue;
      Signature sig = p.signature();
      cands.push_back({p, p.support_mask(), sig.total(), sig.depth(),
                       QPoly::from_signature(sig)});
    } while (std::next_permutation(images.begin(), images.end()));
  }
  std::function<void(const Permutation&, const std::vector<uint32_t>&, long long, long long,
                     const QPoly&, int)>
      dfs = [&](const Permutation& prod, const std::vector<uint32_t>& comps, long long qdeg,
                long long depth, const QPoly& weight, int len) {
        QPoly signed_w = (len % 2 == 0) ? weight : -weight;
        sum.total.add(prod, signed_w);
        ++sum.terms;
        if (comps.size() == 1)
          add_restricted(sum.by_genus, prod, genus_of_transitive(depth, n, prod), signed_w,
                         bound);
        for (const auto& cand : cands) {
          if (qdeg + cand.qdeg > bound) continue;
          dfs(compose(prod, cand.perm), merge_comp(comps, cand.support), qdeg + cand.qdeg,
              depth + cand.depth, weight * cand.weight, len + 1);
        }
      };
  dfs(Permutation::identity(n), singleton_components(n), 0, 0, QPoly::constant(1), 0);
  return sum;
}

// Canonical cycle words, weighted (-1)^{len} q^{beta}; len <= bound (a cycle
// factorization has q-degree equal to its length). When by_depth is true the
// weight is (-1)^{len} (-u)^{depth} and the truncation bounds the depth.
SumWithRestriction inequivalent_sum_impl(int n, long long bound, bool by_depth) {
  SumWithRestriction sum(n, bound);
  auto cycles = all_nontrivial_cycles(n);
  CycleFactorization word;
  word.n = n;
  std::function<void(const Permutation&, const std::vector<uint32_t>&, long long)> dfs =
      [&](const Permutation& prod, const std::vector<uint32_t>& comps, long long depth) {
        if (is_canonical(word)) {
          int len = word.length();
          QPoly w;
          if (by_depth) {
            long long sgn = ((len + depth) % 2 == 0) ? 1 : -1;
            w = QPoly::monomial({static_cast<int>(depth)}, Rat(static_cast<long>(sgn)));
          } else {
            QPoly mono = QPoly::constant(1);
            for (const auto& c : word.factors) mono *= QPoly::variable(c.length() - 2);
            w = (len % 2 == 0) ? mono : -mono;
          }
          sum.total.add(prod, w);
          ++sum.terms;
          if (comps.size() == 1)
            add_restricted(sum.by_genus, prod, genus_of_transitive(depth, n, prod), w, bound);
        }
        for (const auto& c : cycles) {
          long long cost = by_depth ? (c.length() - 1) : 1;
          long long used = by_depth ? depth : word.length();
          if (used + cost > bound) continue;
          word.factors.push_back(c);
          dfs(compose(prod, Permutation::from_cycle(n, c)),
              merge_comp(comps, c.support_mask()), depth + c.length() - 1);
          word.factors.pop_back();
        }
      };
  dfs(Permutation::identity(n), singleton_components(n), 0);
  return sum;
}

// Monotone transposition words, weight u^{len}, len <= bound.
SumWithRestriction monotone_sum_impl(int n, long long bound) {
  SumWithRestriction sum(n, bound);
  std::vector<Cycle> transpositions;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) transpositions.push_back(Cycle({a, b}));
  std::function<void(const Permutation&, const std::vector<uint32_t>&, int, int)> dfs =
      [&](const Permutation& prod, const std::vector<uint32_t>& comps, int last_max, int len) {
        QPoly w = QPoly::monomial({len}, 1);
        sum.total.add(prod, w);
        ++sum.terms;
        if (comps.size() == 1)
          add_restricted(sum.by_genus, prod, genus_of_transitive(len, n, prod), w, bound);
        if (len >= bound) return;
        for (const auto& t : transpositions) {
          if (t.max_symbol() < last_max) continue;
          dfs(compose(prod, Permutation::from_cycle(n, t)), merge_comp(comps, t.support_mask()),
              t.max_symbol(), len + 1);
        }
      };
  dfs(Permutation::identity(n), singleton_components(n), 0, 0);
  return sum;
}

void compare_elements(IdentityReport& rep, const std::string& where, const AlgebraElement& a,
                      const AlgebraElement& b) {
  for (const auto& [p, c] : a.coeffs()) {
    if (b.coeff(p) == c) continue;
    rep.mismatches.push_back(
        {where, p.to_string(), (c - b.coeff(p)).to_string(), c.to_string(),
         b.coeff(p).to_string()});
    return;
  }
  for (const auto& [p, c] : b.coeffs())
    if (a.coeff(p).is_zero() && !c.is_zero()) {
      rep.mismatches.push_back({where, p.to_string(), c.to_string(), "0", c.to_string()});
      return;
    }
}

void compare_restricted(IdentityReport& rep, const std::string& where, const RestrictedMap& a,
                        const RestrictedMap& b) {
  for (const auto& [key, c] : a) {
    auto it = b.find(key);
    QPoly other = it == b.end() ? QPoly() : it->second;
    if (other == c) continue;
    rep.mismatches.push_back({where + " (genus " + std::to_string(key.second) + ")",
                              key.first.to_string(), (c - other).to_string(), c.to_string(),
                              other.to_string()});
    return;
  }
  for (const auto& [key, c] : b)
    if (a.find(key) == a.end()) {
      rep.mismatches.push_back({where + " (genus " + std::to_string(key.second) + ")",
                                key.first.to_string(), c.to_string(), "0", c.to_string()});
      return;
    }
}

}  // namespace

AlgebraElement proper_signed_sum(int n, long long degree_bound) {
  return proper_sum_impl(n, degree_bound).total;
}

AlgebraElement inequivalent_signed_sum(int n, long long degree_bound) {
  return inequivalent_sum_impl(n, degree_bound, false).total;
}

AlgebraElement inequivalent_depth_sum(int n, long long degree_bound) {
  return inequivalent_sum_impl(n, degree_bound, true).total;
}

AlgebraElement monotone_length_sum(int n, long long degree_bound) {
  return monotone_sum_impl(n, degree_bound).total;
}

IdentityReport verify_qidentity(int n, long long degree_bound) {
  if (n > 4) throw ResourceLimit("verify_qidentity bounded to n <= 4");
  IdentityReport rep;
  rep.n = n;
  rep.degree_bound = degree_bound;

  AlgebraElement lhs = ga_invert(signature_weighted_sum(n, degree_bound));
  SumWithRestriction proper = proper_sum_impl(n, degree_bound);
  SumWithRestriction ineq = inequivalent_sum_impl(n, degree_bound, false);
  rep.proper_terms = proper.terms;
  rep.inequivalent_terms = ineq.terms;

  compare_elements(rep, "inverse vs proper", lhs, proper.total);
  compare_elements(rep, "proper vs inequivalent", proper.total, ineq.total);
  compare_restricted(rep, "transitive restriction, proper vs inequivalent", proper.by_genus,
                     ineq.by_genus);
  rep.ok = rep.mismatches.empty();
  return rep;
}

IdentityReport verify_uidentity(int n, long long degree_bound) {
  if (n > 4) throw ResourceLimit("verify_uidentity bounded to n <= 4");
  IdentityReport rep;
  rep.n = n;
  rep.degree_bound = degree_bound;

  SumWithRestriction mono = monotone_sum_impl(n, degree_bound);
  SumWithRestriction ineq = inequivalent_sum_impl(n, degree_bound, true);
  rep.proper_terms = mono.terms;
  rep.inequivalent_terms = ineq.terms;

  compare_elements(rep, "monotone vs inequivalent", mono.total, ineq.total);
  compare_restricted(rep, "transitive restriction, monotone vs inequivalent", mono.by_genus,
                     ineq.by_genus);
  rep.ok = rep.mismatches.empty();
  return rep;
}

JMReport jm_elementary_check(int n) {
  if (n > 5) throw ResourceLimit("jm_elementary_check bounded to n <= 5");
  JMReport rep;
  rep.n = n;
  std::vector<AlgebraElement> J;
  for (int k = 2; k <= n; ++k) {
    AlgebraElement jk(n, 0);
    for (int i = 1; i < k; ++i)
      jk.add(Permutation::from_cycles(n, {{i, k}}), QPoly::constant(1));
    J.push_back(jk);
  }
  std::vector<AlgebraElement> e(n, AlgebraElement(n, 0));
  e[0] = AlgebraElement::unit(n, 0);
  for (const auto& jk : J)
    for (int d = n - 1; d >= 1; --d) e[d] += ga_multiply(e[d - 1], jk);

  for (int k = 0; k <= n - 1; ++k) {
    AlgebraElement expected(n, 0);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      Permutation p = Permutation::from_images(images);
      if (perm_depth(p) == k) expected.add(p, QPoly::constant(1));
    } while (std::next_permutation(images.begin(), images.end()));
    if (!(e[k] == expected))
      rep.failures.push_back("e_" + std::to_string(k) + " does not equal the depth-" +
                             std::to_string(k) + " class sum");
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace permfact
