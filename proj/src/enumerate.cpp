#include "permfact/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace permfact {

namespace {

constexpr int kMaxCycleAmbient = 7;
constexpr int kMaxPermAmbient = 5;
constexpr long long kMaxDepthBudget = 16;
constexpr long long kMaxLengthBudget = 16;

struct CycleCand {
  Cycle cycle;
  std::vector<int> inv;  // inverse action as images
  uint32_t support;
  int depth;
};

struct PermCand {
  Permutation perm;
  std::vector<int> inv;
  uint32_t support;
  int depth;
  Signature sig;
};

std::vector<CycleCand> cycle_candidates(int n, FactorKind kind, int k) {
  int lo = 2, hi = n;
  if (kind == FactorKind::Transpositions) hi = 2;
  if (kind == FactorKind::KCycles) lo = hi = k;
  std::vector<std::vector<int>> symbol_lists;
  // all cycles of length lo..hi: choose the least symbol first, then the rest
  // in any order; least-first form makes each cycle appear exactly once.
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int len_target) {
    if (static_cast<int>(cur.size()) == len_target) {
      symbol_lists.push_back(cur);
      return;
    }
    for (int s = 1; s <= n; ++s) {
      if (std::find(cur.begin(), cur.end(), s) != cur.end()) continue;
      if (!cur.empty() && s < cur.front()) continue;
      if (cur.empty()) {
        cur.push_back(s);
        extend(len_target);
        cur.pop_back();
        continue;
      }
      if (s == cur.front()) continue;
      cur.push_back(s);
      extend(len_target);
      cur.pop_back();
    }
  };
  for (int len = lo; len <= hi && len <= n; ++len) extend(len);
  std::sort(symbol_lists.begin(), symbol_lists.end());
  std::vector<CycleCand> out;
  out.reserve(symbol_lists.size());
  for (auto& syms : symbol_lists) {
    CycleCand c{Cycle(syms), {}, 0, static_cast<int>(syms.size()) - 1};
    Permutation p = Permutation::from_cycle(n, c.cycle);
    c.inv = p.inverse().images();
    c.support = c.cycle.support_mask();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PermCand> perm_candidates(int n, bool include_identity) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<PermCand> out;
  do {
    Permutation p = Permutation::from_images(images);
    if (!include_identity && p.is_identity()) continue;
    PermCand c{p, p.inverse().images(), p.support_mask(), perm_depth(p), p.signature()};
    out.push_back(std::move(c));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(out.begin(), out.end(),
            [](const PermCand& a, const PermCand& b) { return a.perm < b.perm; });
  return out;
}

int residual_depth(const std::vector<int>& rho) {
  int n = static_cast<int>(rho.size());
  int cycles = 0;
  uint32_t seen = 0;
  for (int s = 0; s < n; ++s) {
    if (seen & (1u << s)) continue;
    ++cycles;
    int cur = s;
    while (!(seen & (1u << cur))) {
      seen |= 1u << cur;
      cur = rho[cur] - 1;
    }
  }
  return n - cycles;
}

std::vector<uint32_t> merge_components(const std::vector<uint32_t>& comps, uint32_t sup) {
  std::vector<uint32_t> next;
  next.reserve(comps.size());
  uint32_t merged = sup;
  for (uint32_t c : comps) {
    if (c & merged)
      merged |= c;
    else
      next.push_back(c);
  }
  next.push_back(merged);
  return next;
}

struct Budgets {
  bool use_sig = false;
  std::vector<long long> sig_rem;  // index i <-> cycle length i+2
  long long sig_depth_rem = 0;
  bool use_depth = false;
  long long depth_rem = 0;
  bool use_len = false;
  long long len_rem = 0;
  int max_factor_depth = 1;

  long long max_remaining_depth() const {
    long long cap = kMaxDepthBudget + 1;
    if (use_sig) cap = std::min(cap, sig_depth_rem);
    if (use_depth) cap = std::min(cap, depth_rem);
    if (use_len) cap = std::min(cap, len_rem * max_factor_depth);
    return cap;
  }
  bool exhausted() const {
    if (use_len) return len_rem == 0;
    if (use_sig) return sig_depth_rem == 0;
    return depth_rem == 0;
  }
  bool consumed_exactly() const {
    bool ok = true;
    if (use_sig) ok = ok && sig_depth_rem == 0;
    if (use_depth) ok = ok && depth_rem == 0;
    if (use_len) ok = ok && len_rem == 0;
    return ok;
  }
};

Budgets make_budgets(const EnumSpec& spec, int n) {
  int set_count = (spec.signature ? 1 : 0) + (spec.depth ? 1 : 0) + (spec.length ? 1 : 0);
  if (set_count > 1)
    throw DomainViolation("enumeration constraint: at most one of signature/depth/length");
  if (set_count == 0 && !spec.genus)
    throw DomainViolation("enumeration requires a signature, depth, length or genus constraint");
  if (spec.genus && !spec.transitive_only)
    throw DomainViolation("a genus constraint requires transitive_only");
  if (spec.monotone_only && spec.kind != FactorKind::Transpositions)
    throw DomainViolation("monotone enumeration requires transposition factors");

  Budgets b;
  switch (spec.kind) {
    case FactorKind::Transpositions: b.max_factor_depth = 1; break;
    case FactorKind::KCycles: b.max_factor_depth = spec.k - 1; break;
    default: b.max_factor_depth = n - 1; break;
  }
  if (spec.signature) {
    b.use_sig = true;
    const auto& raw = spec.signature->raw();
    b.sig_rem.assign(raw.begin(), raw.end());
    b.sig_depth_rem = spec.signature->depth();
  }
  if (spec.depth) {
    b.use_depth = true;
    b.depth_rem = *spec.depth;
  }
  if (spec.length) {
    b.use_len = true;
    b.len_rem = *spec.length;
  }
  if (spec.genus) {
    long long g = *spec.genus;
    if (g < 0) throw DomainViolation("genus must be nonnegative");
    long long d = n + spec.target.cycle_count() - 2 + 2 * g;
    if (spec.signature && spec.signature->depth() != d)
      throw DomainViolation("signature depth inconsistent with genus constraint");
    if (spec.depth && *spec.depth != d)
      throw DomainViolation("depth inconsistent with genus constraint");
    if (!b.use_sig && !b.use_depth) {
      b.use_depth = true;
      b.depth_rem = d;
    }
  }
  long long depth_cap = b.use_sig ? b.sig_depth_rem : (b.use_depth ? b.depth_rem : 0);
  if (depth_cap > kMaxDepthBudget) throw ResourceLimit("depth budget exceeds desk-scale bound");
  if (b.use_len && b.len_rem > kMaxLengthBudget)
    throw ResourceLimit("length budget exceeds desk-scale bound");
  if (b.use_len && !b.use_sig && !b.use_depth && spec.kind == FactorKind::AnyPerms) {
    // fine: length alone terminates
  }
  if (!b.use_len && spec.kind == FactorKind::AnyPerms)
    throw DomainViolation("identity factors require a length constraint");
  return b;
}

template <typename Cand, typename MakeFact>
class Search {
 public:
  Search(int n, const std::vector<Cand>& cands, Budgets budgets, bool transitive_only,
         bool monotone_only, std::vector<int> rho0, MakeFact make)
      : n_(n),
        cands_(cands),
        budgets_(budgets),
        transitive_only_(transitive_only),
        monotone_only_(monotone_only),
        rho_(std::move(rho0)),
        make_(make) {}

  int first_mod = 1;
  int first_rem = 0;

  template <typename Emit>
  bool run(const Emit& emit) {
    std::vector<uint32_t> comps;
    comps.reserve(n_);
    for (int i = 0; i < n_; ++i) comps.push_back(1u << i);
    return dfs(comps, 0, 0, emit);
  }

 private:
  template <typename Emit>
  bool dfs(const std::vector<uint32_t>& comps, int last_max, int level, const Emit& emit) {
    long long cap = budgets_.max_remaining_depth();
    int drho = residual_depth(rho_);
    if (drho > cap) return true;
    if (transitive_only_ && static_cast<long long>(comps.size()) - 1 > cap) return true;
    if (budgets_.exhausted()) {
      if (!budgets_.consumed_exactly()) return true;
      if (drho != 0) return true;
      if (transitive_only_ && comps.size() != 1) return true;
      return emit(stack_);
    }
    for (size_t ci = 0; ci < cands_.size(); ++ci) {
      if (level == 0 && static_cast<int>(ci % first_mod) != first_rem) continue;
      const Cand& cand = cands_[ci];
      if (!admissible(cand, last_max)) continue;
      consume(cand);
      std::vector<int> saved_rho = rho_;
      for (int i = 0; i < n_; ++i) rho_[i] = cand.inv[saved_rho[i] - 1];
      stack_.push_back(cand);
      std::vector<uint32_t> comps2 =
          transitive_only_ ? merge_components(comps, cand.support) : comps;
      bool keep_going = dfs(comps2, next_last_max(cand), level + 1, emit);
      stack_.pop_back();
      rho_ = std::move(saved_rho);
      restore(cand);
      if (!keep_going) return false;
    }
    return true;
  }

  bool admissible(const CycleCand& c, int last_max) const {
    if (budgets_.use_sig) {
      int idx = c.depth - 1;  // length-2 cycle at index 0
      if (idx >= static_cast<int>(budgets_.sig_rem.size()) || budgets_.sig_rem[idx] == 0)
        return false;
    }
    if (budgets_.use_depth && c.depth > budgets_.depth_rem) return false;
    if (budgets_.use_len && budgets_.len_rem == 0) return false;
    if (monotone_only_ && c.cycle.max_symbol() < last_max) return false;
    return true;
  }
  bool admissible(const PermCand& c, int) const {
    if (budgets_.use_sig) {
      const auto& raw = c.sig.raw();
      if (raw.size() > budgets_.sig_rem.size()) return false;
      for (size_t i = 0; i < raw.size(); ++i)
        if (raw[i] > budgets_.sig_rem[i]) return false;
    }
    if (budgets_.use_depth && c.depth > budgets_.depth_rem) return false;
    if (budgets_.use_len && budgets_.len_rem == 0) return false;
    return true;
  }

  void consume(const CycleCand& c) {
    if (budgets_.use_sig) {
      budgets_.sig_rem[c.depth - 1] -= 1;
      budgets_.sig_depth_rem -= c.depth;
    }
    if (budgets_.use_depth) budgets_.depth_rem -= c.depth;
    if (budgets_.use_len) budgets_.len_rem -= 1;
  }
  void restore(const CycleCand& c) {
    if (budgets_.use_sig) {
      budgets_.sig_rem[c.depth - 1] += 1;
      budgets_.sig_depth_rem += c.depth;
    }
    if (budgets_.use_depth) budgets_.depth_rem += c.depth;
    if (budgets_.use_len) budgets_.len_rem += 1;
  }
  void consume(const PermCand& c) {
    if (budgets_.use_sig) {
      const auto& raw = c.sig.raw();
      for (size_t i = 0; i < raw.size(); ++i) budgets_.sig_rem[i] -= raw[i];
      budgets_.sig_depth_rem -= c.sig.depth();
    }
    if (budgets_.use_depth) budgets_.depth_rem -= c.depth;
    if (budgets_.use_len) budgets_.len_rem -= 1;
  }
  void restore(const PermCand& c) {
    if (budgets_.use_sig) {
      const auto& raw = c.sig.raw();
      for (size_t i = 0; i < raw.size(); ++i) budgets_.sig_rem[i] += raw[i];
      budgets_.sig_depth_rem += c.sig.depth();
    }
    if (budgets_.use_depth) budgets_.depth_rem += c.depth;
    if (budgets_.use_len) budgets_.len_rem += 1;
  }

  static int next_last_max(const CycleCand& c) { return c.cycle.max_symbol(); }
  static int next_last_max(const PermCand&) { return 0; }

  int n_;
  const std::vector<Cand>& cands_;
  Budgets budgets_;
  bool transitive_only_;
  bool monotone_only_;
  std::vector<int> rho_;
  std::vector<Cand> stack_;
  MakeFact make_;
};

void check_cycle_bounds(const EnumSpec& spec) {
  int n = spec.target.size();
  if (n > kMaxCycleAmbient)
    throw ResourceLimit("cycle-factor enumeration bounded to n <= " +
                        std::to_string(kMaxCycleAmbient));
  if (spec.kind == FactorKind::KCycles && (spec.k < 2 || spec.k > n))
    throw DomainViolation("k-cycle factors require 2 <= k <= n");
}

void check_perm_bounds(const EnumSpec& spec) {
  if (spec.target.size() > kMaxPermAmbient)
    throw ResourceLimit("arbitrary-factor enumeration bounded to n <= " +
                        std::to_string(kMaxPermAmbient));
}

struct MakeCycleFact {};
struct MakePermFact {};

template <typename Emit>
bool run_cycle_search(const EnumSpec& spec, int first_mod, int first_rem, const Emit& emit) {
  check_cycle_bounds(spec);
  if (spec.kind != FactorKind::Cycles && spec.kind != FactorKind::Transpositions &&
      spec.kind != FactorKind::KCycles)
    throw DomainViolation("cycle enumeration requires a cycle factor kind");
  int n = spec.target.size();
  auto cands = cycle_candidates(n, spec.kind, spec.k);
  Budgets budgets = make_budgets(spec, n);
  Search<CycleCand, MakeCycleFact> search(n, cands, budgets, spec.transitive_only,
                                          spec.monotone_only, spec.target.images(),
                                          MakeCycleFact{});
  search.first_mod = first_mod;
  search.first_rem = first_rem;
  return search.run([&](const std::vector<CycleCand>& stack) {
    CycleFactorization f;
    f.n = n;
    f.factors.reserve(stack.size());
    for (const auto& c : stack) f.factors.push_back(c.cycle);
    return emit(f);
  });
}

template <typename Emit>
bool run_perm_search(const EnumSpec& spec, int first_mod, int first_rem, const Emit& emit) {
  check_perm_bounds(spec);
  if (spec.kind != FactorKind::ProperPerms && spec.kind != FactorKind::AnyPerms)
    throw DomainViolation("general enumeration requires a permutation factor kind");
  int n = spec.target.size();
  auto cands = perm_candidates(n, spec.kind == FactorKind::AnyPerms);
  Budgets budgets = make_budgets(spec, n);
  Search<PermCand, MakePermFact> search(n, cands, budgets, spec.transitive_only,
                                        spec.monotone_only, spec.target.images(), MakePermFact{});
  search.first_mod = first_mod;
  search.first_rem = first_rem;
  return search.run([&](const std::vector<PermCand>& stack) {
    GeneralFactorization f;
    f.n = n;
    f.factors.reserve(stack.size());
    for (const auto& c : stack) f.factors.push_back(c.perm);
    return emit(f);
  });
}

// Partition the search by first factor; merge per-worker tallies in worker order.
template <typename Tally, typename Runner>
Tally parallel_count(int jobs, const Runner& runner) {
  if (jobs <= 1) return runner(1, 0);
  std::vector<Tally> tallies(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] { tallies[w] = runner(jobs, w); });
  for (auto& t : workers) t.join();
  Tally total{};
  for (const auto& t : tallies) total += t;
  return total;
}

}  // namespace

void enumerate_cycle_factorizations(const EnumSpec& spec,
                                    const std::function<bool(const CycleFactorization&)>& emit) {
  run_cycle_search(spec, 1, 0, emit);
}

void enumerate_general_factorizations(
    const EnumSpec& spec, const std::function<bool(const GeneralFactorization&)>& emit) {
  run_perm_search(spec, 1, 0, emit);
}

Permutation class_representative(const CycleType& alpha) {
  int n = alpha.size();
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : alpha.parts()) {
    if (part >= 2) {
      std::vector<int> c(part);
      std::iota(c.begin(), c.end(), next);
      cycles.push_back(std::move(c));
    }
    next += part;
  }
  return Permutation::from_cycles(n, cycles);
}

long long minimal_depth(const CycleType& alpha, long long g) {
  return alpha.size() + alpha.length() - 2 + 2 * g;
}

long long count_inequivalent(const CycleType& alpha, const Signature& beta, long long g,
                             int jobs) {
  if (beta.depth() != minimal_depth(alpha, g)) return 0;
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::Cycles;
  spec.signature = beta;
  spec.transitive_only = true;
  return parallel_count<long long>(jobs, [&](int mod, int rem) {
    long long c = 0;
    run_cycle_search(spec, mod, rem, [&](const CycleFactorization& f) {
      if (is_canonical(f)) ++c;
      return true;
    });
    return c;
  });
}

long long count_ordinary_cycle(const CycleType& alpha, const Signature& beta, long long g,
                               int jobs) {
  if (beta.depth() != minimal_depth(alpha, g)) return 0;
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::Cycles;
  spec.signature = beta;
  spec.transitive_only = true;
  return parallel_count<long long>(jobs, [&](int mod, int rem) {
    long long c = 0;
    run_cycle_search(spec, mod, rem, [&](const CycleFactorization&) {
      ++c;
      return true;
    });
    return c;
  });
}

long long count_monotone(const CycleType& alpha, long long g) {
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::Transpositions;
  spec.transitive_only = true;
  spec.genus = g;
  spec.monotone_only = true;
  long long c = 0;
  enumerate_cycle_factorizations(spec, [&](const CycleFactorization&) {
    ++c;
    return true;
  });
  return c;
}

long long count_proper(const CycleType& alpha, long long r, long long g) {
  if (r < 0) return 0;
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::ProperPerms;
  spec.length = r;
  spec.genus = g;
  spec.transitive_only = true;
  long long c = 0;
  enumerate_general_factorizations(spec, [&](const GeneralFactorization&) {
    ++c;
    return true;
  });
  return c;
}

namespace {
template <typename Key>
struct HistTally {
  std::map<Key, long long> hist;
  HistTally& operator+=(const HistTally& o) {
    for (const auto& [k, v] : o.hist) hist[k] += v;
    return *this;
  }
};
}  // namespace

std::map<long long, long long> proper_by_length(const CycleType& alpha, long long g, int jobs) {
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::ProperPerms;
  spec.genus = g;
  spec.transitive_only = true;
  auto tally = parallel_count<HistTally<long long>>(jobs, [&](int mod, int rem) {
    HistTally<long long> t;
    run_perm_search(spec, mod, rem, [&](const GeneralFactorization& f) {
      t.hist[f.length()] += 1;
      return true;
    });
    return t;
  });
  return tally.hist;
}

std::map<long long, long long> inequivalent_by_length(const CycleType& alpha, long long g,
                                                      int jobs) {
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::Cycles;
  spec.genus = g;
  spec.transitive_only = true;
  auto tally = parallel_count<HistTally<long long>>(jobs, [&](int mod, int rem) {
    HistTally<long long> t;
    run_cycle_search(spec, mod, rem, [&](const CycleFactorization& f) {
      if (is_canonical(f)) t.hist[f.length()] += 1;
      return true;
    });
    return t;
  });
  return tally.hist;
}

std::map<Signature, long long> inequivalent_by_signature(const CycleType& alpha, long long g,
                                                         int jobs) {
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::Cycles;
  spec.genus = g;
  spec.transitive_only = true;
  auto tally = parallel_count<HistTally<Signature>>(jobs, [&](int mod, int rem) {
    HistTally<Signature> t;
    run_cycle_search(spec, mod, rem, [&](const CycleFactorization& f) {
      if (is_canonical(f)) t.hist[signature_and_depth(f).first] += 1;
      return true;
    });
    return t;
  });
  return tally.hist;
}

std::map<Signature, long long> ordinary_cycle_by_signature(const CycleType& alpha, long long g,
                                                           int jobs) {
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::Cycles;
  spec.genus = g;
  spec.transitive_only = true;
  auto tally = parallel_count<HistTally<Signature>>(jobs, [&](int mod, int rem) {
    HistTally<Signature> t;
    run_cycle_search(spec, mod, rem, [&](const CycleFactorization& f) {
      t.hist[signature_and_depth(f).first] += 1;
      return true;
    });
    return t;
  });
  return tally.hist;
}

Rat count_all(const CycleType& alpha, long long r, long long g) {
  auto proper = proper_by_length(alpha, g);
  Rat total = 0;
  for (const auto& [k, count] : proper)
    total += binomial(Rat(static_cast<long>(r)), k) * Rat(static_cast<long>(count));
  return total;
}

long long count_all_direct(const CycleType& alpha, long long r, long long g) {
  if (r < 0) throw DomainViolation("direct enumeration requires r >= 0");
  EnumSpec spec;
  spec.target = class_representative(alpha);
  spec.kind = FactorKind::AnyPerms;
  spec.length = r;
  spec.genus = g;
  spec.transitive_only = true;
  long long c = 0;
  enumerate_general_factorizations(spec, [&](const GeneralFactorization&) {
    ++c;
    return true;
  });
  return c;
}

ConnectionsReport verify_connections(const CycleType& alpha, long long g, int jobs) {
  ConnectionsReport rep;
  rep.alpha = alpha;
  rep.g = g;
  long long sign = ((alpha.size() + alpha.length()) % 2 == 0) ? 1 : -1;
  rep.monotone_side = make_int(sign) * make_int(count_monotone(alpha, g));
  Int isum = 0;
  for (const auto& [r, c] : inequivalent_by_length(alpha, g, jobs))
    isum += make_int((r % 2 == 0) ? c : -c);
  rep.inequivalent_side = isum;
  auto proper = proper_by_length(alpha, g, jobs);
  Int psum = 0;
  for (const auto& [r, c] : proper) psum += make_int((r % 2 == 0) ? c : -c);
  rep.proper_side = psum;
  Rat poly = 0;
  for (const auto& [k, count] : proper)
    poly += binomial(Rat(-1), k) * Rat(static_cast<long>(count));
  rep.polynomial_side = poly;
  rep.ok = rep.monotone_side == rep.inequivalent_side &&
           rep.inequivalent_side == rep.proper_side &&
           Rat(rep.proper_side) == rep.polynomial_side;
  return rep;
}

std::vector<Signature> signatures_with_depth(long long d) {
  std::vector<Signature> out;
  std::vector<int> parts;
  std::function<void(long long, int)> rec = [&](long long rem, int max_part) {
    if (rem == 0) {
      Signature b;
      for (int p : parts) b.add(p + 1);
      out.push_back(b);
      return;
    }
    for (int p = std::min<long long>(max_part, rem); p >= 1; --p) {
      parts.push_back(p);
      rec(rem - p, p);
      parts.pop_back();
    }
  };
  rec(d, static_cast<int>(d));
  return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int max_part) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace permfact
