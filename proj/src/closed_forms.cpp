#include "permfact/closed_forms.hpp"

namespace permfact {

Int hurwitz_count(const CycleType& alpha) {
  long long n = alpha.size();
  long long m = alpha.length();
  Rat r = Rat(factorial(n + m - 2));
  if (m >= 3)
    r *= Rat(pow_int(make_int(n), m - 3));
  else
    r /= Rat(pow_int(make_int(n), 3 - m));
  for (int a : alpha.parts()) r *= Rat(pow_int(make_int(a), a)) / Rat(factorial(a - 1));
  r.canonicalize();
  return to_int_exact(r, "hurwitz formula");
}

Int fullcycle_signature_count(int n, const Signature& beta) {
  if (beta.depth() != n - 1)
    throw DomainViolation("full-cycle signature count requires depth(beta) = n-1");
  long long l = beta.total();
  Int r = pow_int(make_int(n), l - 1) * factorial(l);
  for (size_t i = 0; i < beta.raw().size(); ++i) {
    Int d = factorial(beta.raw()[i]);
    internal_check(r % d == 0, "full-cycle signature formula non-integral");
    r /= d;
  }
  return r;
}

Int springer_count(int n, const Signature& beta) {
  if (beta.depth() != n - 1)
    throw DomainViolation("inequivalent full-cycle count requires depth(beta) = n-1");
  long long l = beta.total();
  Rat r = Rat(factorial(2 * n + l - 2)) / Rat(factorial(2 * n - 1));
  for (size_t i = 0; i < beta.raw().size(); ++i) r /= Rat(factorial(beta.raw()[i]));
  r.canonicalize();
  return to_int_exact(r, "springer formula");
}

Int eidswick_longyear(int n) {
  if (n < 2) throw DomainViolation("eidswick_longyear requires n >= 2");
  Rat r = Rat(binomial_int(3 * n - 3, n - 2)) / Rat(static_cast<long>(n - 1));
  r.canonicalize();
  return to_int_exact(r, "eidswick-longyear formula");
}

Int two_part_transpositions(int n, int m) {
  if (n < 1 || m < 1) throw DomainViolation("two_part_transpositions requires n, m >= 1");
  Int sum = 0;
  for (long long k = 0; k <= std::max(n, m); ++k)
    sum += binomial_int(3 * n, n - 1 - k) * binomial_int(3 * m, m - 1 - k);
  Rat r = make_rat(2LL * n * m) / Rat(static_cast<long>(n + m)) * Rat(sum);
  r.canonicalize();
  return to_int_exact(r, "two-part transposition formula");
}

namespace {

// dense univariate polynomials over Rat, for evaluating the constellation
// expression as the polynomial identity it is
using RPoly = std::vector<Rat>;

RPoly rp_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// exact division; the remainder must vanish
RPoly rp_div_exact(RPoly num, const RPoly& den) {
  if (den.empty()) throw DomainViolation("constellation: zero denominator factor");
  RPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
  for (size_t i = q.size(); i-- > 0;) {
    Rat f = num[i + den.size() - 1] / den.back();
    q[i] = f;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  for (const Rat& c : num)
    if (c != 0)
      throw DomainViolation(
          "constellation: pole in a negative-index factorial convention does not cancel");
  return q;
}

Rat rp_eval(const RPoly& p, const Rat& x) {
  Rat v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

}  // namespace

// The factored expression is assembled as a rational function of r and
// reduced by exact polynomial division before evaluating: the identity is
// polynomial in r, so the negative-index conventions x_(-k) = 1/(x+k)_(k)
// contribute denominator factors that always cancel.
Rat constellation_count(const CycleType& alpha, long long r) {
  long long n = alpha.size();
  long long m = alpha.length();
  RPoly num = {Rat(0), Rat(1)};  // the leading factor r
  RPoly den = {Rat(1)};
  // ((r-1)n - 1)_(m-3); x = n r - (n+1) as a polynomial in r
  auto x_shift = [&](long long s) { return RPoly{Rat(static_cast<long>(-(n + 1) + s)), Rat(static_cast<long>(n))}; };
  if (m >= 3) {
    for (long long t = 0; t < m - 3; ++t) num = rp_mul(num, x_shift(-t));
  } else {
    for (long long j = 1; j <= 3 - m; ++j) den = rp_mul(den, x_shift(j));
  }
  Rat denom_scalar = 1;
  for (int a : alpha.parts()) {
    // a * C(r a - 1, a) = a * prod_{t=0..a-1} (a r - 1 - t) / a!
    for (long long t = 0; t < a; ++t)
      num = rp_mul(num, RPoly{Rat(static_cast<long>(-1 - t)), Rat(static_cast<long>(a))});
    denom_scalar *= Rat(factorial(a)) / Rat(static_cast<long>(a));
  }
  RPoly reduced = rp_div_exact(num, den);
  Rat value = rp_eval(reduced, Rat(static_cast<long>(r))) / denom_scalar;
  value.canonicalize();
  return value;
}

Int goulden_monotone(const CycleType& alpha) {
  long long n = alpha.size();
  long long m = alpha.length();
  Rat result = rising_factorial(Rat(static_cast<long>(2 * n + 1)), m - 3);
  for (int a : alpha.parts()) result *= Rat(static_cast<long>(a)) * Rat(binomial_int(2 * a, a));
  result.canonicalize();
  return to_int_exact(result, "monotone closed form");
}

}  // namespace permfact
