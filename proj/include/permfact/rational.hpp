#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "permfact/errors.hpp"

namespace permfact {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructors; 64-bit long covers our ranges
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long num, long long den = 1) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline Int factorial(long long n) {
  if (n < 0) throw DomainViolation("factorial of negative integer");
  Int r = 1;
  for (long long i = 2; i <= n; ++i) r *= static_cast<long>(i);
  return r;
}

// Binomial coefficient with integer (possibly negative) top, nonnegative k:
// C(x, k) = x(x-1)...(x-k+1)/k!.
inline Rat binomial(const Rat& x, long long k) {
  if (k < 0) return Rat(0);
  Rat num = 1;
  for (long long i = 0; i < k; ++i) num *= x - Rat(static_cast<long>(i));
  Rat r = num / Rat(factorial(k));
  r.canonicalize();
  return r;
}

inline Int binomial_int(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Int pow_int(const Int& b, long long e) {
  if (e < 0) throw DomainViolation("negative integer power");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Falling factorial x_(k) = x(x-1)...(x-k+1); negative index means
// x_(-k) = 1/(x+k)_(k). A zero factor in the denominator is a domain error.
inline Rat falling_factorial(const Rat& x, long long k) {
  if (k >= 0) {
    Rat r = 1;
    for (long long i = 0; i < k; ++i) r *= x - Rat(static_cast<long>(i));
    return r;
  }
  Rat den = falling_factorial(x + Rat(static_cast<long>(-k)), -k);
  if (den == 0) throw DomainViolation("pole in falling factorial convention x_(-k)");
  return Rat(1) / den;
}

// Rising factorial x^(k) = x(x+1)...(x+k-1); x^(-k) = 1/(x-k)^(k).
inline Rat rising_factorial(const Rat& x, long long k) {
  if (k >= 0) {
    Rat r = 1;
    for (long long i = 0; i < k; ++i) r *= x + Rat(static_cast<long>(i));
    return r;
  }
  Rat den = rising_factorial(x - Rat(static_cast<long>(-k)), -k);
  if (den == 0) throw DomainViolation("pole in rising factorial convention x^(-k)");
  return Rat(1) / den;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Int to_int_exact(const Rat& r, const std::string& what) {
  if (!is_integral(r)) throw InternalInconsistency(what + ": expected integer, got " + r.get_str());
  return r.get_num();
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace permfact
