#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permfact/permutation.hpp"
#include "permfact/xseries.hpp"

namespace permfact {

// phi = x (1 - Q(phi))^{-2}, Q(z) = sum_{k>=2} q_k z^{k-1}; univariate,
// coefficients symbolic in q. Runs exactly `order` fixed-point iterations.
XSeries solve_phi(int order);
// w = x e^{Q(w)}.
XSeries solve_w(int order);
// Specialized variants with q_k given numerically (values[i] is q_{i+2}).
XSeries solve_phi_at(int order, const std::vector<Rat>& qvalues);
XSeries solve_w_at(int order, const std::vector<Rat>& qvalues);

// Q(z) composed with a series; symbolic unless qvalues given.
XSeries q_of(const XSeries& z);
XSeries q_of_at(const XSeries& z, const std::vector<Rat>& qvalues);
XSeries qprime_of(const XSeries& z);
XSeries qprime_of_at(const XSeries& z, const std::vector<Rat>& qvalues);

enum class Family {
  Icgs,                  // inequivalent minimal transitive, m <= 3, symbolic q
  Icgs4Transpositions,   // m = 4, transpositions
  Ocgs,                  // ordinary cycle series, m <= 2, symbolic q
  Ocgs3Conjecture,       // conjectural m = 3 form
  Monotone,              // q_k = (-1)^k specialization / rising-operator form, m <= 5
  Hurwitz,               // transposition ordinary series, m <= 6
  KCycle,                // icgs specialized to one cycle length, m <= 3
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

enum class SeriesNorm { Inequivalent, OrdinaryCycle };

struct SeriesBuildResult {
  Family family;
  int m = 1;
  int order = 0;
  int k = 0;            // KCycle only
  bool d_form = false;  // series is D_x applied to the generating series
  bool symbolic_q = true;
  SeriesNorm norm = SeriesNorm::Inequivalent;
  XSeries series;
};

SeriesBuildResult build_series(Family family, int m, int order, int k = 0);

// Invert the series normalization back to a count. For symbolic families the
// beta exponents select the q-monomial; for specialized families beta only
// feeds the |beta|! factor of ordinary-cycle normalization.
Rat coeff_of(const SeriesBuildResult& r, const CycleType& alpha, const Signature& beta);
Int coeff_to_count(const SeriesBuildResult& r, const CycleType& alpha, const Signature& beta);

// Monotone series via the rising-operator closed form (any 1 <= m <= 5):
// (2D+1)^((m-3)) prod_i 2 phi_i/(1-phi_i) with phi the q_k = (-1)^k solution.
XSeries build_monotone_pgs(int m, int order);
// Monotone series by substituting q_k = (-1)^k into the m <= 3 construction.
SeriesBuildResult build_monotone_substitution(int m, int order);

// k-cycle specialization: the Theorem-style construction against the printed
// corollary closed forms; mismatching coefficients are reported, not thrown.
struct KCycleDiscrepancy {
  std::vector<int> x_exponents;
  Rat specialized;
  Rat printed;
};
struct KCycleReport {
  int m = 1, k = 2, order = 0;
  bool d_form = false;
  XSeries specialized;
  XSeries printed;
  bool matches = false;
  std::vector<KCycleDiscrepancy> discrepancies;
};
KCycleReport kcycle_specialize(int m, int k, int order);

// Symmetric helpers over any ring with +, * (used with XSeries and Rat).
// h_j(x1..xt) = sum_{i>=0} x_t^i h_{j-i}(x1..x_{t-1}).
template <typename T>
T h_complete(int j, const std::vector<T>& xs, const T& one, const T& zero) {
  if (j < 0) return zero;
  std::vector<T> h(j + 1, zero);
  h[0] = one;
  for (size_t t = 0; t < xs.size(); ++t) {
    std::vector<T> nh(j + 1, zero);
    nh[0] = one;
    for (int d = 1; d <= j; ++d) {
      T acc = h[d];
      T p = one;
      for (int i = 1; i <= d; ++i) {
        p = p * xs[t];
        acc = acc + p * h[d - i];
      }
      nh[d] = acc;
    }
    h = std::move(nh);
  }
  return h[j];
}

template <typename T>
T e_elementary(int j, const std::vector<T>& xs, const T& one, const T& zero) {
  if (j < 0 || j > static_cast<int>(xs.size())) return zero;
  std::vector<T> e(j + 1, zero);
  e[0] = one;
  for (size_t t = 0; t < xs.size(); ++t)
    for (int d = std::min<int>(j, static_cast<int>(t) + 1); d >= 1; --d)
      e[d] = e[d] + xs[t] * e[d - 1];
  return e[j];
}

// Two-row Schur via Jacobi-Trudi; zero when (a, b) is not a partition.
template <typename T>
T schur_two_row(int a, int b, const std::vector<T>& xs, const T& one, const T& zero) {
  if (b < 0 || a < b) return zero;
  T ha = h_complete(a, xs, one, zero);
  T hb = h_complete(b, xs, one, zero);
  T ha1 = h_complete(a + 1, xs, one, zero);
  T hb1 = b >= 1 ? h_complete(b - 1, xs, one, zero) : zero;
  return ha * hb - ha1 * hb1;
}

struct AppendixCase {
  std::string lemma;
  bool ok = false;
  std::string detail;
};
struct AppendixReport {
  bool ok = false;
  int instances = 0;
  std::vector<AppendixCase> failures;
};
AppendixReport verify_appendix(int instances = 100, unsigned long long seed = 20130901);

}  // namespace permfact
