#include "permfact/series.hpp"

#include <algorithm>
#include <random>

#include "permfact/rational.hpp"

namespace permfact {

namespace {

// Q(z) = sum_{k=2}^{K} q_k z^{k-1} with K = order+1 (higher k cannot reach
// the truncation order through z^{k-1}).
std::vector<QPoly> q_outer(int order) {
  std::vector<QPoly> outer(order + 1, QPoly::zero());
  for (int j = 1; j <= order; ++j) outer[j] = QPoly::variable(j - 1);
  return outer;
}

std::vector<QPoly> q_outer_at(int order, const std::vector<Rat>& qvalues) {
  std::vector<QPoly> outer(order + 1, QPoly::zero());
  for (int j = 1; j <= order; ++j) {
    Rat v = (j - 1) < static_cast<int>(qvalues.size()) ? qvalues[j - 1] : Rat(0);
    outer[j] = QPoly::constant(v);
  }
  return outer;
}

// Q'(z) = sum_k (k-1) q_k z^{k-2}.
std::vector<QPoly> qprime_outer(int order) {
  std::vector<QPoly> outer(order + 1, QPoly::zero());
  for (int j = 0; j <= order - 1; ++j) {
    QPoly v = QPoly::variable(j);
    v.mul_scalar(Rat(j + 1));
    outer[j] = v;
  }
  return outer;
}

std::vector<QPoly> qprime_outer_at(int order, const std::vector<Rat>& qvalues) {
  std::vector<QPoly> outer(order + 1, QPoly::zero());
  for (int j = 0; j <= order - 1; ++j) {
    Rat v = j < static_cast<int>(qvalues.size()) ? qvalues[j] : Rat(0);
    outer[j] = QPoly::constant(v * Rat(j + 1));
  }
  return outer;
}

// (1 - u)^{-2} = sum_k (k+1) u^k applied to u of positive valuation.
XSeries inv_square_one_minus(const XSeries& u) {
  std::vector<QPoly> outer(u.order() + 1);
  for (int k = 0; k <= u.order(); ++k) outer[k] = QPoly::constant(Rat(k + 1));
  return u.compose_polynomial(outer);
}

XSeries solve_phi_generic(int order, const std::vector<QPoly>& outer, long long depth_cap) {
  XSeries x = XSeries::variable(1, order, 0, depth_cap);
  XSeries phi(1, order, depth_cap);
  for (int it = 0; it < order; ++it) {
    XSeries qphi = phi.compose_polynomial(outer);
    phi = x * inv_square_one_minus(qphi);
  }
  return phi;
}

XSeries solve_w_generic(int order, const std::vector<QPoly>& outer, long long depth_cap) {
  XSeries x = XSeries::variable(1, order, 0, depth_cap);
  XSeries w(1, order, depth_cap);
  for (int it = 0; it < order; ++it) w = x * w.compose_polynomial(outer).exp_series();
  return w;
}

XSeries one_series(int m, int work, long long cap) {
  return XSeries::constant(m, work, QPoly::constant(1), cap);
}

}  // namespace

XSeries solve_phi(int order) { return solve_phi_generic(order, q_outer(order), order + 4); }
XSeries solve_w(int order) { return solve_w_generic(order, q_outer(order), order + 4); }
XSeries solve_phi_at(int order, const std::vector<Rat>& qvalues) {
  return solve_phi_generic(order, q_outer_at(order, qvalues), -1);
}
XSeries solve_w_at(int order, const std::vector<Rat>& qvalues) {
  return solve_w_generic(order, q_outer_at(order, qvalues), -1);
}

XSeries q_of(const XSeries& z) { return z.compose_polynomial(q_outer(z.order())); }
XSeries q_of_at(const XSeries& z, const std::vector<Rat>& qvalues) {
  return z.compose_polynomial(q_outer_at(z.order(), qvalues));
}
XSeries qprime_of(const XSeries& z) { return z.compose_polynomial(qprime_outer(z.order())); }
XSeries qprime_of_at(const XSeries& z, const std::vector<Rat>& qvalues) {
  return z.compose_polynomial(qprime_outer_at(z.order(), qvalues));
}

Family family_from_name(const std::string& name) {
  if (name == "icgs") return Family::Icgs;
  if (name == "icgs4-transpositions" || name == "icgs4_transpositions")
    return Family::Icgs4Transpositions;
  if (name == "ocgs") return Family::Ocgs;
  if (name == "ocgs3-conjecture" || name == "ocgs3_conjecture") return Family::Ocgs3Conjecture;
  if (name == "monotone") return Family::Monotone;
  if (name == "hurwitz") return Family::Hurwitz;
  if (name == "kcycle") return Family::KCycle;
  throw UnsupportedFamily("unknown series family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Icgs: return "icgs";
    case Family::Icgs4Transpositions: return "icgs4-transpositions";
    case Family::Ocgs: return "ocgs";
    case Family::Ocgs3Conjecture: return "ocgs3-conjecture";
    case Family::Monotone: return "monotone";
    case Family::Hurwitz: return "hurwitz";
    case Family::KCycle: return "kcycle";
  }
  throw UnsupportedFamily("bad family enum");
}

namespace {

struct IcgsInputs {
  std::vector<XSeries> phi, Q, S, P;
  int work;
};

IcgsInputs icgs_inputs(int m, int work, const std::optional<std::vector<Rat>>& qvalues) {
  long long cap = qvalues ? -1 : work + m;
  XSeries uni = qvalues ? solve_phi_at(work, *qvalues)
                        : solve_phi_generic(work, q_outer(work), cap);
  IcgsInputs in;
  in.work = work;
  auto outer = qvalues ? q_outer_at(work, *qvalues) : q_outer(work);
  auto outer_p = qvalues ? qprime_outer_at(work, *qvalues) : qprime_outer(work);
  XSeries one = one_series(m, work, cap);
  for (int i = 0; i < m; ++i) {
    XSeries phi_i = uni.embed(m, i);
    XSeries q_i = phi_i.compose_polynomial(outer);
    XSeries qp_i = phi_i.compose_polynomial(outer_p);
    XSeries s_i = one - q_i;
    XSeries p_i = one - q_i - phi_i.mul_scalar(2) * qp_i;
    in.phi.push_back(phi_i);
    in.Q.push_back(q_i);
    in.S.push_back(s_i);
    in.P.push_back(p_i);
  }
  return in;
}

XSeries at_order(const XSeries& s, int ord) { return s.truncate(ord); }

// D icGS1 = phi (1 - Q(phi)), univariate.
XSeries build_icgs1(int order, const std::optional<std::vector<Rat>>& qvalues) {
  long long cap = qvalues ? -1 : order + 2;
  XSeries uni = qvalues ? solve_phi_at(order, *qvalues)
                        : solve_phi_generic(order, q_outer(order), cap);
  XSeries q = qvalues ? q_of_at(uni, *qvalues) : q_of(uni);
  return uni * (one_series(1, order, cap) - q);
}

// D icGS2 = phi1 phi2 (S1/P1 - S2/P2) (Q1 - Q2) / ((phi1-phi2)(phi1 S1 - phi2 S2)).
XSeries build_icgs2(int order, const std::optional<std::vector<Rat>>& qvalues) {
  int work = order + 2;
  IcgsInputs in = icgs_inputs(2, work, qvalues);
  XSeries sp_diff =
      (in.S[0].divide_unit(in.P[0]) - in.S[1].divide_unit(in.P[1])).divide_linear_difference(0, 1);
  XSeries a = (in.Q[0] - in.Q[1]).divide_linear_difference(0, 1);
  XSeries u = (in.phi[0] - in.phi[1]).divide_linear_difference(0, 1);
  XSeries w = (in.phi[0] * in.S[0] - in.phi[1] * in.S[1]).divide_linear_difference(0, 1);
  int w1 = work - 1;
  XSeries num = at_order(in.phi[0] * in.phi[1], w1) * sp_diff * a;
  return num.divide_unit(u * w).truncate(order);
}

// icGS3 = 2 phi1 phi2 phi3 sum_i (1/P_i) prod_{j != i} (Q_i-Q_j) /
//         ((phi_i-phi_j)(phi_i S_i - phi_j S_j)).
XSeries build_icgs3(int order, const std::optional<std::vector<Rat>>& qvalues) {
  int work = order + 5;
  IcgsInputs in = icgs_inputs(3, work, qvalues);
  XSeries A[3][3], U[3][3], W[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      A[i][j] = (in.Q[i] - in.Q[j]).divide_linear_difference(i, j);
      U[i][j] = (in.phi[i] - in.phi[j]).divide_linear_difference(i, j);
      W[i][j] = (in.phi[i] * in.S[i] - in.phi[j] * in.S[j]).divide_linear_difference(i, j);
    }
  int w1 = work - 1;
  XSeries prefix = at_order(in.phi[0] * in.phi[1] * in.phi[2], w1).mul_scalar(2);
  std::vector<XSeries> C;
  for (int i = 0; i < 3; ++i) {
    XSeries t = prefix.divide_unit(at_order(in.P[i], w1));
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      int a = std::min(i, j), b = std::max(i, j);
      t = (t * A[a][b]).divide_unit(U[a][b] * W[a][b]);
    }
    C.push_back(t);
  }
  return alternating_pole_sum(C).truncate(order);
}

// D ocGS1 = w1; m = 2: w1 w2 (1/T1 - 1/T2)(Q1 - Q2)/(w1 - w2)^2.
XSeries build_ocgs1(int order) { return solve_w_generic(order, q_outer(order), order + 2); }

XSeries build_ocgs2(int order) {
  int work = order + 2;
  long long cap = work + 2;
  XSeries uni = solve_w_generic(work, q_outer(work), cap);
  auto outer = q_outer(work);
  auto outer_p = qprime_outer(work);
  XSeries one = one_series(2, work, cap);
  std::vector<XSeries> w, Q, T;
  for (int i = 0; i < 2; ++i) {
    XSeries wi = uni.embed(2, i);
    w.push_back(wi);
    Q.push_back(wi.compose_polynomial(outer));
    T.push_back(one - wi * wi.compose_polynomial(outer_p));
  }
  XSeries tdiff =
      (T[0].inverse_unit() - T[1].inverse_unit()).divide_linear_difference(0, 1);
  XSeries a = (Q[0] - Q[1]).divide_linear_difference(0, 1);
  XSeries u = (w[0] - w[1]).divide_linear_difference(0, 1);
  int w1 = work - 1;
  XSeries num = at_order(w[0] * w[1], w1) * tdiff * a;
  return num.divide_unit(u * u).truncate(order);
}

// Conjectural ocGS3 = w1 w2 w3 sum_i (1/T_i) prod_{j != i} (Q_i-Q_j)/(w_i-w_j)^2.
XSeries build_ocgs3(int order) {
  int work = order + 5;
  long long cap = work + 3;
  XSeries uni = solve_w_generic(work, q_outer(work), cap);
  auto outer = q_outer(work);
  auto outer_p = qprime_outer(work);
  XSeries one = one_series(3, work, cap);
  std::vector<XSeries> w, Q, T;
  for (int i = 0; i < 3; ++i) {
    XSeries wi = uni.embed(3, i);
    w.push_back(wi);
    Q.push_back(wi.compose_polynomial(outer));
    T.push_back(one - wi * wi.compose_polynomial(outer_p));
  }
  XSeries A[3][3], U[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      A[i][j] = (Q[i] - Q[j]).divide_linear_difference(i, j);
      U[i][j] = (w[i] - w[j]).divide_linear_difference(i, j);
    }
  int w1 = work - 1;
  XSeries prefix = at_order(w[0] * w[1] * w[2], w1);
  std::vector<XSeries> C;
  for (int i = 0; i < 3; ++i) {
    XSeries t = prefix.divide_unit(at_order(T[i], w1));
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      int a = std::min(i, j), b = std::max(i, j);
      t = (t * A[a][b]).divide_unit(U[a][b] * U[a][b]);
    }
    C.push_back(t);
  }
  return alternating_pole_sum(C).truncate(order);
}

// Theorem-style m = 4 transposition series.
XSeries build_icgs4_transpositions(int order) {
  int work = order + 8;
  std::vector<Rat> q2only = {Rat(1)};
  XSeries uni = solve_phi_at(work, q2only);
  std::vector<XSeries> phi;
  for (int i = 0; i < 4; ++i) phi.push_back(uni.embed(4, i));
  XSeries one = one_series(4, work, -1);
  XSeries U[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      U[i][j] = (phi[i] - phi[j]).divide_linear_difference(i, j);
  int w1 = work - 1;
  std::vector<XSeries> phi1, one1;
  for (int i = 0; i < 4; ++i) phi1.push_back(at_order(phi[i], w1));
  XSeries one_w1 = one_series(4, w1, -1);

  std::vector<XSeries> C;
  for (int i = 0; i < 4; ++i) {
    XSeries t = phi1[i].divide_unit(one_w1 - phi1[i].mul_scalar(3));
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      int a = std::min(i, j), b = std::max(i, j);
      t = (t * phi1[j]).divide_unit(U[a][b] * (one_w1 - phi1[i] - phi1[j]));
    }
    C.push_back(t);
  }
  XSeries first = alternating_pole_sum(C);
  first = first.scale_by_degree([](long long d) { return Rat(static_cast<long>(6 * (d + 1))); });

  int w2 = first.order();
  std::vector<XSeries> phik;
  for (int i = 0; i < 4; ++i) phik.push_back(at_order(phi[i], w2));
  XSeries one_w2 = one_series(4, w2, -1);
  XSeries zero_w2(4, w2, -1);
  XSeries e1 = e_elementary(1, phik, one_w2, zero_w2);
  XSeries e2 = e_elementary(2, phik, one_w2, zero_w2);
  XSeries e4 = e_elementary(4, phik, one_w2, zero_w2);
  XSeries num2 = e4.mul_scalar(12) *
                 (one_w2.mul_scalar(4) - e1.mul_scalar(4) + e2.mul_scalar(3));
  XSeries den2 = one_w2;
  for (int i = 0; i < 4; ++i) den2 = den2 * (one_w2 - phik[i].mul_scalar(3));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) den2 = den2 * (one_w2 - phik[i] - phik[j]);
  XSeries second = num2.divide_unit(den2);
  return (first + second).truncate(order);
}

// Hurwitz transposition series: D^{m-3} prod_i w_i/(1-w_i) at q2 = 1.
XSeries build_hurwitz(int m, int order) {
  std::vector<Rat> q2only = {Rat(1)};
  XSeries uni = solve_w_at(order, q2only);
  XSeries prod = one_series(m, order, -1);
  for (int i = 0; i < m; ++i) {
    XSeries wi = uni.embed(m, i);
    prod = prod * wi.divide_unit(one_series(m, order, -1) - wi);
  }
  if (m >= 3) {
    for (int t = 0; t < m - 3; ++t) prod = prod.total_derivative();
  } else {
    for (int t = 0; t < 3 - m; ++t)
      prod = prod.divide_by_degree([](long long d) { return Rat(static_cast<long>(d)); });
  }
  return prod;
}

std::vector<Rat> alternating_qvalues(int order) {
  // q_k = (-1)^k, index i <-> k = i+2
  std::vector<Rat> v(order + 2);
  for (size_t i = 0; i < v.size(); ++i) v[i] = (i % 2 == 0) ? Rat(1) : Rat(-1);
  return v;
}

std::vector<Rat> kcycle_qvalues(int order, int k) {
  std::vector<Rat> v(std::max(order + 2, k - 1), Rat(0));
  v[k - 2] = 1;
  return v;
}

}  // namespace

XSeries build_monotone_pgs(int m, int order) {
  if (m < 1 || m > 5) throw UnsupportedFamily("monotone series supported for m <= 5");
  XSeries uni = solve_phi_at(order, alternating_qvalues(order));
  XSeries prod = one_series(m, order, -1);
  for (int i = 0; i < m; ++i) {
    XSeries pi = uni.embed(m, i);
    prod = prod * pi.mul_scalar(2).divide_unit(one_series(m, order, -1) - pi);
  }
  if (m >= 3) {
    // (2D+1)^{(m-3)}: multiply degree-d terms by (2d+1)(2d+2)...(2d+m-3)
    prod = prod.scale_by_degree([m](long long d) {
      Rat f = 1;
      for (int t = 1; t <= m - 3; ++t) f *= Rat(static_cast<long>(2 * d + t));
      return f;
    });
  } else {
    // (2D+1)^{(-(3-m))} = 1/((2D+1-(3-m))^{(3-m)}), coefficientwise
    int kk = 3 - m;
    prod = prod.divide_by_degree([kk](long long d) {
      Rat f = 1;
      for (int t = 0; t < kk; ++t) f *= Rat(static_cast<long>(2 * d + 1 - kk + t));
      return f;
    });
  }
  return prod;
}

SeriesBuildResult build_monotone_substitution(int m, int order) {
  if (m < 1 || m > 3) throw UnsupportedFamily("substitution route requires m <= 3");
  SeriesBuildResult r;
  r.family = Family::Monotone;
  r.m = m;
  r.order = order;
  r.symbolic_q = false;
  r.norm = SeriesNorm::Inequivalent;
  auto qv = alternating_qvalues(order + 8);
  if (m == 1) {
    r.series = build_icgs1(order, qv);
    r.d_form = true;
  } else if (m == 2) {
    r.series = build_icgs2(order, qv);
    r.d_form = true;
  } else {
    r.series = build_icgs3(order, qv);
    r.d_form = false;
  }
  return r;
}

SeriesBuildResult build_series(Family family, int m, int order, int k) {
  if (order < 1) throw DomainViolation("series order must be >= 1");
  SeriesBuildResult r;
  r.family = family;
  r.m = m;
  r.order = order;
  r.k = k;
  switch (family) {
    case Family::Icgs:
      if (m < 1 || m > 3)
        throw UnsupportedFamily(
            "icgs supported for m <= 3 (use icgs4-transpositions for the m=4 case)");
      r.symbolic_q = true;
      r.d_form = (m <= 2);
      r.norm = SeriesNorm::Inequivalent;
      if (m == 1)
        r.series = build_icgs1(order, std::nullopt);
      else if (m == 2)
        r.series = build_icgs2(order, std::nullopt);
      else
        r.series = build_icgs3(order, std::nullopt);
      return r;
    case Family::Icgs4Transpositions:
      if (m != 4) throw UnsupportedFamily("icgs4-transpositions requires m = 4");
      r.symbolic_q = false;
      r.d_form = false;
      r.norm = SeriesNorm::Inequivalent;
      r.series = build_icgs4_transpositions(order);
      return r;
    case Family::Ocgs:
      if (m < 1 || m > 2)
        throw UnsupportedFamily("ocgs supported for m <= 2 (ocgs3-conjecture for m = 3)");
      r.symbolic_q = true;
      r.d_form = true;
      r.norm = SeriesNorm::OrdinaryCycle;
      r.series = (m == 1) ? build_ocgs1(order) : build_ocgs2(order);
      return r;
    case Family::Ocgs3Conjecture:
      if (m != 3) throw UnsupportedFamily("ocgs3-conjecture requires m = 3");
      r.symbolic_q = true;
      r.d_form = false;
      r.norm = SeriesNorm::OrdinaryCycle;
      r.series = build_ocgs3(order);
      return r;
    case Family::Monotone: {
      if (m < 1 || m > 5) throw UnsupportedFamily("monotone supported for m <= 5");
      if (m <= 3) return build_monotone_substitution(m, order);
      r.symbolic_q = false;
      r.d_form = false;
      r.norm = SeriesNorm::Inequivalent;
      r.series = build_monotone_pgs(m, order);
      return r;
    }
    case Family::Hurwitz:
      if (m < 1 || m > 6) throw UnsupportedFamily("hurwitz supported for m <= 6");
      r.symbolic_q = false;
      r.d_form = false;
      r.norm = SeriesNorm::OrdinaryCycle;
      r.series = build_hurwitz(m, order);
      return r;
    case Family::KCycle: {
      if (m < 1 || m > 3) throw UnsupportedFamily("kcycle supported for m <= 3");
      if (k < 2) throw DomainViolation("kcycle requires k >= 2");
      auto qv = kcycle_qvalues(order + 8, k);
      r.symbolic_q = false;
      r.d_form = (m <= 2);
      r.norm = SeriesNorm::Inequivalent;
      if (m == 1)
        r.series = build_icgs1(order, qv);
      else if (m == 2)
        r.series = build_icgs2(order, qv);
      else
        r.series = build_icgs3(order, qv);
      return r;
    }
  }
  throw UnsupportedFamily("bad family enum");
}

Rat coeff_of(const SeriesBuildResult& r, const CycleType& alpha, const Signature& beta) {
  if (alpha.length() != r.m)
    throw DomainViolation("alpha must have exactly m parts for this family");
  if (alpha.size() > r.order) throw DomainViolation("alpha exceeds the series order");
  std::vector<int> xexp = alpha.parts();
  const QPoly& q = r.series.coeff(xexp);
  if (!r.symbolic_q) return q.constant_term();
  std::vector<int> qexp;
  for (long long b : beta.raw()) qexp.push_back(static_cast<int>(b));
  return q.coeff(qexp);
}

Int coeff_to_count(const SeriesBuildResult& r, const CycleType& alpha, const Signature& beta) {
  Rat c = coeff_of(r, alpha, beta);
  for (int a : alpha.parts()) c *= Rat(static_cast<long>(a));
  if (r.d_form) c /= Rat(static_cast<long>(alpha.size()));
  if (r.norm == SeriesNorm::OrdinaryCycle) c *= Rat(factorial(beta.total()));
  c.canonicalize();
  return to_int_exact(c, "series coefficient scaled to a count");
}

KCycleReport kcycle_specialize(int m, int k, int order) {
  KCycleReport rep;
  rep.m = m;
  rep.k = k;
  rep.order = order;
  SeriesBuildResult spec = build_series(Family::KCycle, m, order, k);
  rep.d_form = spec.d_form;
  rep.specialized = spec.series;

  // Printed corollary closed forms, evaluated on the same phi.
  XSeries uni = solve_phi_at(order, kcycle_qvalues(order, k));
  if (m == 1) {
    XSeries one = one_series(1, order, -1);
    rep.printed = uni * (one - uni);
  } else {
    std::vector<XSeries> phi;
    for (int i = 0; i < m; ++i) phi.push_back(uni.embed(m, i));
    XSeries one = one_series(m, order, -1);
    XSeries zero(m, order, -1);
    auto pow_series = [&](const XSeries& s, int e) {
      XSeries p = one;
      for (int t = 0; t < e; ++t) p = p * s;
      return p;
    };
    if (m == 2) {
      std::vector<XSeries> pair = {phi[0], phi[1]};
      XSeries num = phi[0] * phi[1] * pow_series(h_complete(k - 2, pair, one, zero), 2);
      num = num.mul_scalar(Rat(2 * (k - 1)));
      XSeries den = (one - pow_series(phi[0], k - 1).mul_scalar(2 * k - 1)) *
                    (one - pow_series(phi[1], k - 1).mul_scalar(2 * k - 1)) *
                    (one - h_complete(k - 1, pair, one, zero));
      rep.printed = num.divide_unit(den);
    } else {
      std::vector<XSeries> trip = {phi[0], phi[1], phi[2]};
      // s_{(k-3)} is the single-row Schur h_{k-3}
      XSeries G = h_complete(k - 3, trip, one, zero) -
                  schur_two_row(k - 2, k - 2, trip, one, zero).mul_scalar(2 * k - 1);
      XSeries Gp = schur_two_row(k - 2, k - 2, trip, one, zero) -
                   schur_two_row(2 * k - 3, k - 2, trip, one, zero).mul_scalar(2 * k - 1);
      XSeries num = phi[0] * phi[1] * phi[2] * G * (G + Gp);
      num = num.mul_scalar(2);
      XSeries den = one;
      for (int i = 0; i < 3; ++i)
        den = den * (one - pow_series(phi[i], k - 1).mul_scalar(2 * k - 1));
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          std::vector<XSeries> pr = {phi[i], phi[j]};
          den = den * (one - h_complete(k - 1, pr, one, zero));
        }
      rep.printed = num.divide_unit(den);
    }
  }

  for (const auto& [e, c] : rep.specialized.coeffs()) {
    Rat a = c.constant_term();
    Rat b = rep.printed.coeff(e).constant_term();
    if (a != b) rep.discrepancies.push_back({e, a, b});
  }
  for (const auto& [e, c] : rep.printed.coeffs()) {
    if (!rep.specialized.coeff(e).is_zero()) continue;
    Rat b = c.constant_term();
    if (b != 0) rep.discrepancies.push_back({e, Rat(0), b});
  }
  rep.matches = rep.discrepancies.empty();
  return rep;
}

namespace {

// Dense univariate polynomial over Rat, for the confluent umbral check.
struct RatPoly {
  std::vector<Rat> c;  // c[i] coeff of t^i
  static RatPoly zero() { return {}; }
  static RatPoly from_coeffs(std::vector<Rat> v) {
    RatPoly p{std::move(v)};
    p.trim();
    return p;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  RatPoly operator*(const RatPoly& o) const {
    if (c.empty() || o.c.empty()) return {};
    RatPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }
  RatPoly derivative() const {
    RatPoly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * Rat(static_cast<long>(i)));
    return r;
  }
  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  }
};

Rat det_small(std::vector<std::vector<Rat>> a) {
  int n = static_cast<int>(a.size());
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rat f = a[row][col] / a[col][col];
      for (int cc = col; cc < n; ++cc) a[row][cc] -= f * a[col][cc];
    }
  }
  return det;
}

Rat vandermonde(const std::vector<Rat>& x) {
  Rat v = 1;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
  return v;
}

Rat rat_pow(const Rat& x, long long e) {
  Rat r = 1;
  for (long long i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

AppendixReport verify_appendix(int instances, unsigned long long seed) {
  AppendixReport rep;
  rep.instances = instances;
  std::mt19937_64 rng(seed);
  auto rand_rat = [&](int lo, int hi) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  auto distinct_points = [&](int m) {
    std::vector<Rat> xs;
    while (static_cast<int>(xs.size()) < m) {
      Rat v = rand_rat(-12, 12);
      if (v == 0) continue;
      bool dup = false;
      for (const auto& u : xs) dup = dup || u == v;
      if (!dup) xs.push_back(v);
    }
    return xs;
  };
  const Rat one(1), zero(0);

  for (int inst = 0; inst < instances; ++inst) {
    // --- umbral lemma: A(t) = sum_{i >= d} a_i t^{i-1}
    {
      std::uniform_int_distribution<int> dd(1, 3), md(2, 4), extra(1, 4);
      int d = dd(rng);
      int m = md(rng);
      int top = d + extra(rng);
      std::vector<Rat> a(top + 1, Rat(0));  // a[i] for i = d..top
      for (int i = d; i <= top; ++i) a[i] = rand_rat(-6, 6);
      RatPoly A;  // coefficients of t^{i-1}
      {
        std::vector<Rat> cs(top, Rat(0));
        for (int i = d; i <= top; ++i) cs[i - 1] = a[i];
        A = RatPoly::from_coeffs(cs);
      }
      std::uniform_int_distribution<int> sd(1 - d, 3);
      int s = sd(rng);
      std::vector<Rat> xs = distinct_points(m);
      Rat lhs = 0;
      for (int i = d; i <= top; ++i)
        lhs += a[i] * h_complete(i - m + s, xs, one, zero);
      Rat rhs = 0;
      for (int i = 0; i < m; ++i) {
        Rat denom = 1;
        for (int j = 0; j < m; ++j)
          if (j != i) denom *= xs[i] - xs[j];
        rhs += rat_pow(xs[i], s) * A.eval(xs[i]) / denom;
      }
      if (lhs != rhs) {
        rep.failures.push_back({"umbral", false, "main identity mismatch"});
        continue;
      }
      // confluent case x_m = x_1, s >= 2-d
      int s2 = std::max(s, 2 - d);
      std::vector<Rat> ys(xs.begin(), xs.end() - 1);  // m-1 distinct points
      std::vector<Rat> conf = ys;
      conf.push_back(ys[0]);
      Rat lhs2 = 0;
      for (int i = d; i <= top; ++i)
        lhs2 += a[i] * h_complete(i - m + s2, conf, one, zero);
      // d/dx1 sum_i x_i^{s2} A(x_i) / prod_{j != i}(x_i - x_j) over m-1 points
      Rat rhs2 = 0;
      {
        // i = 0 term: rational function of x1
        RatPoly num;  // t^{s2} A(t); s2 >= 2-d ensures t-exponents >= ... >= 0
        {
          std::vector<Rat> cs(top + s2, Rat(0));
          for (int i = d; i <= top; ++i) {
            int e = i - 1 + s2;
            internal_check(e >= 0, "umbral confluent: negative exponent");
            if (e >= static_cast<int>(cs.size())) cs.resize(e + 1, Rat(0));
            cs[e] = a[i];
          }
          num = RatPoly::from_coeffs(cs);
        }
        RatPoly den = RatPoly::from_coeffs({one});
        for (size_t j = 1; j < ys.size(); ++j)
          den = den * RatPoly::from_coeffs({-ys[j], one});
        RatPoly dn = num.derivative(), dd2 = den.derivative();
        Rat nv = num.eval(ys[0]), dv = den.eval(ys[0]);
        rhs2 += (dn.eval(ys[0]) * dv - nv * dd2.eval(ys[0])) / (dv * dv);
        for (size_t i = 1; i < ys.size(); ++i) {
          Rat denom = 1;
          for (size_t j = 0; j < ys.size(); ++j)
            if (j != i && j != 0) denom *= ys[i] - ys[j];
          Rat ki = rat_pow(ys[i], s2) * A.eval(ys[i]) / denom;
          rhs2 += ki / ((ys[i] - ys[0]) * (ys[i] - ys[0]));
        }
      }
      if (lhs2 != rhs2) {
        rep.failures.push_back({"umbral", false, "confluent identity mismatch"});
        continue;
      }
    }

    // --- determinant lemma, m <= 4
    {
      std::uniform_int_distribution<int> md(2, 4);
      int m = md(rng);
      std::uniform_int_distribution<int> qd(m - 2, m + 3);
      int q = std::max(0, qd(rng));
      std::uniform_int_distribution<int> pd(q + 1, q + 4);
      int p = pd(rng);
      std::vector<Rat> xs = distinct_points(m);
      std::vector<std::vector<Rat>> mat;
      std::vector<int> rows = {p, q};
      for (int e = m - 3; e >= 0; --e) rows.push_back(e);
      for (int e : rows) {
        std::vector<Rat> row;
        for (const auto& x : xs) row.push_back(rat_pow(x, e));
        mat.push_back(row);
      }
      Rat lhs = det_small(mat) / vandermonde(xs);
      Rat rhs = schur_two_row(p + 1 - m, q + 2 - m, xs, one, zero);
      if (lhs != rhs) {
        rep.failures.push_back({"det", false, "determinant/Schur mismatch"});
        continue;
      }
    }

    // --- three-variable simplification lemma
    {
      std::vector<Rat> aa = distinct_points(3), bb = distinct_points(3),
                       zz = distinct_points(3);
      Rat lhs = 0;
      for (int i = 0; i < 3; ++i) {
        Rat t = Rat(1) / zz[i];
        for (int j = 0; j < 3; ++j) {
          if (j == i) continue;
          t *= (zz[i] - zz[j]) / ((aa[i] - aa[j]) * (bb[i] - bb[j]));
        }
        lhs += t;
      }
      auto det3 = [&](const std::vector<Rat>& top) {
        std::vector<std::vector<Rat>> mat = {top, zz, {one, one, one}};
        return det_small(mat);
      };
      std::vector<Rat> atop = {aa[0] * zz[0], aa[1] * zz[1], aa[2] * zz[2]};
      std::vector<Rat> btop = {bb[0] * zz[0], bb[1] * zz[1], bb[2] * zz[2]};
      Rat rhs = det3(atop) * det3(btop) /
                (zz[0] * zz[1] * zz[2] * vandermonde(aa) * vandermonde(bb));
      if (lhs != rhs) {
        rep.failures.push_back({"3case", false, "alternating-sum determinant mismatch"});
        continue;
      }
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace permfact
