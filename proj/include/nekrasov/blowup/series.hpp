#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nekrasov/algebra/qseries.hpp"
#include "nekrasov/blowup/euler.hpp"
#include "nekrasov/plane/partition_function.hpp"
#include "nekrasov/util/parallel.hpp"

namespace nek {

// Chart substitutions of the blowup: chart 1 is
// (eps1, eps2, a) -> (eps1, eps2 - eps1, a + eps1 k), chart 2 is
// (eps1, eps2, a) -> (eps1 - eps2, eps2, a + eps2 k).
inline AffineMap chart_map(const VariableSpace& vars, const CorootVector& k, int chart) {
  AffineMap map(vars.size());
  const std::size_t moved = chart == 1 ? vars.eps2() : vars.eps1();
  const std::size_t other = chart == 1 ? vars.eps1() : vars.eps2();
  AffineForm image = AffineForm::variable(vars.size(), moved);
  image.coeffs[other] = -1;
  map.set(moved, image);
  for (int alpha = 1; alpha <= vars.rank(); ++alpha) {
    AffineForm a = AffineForm::variable(vars.size(), vars.a(alpha));
    a.coeffs[other] += k[alpha];
    map.set(vars.a(alpha), a);
  }
  return map;
}

// Point transformed by the chart substitution, for numeric evaluation.
inline std::vector<Rational> chart_point(const VariableSpace& vars, const std::vector<Rational>& point,
                                         const CorootVector& k, int chart) {
  const AffineMap map = chart_map(vars, k, chart);
  std::vector<Rational> out(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) out[v] = map.image(v).evaluate(point);
  return out;
}

inline FactoredRational power(const AffineForm& form, unsigned d) {
  if (d == 0) return FactoredRational::one(form.nvars());
  return FactoredRational::from(RatPolynomial::from(form).pow(d));
}

inline FactoredRational variable(const VariableSpace& vars, std::size_t v) {
  return FactoredRational::from(AffineForm::variable(vars.size(), v));
}

// (D^{(eps1,eps2)}_{log q})^m (f g) = sum_j C(m,j) eps1^j eps2^{m-j} (q d/dq)^j f (q d/dq)^{m-j} g.
inline QSeries hirota_apply(const VariableSpace& vars, unsigned m, const QSeries& f, const QSeries& g) {
  const FactoredRational e1 = variable(vars, vars.eps1());
  const FactoredRational e2 = variable(vars, vars.eps2());
  std::vector<QSeries> df{f}, dg{g};
  for (unsigned j = 1; j <= m; ++j) {
    df.push_back(df.back().q_derivative());
    dg.push_back(dg.back().q_derivative());
  }
  QSeries out(f.nvars(), std::min(f.order(), g.order()), f.offset() + g.offset());
  Integer binom = 1;
  for (unsigned j = 0; j <= m; ++j) {
    FactoredRational w = FactoredRational::constant(vars.size(), Rational(binom));
    for (unsigned i = 0; i < j; ++i) w *= e1;
    for (unsigned i = j; i < m; ++i) w *= e2;
    out += (df[j] * dg[m - j]) * w;
    binom = binom * (m - j) / (j + 1);
  }
  return out;
}

// Coefficients of (D^{(eps1,eps2)}_{log q} + c)^d (f g), computed termwise as
// sum_{l,m} ((l + f.offset) eps1 + (m + g.offset) eps2 + c)^d f_l g_m.
inline QSeries hirota_shifted(const VariableSpace& vars, unsigned d, const AffineForm& c, const QSeries& f,
                              const QSeries& g) {
  const int order = std::min(f.order(), g.order());
  QSeries out(vars.size(), order, f.offset() + g.offset());
  for (int n = 0; n <= order; ++n) {
    std::vector<FactoredRational> terms;
    for (int l = 0; l <= n; ++l) {
      if (f[l].is_zero() || g[n - l].is_zero()) continue;
      AffineForm w = c;
      w.coeffs[vars.eps1()] += Rational(l) + f.offset();
      w.coeffs[vars.eps2()] += Rational(n - l) + g.offset();
      terms.push_back(power(w, d) * f[l] * g[n - l]);
    }
    out[n] = sum(std::move(terms), vars.size());
  }
  return out;
}

// Z(eps1, eps2 - eps1, a + eps1 k; q) (chart 1) or Z(eps1 - eps2, eps2, a + eps2 k; q).
inline QSeries chart_z_series(const QSeries& z, const CorootVector& k, int chart) {
  const VariableSpace vars(k.rank());
  return z.substitute(chart_map(vars, k, chart));
}

// Coroot vectors k in Q with (k, k)/2 <= order and their q-shift.
struct LatticeTerm {
  CorootVector k;
  int shift;  // (k, k)/2
};

inline std::vector<LatticeTerm> root_lattice_terms(int r, int order) {
  std::vector<LatticeTerm> out;
  for (const auto& k : enumerate_coroot_vectors(r, 0, Rational(order))) {
    const Rational s = coroot_pairings(k).k_dot_k / 2;
    out.push_back({k, static_cast<int>(s.get_num().get_si())});
  }
  return out;
}

// Summands of the blowup equation for every k in Q: the pair of chart series
// and the prefactor 1/prod l^k, sharing one Z series.
struct BlowupSummand {
  CorootVector k;
  int shift;
  FactoredRational inverse_l;
  AffineForm weight;  // (k, a) + ((k, k)/2)(eps1 + eps2)
  QSeries za;
  QSeries zb;
};

inline std::vector<BlowupSummand> blowup_summands(const QSeries& z, int r, int order) {
  std::vector<BlowupSummand> out;
  for (const auto& term : root_lattice_terms(r, order)) {
    const int room = order - term.shift;
    const QSeries zk = z.truncated(room);
    out.push_back({term.k, term.shift, FactoredRational::from(l_factor_product(term.k).inverse()),
                   coroot_weight(term.k), chart_z_series(zk, term.k, 1), chart_z_series(zk, term.k, 2)});
  }
  return out;
}

// sum_k q^{(k,k)/2} / prod l^k (D + (k,a) + (k,k)/2 (eps1 + eps2))^d (Z_a^k Z_b^k).
inline QSeries blowup_sum(const std::vector<BlowupSummand>& summands, int r, unsigned d, int order) {
  const VariableSpace vars(r);
  auto parts = parallel_map(summands.size(), [&](std::size_t i) {
    const auto& s = summands[i];
    return (hirota_shifted(vars, d, s.weight, s.za, s.zb) * s.inverse_l).shifted(s.shift, order);
  });
  QSeries out(vars.size(), order);
  for (int n = 0; n <= order; ++n) {
    std::vector<FactoredRational> terms;
    for (const auto& p : parts) {
      if (!p[n].is_zero()) terms.push_back(p[n]);
    }
    out[n] = sum(std::move(terms), vars.size());
  }
  return out;
}

// Left side of the blowup equation for insertion degree d; zero for
// 1 <= d <= 2r - 1. d = 0 returns the right side of the Z-identity minus Z.
inline QSeries blowup_equation_residual(int r, unsigned d, int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  const QSeries z = z_series(r, order);
  const auto summands = blowup_summands(z, r, order);
  QSeries out = blowup_sum(summands, r, d, order);
  if (d == 0) out -= z;
  return out;
}

inline QSeries zind_residual(int r, int order) { return blowup_equation_residual(r, 0, order); }

// All residuals d = 0..d_max from one set of chart series; entry 0 is the
// Z-identity residual.
inline std::vector<QSeries> blowup_equation_residuals(int r, unsigned d_max, int order) {
  const QSeries z = z_series(r, order);
  const auto summands = blowup_summands(z, r, order);
  std::vector<QSeries> out;
  for (unsigned d = 0; d <= d_max; ++d) {
    QSeries res = blowup_sum(summands, r, d, order);
    if (d == 0) res -= z;
    out.push_back(std::move(res));
  }
  return out;
}

// First grading value of the blowup series for first Chern class k:
// min (l, l)/2 = k (r - k) / (2r).
inline Rational grading_offset(int r, int k) { return ratio(k * (r - k), 2 * r); }

// hat Z^k_{n,d} = sum over fixed points at instanton number n of mu^d / e(T).
inline FactoredRational zhat_coefficient(int r, int k, const Rational& n, unsigned d) {
  const VariableSpace vars(r);
  std::vector<BlowupFixedPoint> level;
  for (auto& fp : enumerate_blowup_fixed_points(r, k, n)) {
    if (fp.instanton_number() == n) level.push_back(std::move(fp));
  }
  auto terms = parallel_map(level.size(), [&](std::size_t i) {
    FactoredRational inv = FactoredRational::from(blowup_euler_class(level[i]).inverse());
    if (d == 0) return inv;
    return power(mu_weight(level[i]), d) * inv;
  });
  return sum(std::move(terms), vars.size());
}

// The same coefficient through plane partition functions:
// sum_{(l,l)/2 + i + j = n} (i eps1 + j eps2 + (k,a) + (k,k)/2 (eps1+eps2))^d / prod l^k
//   * Z_i(eps1, eps2 - eps1, a + eps1 k) Z_j(eps1 - eps2, eps2, a + eps2 k).
inline FactoredRational zhat_coefficient_factorized(int r, int k, const Rational& n, unsigned d) {
  const VariableSpace vars(r);
  std::vector<FactoredRational> terms;
  for (const auto& kv : enumerate_coroot_vectors(r, k, n)) {
    const Rational room_q = n - coroot_pairings(kv).k_dot_k / 2;
    if (!is_integral(room_q)) continue;
    const int room = static_cast<int>(room_q.get_num().get_si());
    const FactoredRational inv_l = FactoredRational::from(l_factor_product(kv).inverse());
    const AffineForm c = coroot_weight(kv);
    const AffineMap m1 = chart_map(vars, kv, 1);
    const AffineMap m2 = chart_map(vars, kv, 2);
    for (int i = 0; i <= room; ++i) {
      const int j = room - i;
      AffineForm w = c;
      w.coeffs[vars.eps1()] += i;
      w.coeffs[vars.eps2()] += j;
      terms.push_back(power(w, d) * inv_l * z_coefficient(r, i).substitute(m1) * z_coefficient(r, j).substitute(m2));
    }
  }
  return sum(std::move(terms), vars.size());
}

}  // namespace nek
