#pragma once

#include <vector>

#include "nekrasov/blowup/series.hpp"

namespace nek {

// exp(t * c) truncated after t^max_degree.
inline FactoredRational exp_t(const VariableSpace& vars, const AffineForm& c, unsigned max_degree) {
  RatPolynomial tc = RatPolynomial::from(c) * RatPolynomial::variable(vars.size(), vars.t());
  RatPolynomial acc = RatPolynomial::constant(vars.size(), Rational(1));
  RatPolynomial power = acc;
  Rational factorial = 1;
  for (unsigned j = 1; j <= max_degree; ++j) {
    power *= tc;
    factorial *= j;
    acc += power * (1 / factorial);
  }
  return FactoredRational::from(acc);
}

// The blowup partition function for first Chern class k, by insertion degree
// and assembled in t.
struct ZhatTable {
  Rational offset;              // grading of the first coefficient
  std::vector<QSeries> by_d;    // hat Z_{n,d} from fixed-point sums
  QSeries assembled;            // sum_d t^d/d! hat Z_{n,d}
  QSeries factorized;           // product formula with Z(q e^{t eps_i})
  bool consistent = false;      // assembled == factorized
};

inline ZhatTable zhat_series(int r, int k, unsigned d_max, int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  const VariableSpace vars(r);
  const std::size_t nv = vars.size();
  ZhatTable out;
  out.offset = grading_offset(r, k);
  for (unsigned d = 0; d <= d_max; ++d) {
    QSeries s(nv, order, out.offset);
    for (int n = 0; n <= order; ++n) s[n] = zhat_coefficient(r, k, out.offset + n, d);
    out.by_d.push_back(std::move(s));
  }
  out.assembled = QSeries(nv, order, out.offset);
  Rational factorial = 1;
  for (unsigned d = 0; d <= d_max; ++d) {
    if (d > 0) factorial *= d;
    RatPolynomial td = RatPolynomial::variable(nv, vars.t(), d) * (1 / factorial);
    out.assembled += out.by_d[d] * FactoredRational::from(td);
  }

  // sum_l exp(t c_l) q^{(l,l)/2} / prod l^k * Z_a(q e^{t eps1}) Z_b(q e^{t eps2})
  out.factorized = QSeries(nv, order, out.offset);
  const QSeries z = z_series(r, order);
  for (const auto& kv : enumerate_coroot_vectors(r, k, out.offset + order)) {
    const Rational shift_q = coroot_pairings(kv).k_dot_k / 2 - out.offset;
    const int shift = static_cast<int>(shift_q.get_num().get_si());
    const int room = order - shift;
    QSeries za = chart_z_series(z.truncated(room), kv, 1);
    QSeries zb = chart_z_series(z.truncated(room), kv, 2);
    for (int n = 1; n <= room; ++n) {
      AffineForm c1(nv), c2(nv);
      c1.coeffs[vars.eps1()] = n;
      c2.coeffs[vars.eps2()] = n;
      za[n] *= exp_t(vars, c1, d_max);
      zb[n] *= exp_t(vars, c2, d_max);
    }
    QSeries term = truncate_in(za * zb, vars.t(), d_max);
    term *= FactoredRational::from(l_factor_product(kv).inverse()) * exp_t(vars, coroot_weight(kv), d_max);
    term = truncate_in(term, vars.t(), d_max);
    QSeries placed(nv, order, out.offset);
    for (int n = 0; n <= room; ++n) placed[n + shift] = term[n];
    out.factorized += placed;
  }
  out.consistent = out.assembled == out.factorized;
  return out;
}

}  // namespace nek
