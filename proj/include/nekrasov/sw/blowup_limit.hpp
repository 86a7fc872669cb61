#pragma once

#include <string>

#include "nekrasov/blowup/zhat.hpp"
#include "nekrasov/sw/prepotential.hpp"

namespace nek {

struct BlowupLimit {
  Rational offset;   // q-grading of the first coefficient
  QSeries lhs;       // Zhat^k(t) / Z at eps = 0
  QSeries rhs;       // closed form in terms of the prepotential
  bool equal = false;
  std::string report;
};

namespace detail {

// sum over the coset of k: sign q^{(l,l)/2} / prod_{alpha<beta} <a,alpha>^{<l,alpha>^2}
//   * exp(-D_l^2 F / 2 + t ((l, a) - q d/dq D_l F)), t-truncated.
// With with_t = false the t-dependence is dropped.
inline QSeries theta_sum(const QSeries& f, int r, int k, unsigned t_deg_max, int order, bool with_t) {
  const VariableSpace vars(r);
  const std::size_t nv = vars.size();
  const Rational offset = grading_offset(r, k);
  const auto coset = enumerate_coroot_vectors(r, k, offset + order);
  std::vector<QSeries> terms = parallel_map(coset.size(), [&](std::size_t idx) {
    const CorootVector& l = coset[idx];
    const Rational shift_q = coroot_pairings(l).k_dot_k / 2 - offset;
    const int shift = static_cast<int>(shift_q.get_num().get_si());
    const int room = order - shift;
    const auto dir = coroot_direction(l);
    const QSeries dlf = directional_derivative(f.truncated(room), dir);
    QSeries e = directional_derivative(dlf, dir);
    e *= ratio(-1, 2);
    if (with_t) e -= dlf.q_derivative() * FactoredRational::from(RatPolynomial::variable(nv, vars.t()));
    QSeries term = exp(e);
    if (with_t) {
      AffineForm la(nv);
      la.coeffs = dir;
      term *= exp_t(vars, la, t_deg_max);
      term = truncate_in(term, vars.t(), t_deg_max);
    }
    term *= FactoredRational::from(l_factor_product_at_zero(l).inverse());
    QSeries placed(nv, order, offset);
    for (int n = 0; n <= room; ++n) placed[n + shift] = term[n];
    return placed;
  });
  QSeries out(nv, order, offset);
  for (const auto& t : terms) out += t;
  return out;
}

}  // namespace detail

// lim_{eps -> 0} Zhat^k(t) / Z against
//   exp(-(q d/dq)^2 F t^2 / 2) * theta_sum_k(t) / theta_sum_0(0),
// coefficientwise in q and up to t^t_deg_max.
inline BlowupLimit blowup_limit_check(int r, int k, unsigned t_deg_max, int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  const VariableSpace vars(r);
  const std::size_t nv = vars.size();
  BlowupLimit out;
  const ZhatTable table = zhat_series(r, k, t_deg_max, order);
  out.offset = table.offset;
  const QSeries ratio_eps = truncate_in(table.assembled * inverse(z_series(r, order)), vars.t(), t_deg_max);
  out.lhs = at_eps_zero(ratio_eps);

  const QSeries f = f_lowest(r, order);
  QSeries gauss = f.q_derivative().q_derivative();
  gauss *= FactoredRational::from(RatPolynomial::variable(nv, vars.t(), 2) * ratio(-1, 2));
  const QSeries numer = detail::theta_sum(f, r, k, t_deg_max, order, true);
  const QSeries denom = detail::theta_sum(f, r, 0, t_deg_max, order, false);
  out.rhs = truncate_in(exp(gauss) * numer * inverse(denom), vars.t(), t_deg_max);

  out.equal = true;
  for (int n = 0; n <= order; ++n) {
    if (out.lhs[n] == out.rhs[n]) continue;
    out.equal = false;
    out.report = "mismatch at q^(" + to_string(out.offset + n) + "): " + out.lhs[n].render(vars) +
                 " vs " + out.rhs[n].render(vars);
    break;
  }
  return out;
}

}  // namespace nek
