#pragma once

#include <string>
#include <vector>

#include "nekrasov/blowup/euler.hpp"
#include "nekrasov/blowup/series.hpp"
#include "nekrasov/plane/partition_function.hpp"

namespace nek {

// Value at eps1 = eps2 = 0. A denominator factor built from eps alone means
// the function is not regular there.
inline FactoredRational at_eps_zero(const FactoredRational& f) {
  const VariableSpace vars(static_cast<int>(f.nvars()) - 3);
  AffineMap zero(f.nvars());
  zero.set(vars.eps1(), AffineForm(f.nvars()));
  zero.set(vars.eps2(), AffineForm(f.nvars()));
  try {
    return f.substitute(zero);
  } catch (const PoleError& e) {
    throw ConsistencyError("not regular at eps = 0: denominator factor " + e.factor());
  }
}

inline QSeries at_eps_zero(const QSeries& s) {
  QSeries out(s.nvars(), s.order(), s.offset());
  for (int n = 0; n <= s.order(); ++n) {
    try {
      out[n] = at_eps_zero(s[n]);
    } catch (const ConsistencyError& e) {
      throw ConsistencyError("coefficient of q^" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

// Prepotential F(a; q) = F^inst(0, 0, a; q).
inline QSeries f_lowest(int r, int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  return at_eps_zero(f_inst_series(r, order));
}

// Direction of D_k = sum_alpha k_alpha d/da_alpha, which equals
// sum_i k^i d/da^i in coroot coordinates.
inline std::vector<Rational> coroot_direction(const CorootVector& k) {
  const VariableSpace vars(k.rank());
  std::vector<Rational> dir(vars.size(), Rational(0));
  const CorootPairings pr = coroot_pairings(k);
  for (int alpha = 1; alpha <= k.rank(); ++alpha) dir[vars.a(alpha)] = pr.k_dot_a[static_cast<std::size_t>(alpha - 1)];
  return dir;
}

// (k, a) as a linear function of the a-variables.
inline FactoredRational pairing_form(const CorootVector& k) {
  const VariableSpace vars(k.rank());
  AffineForm out(vars.size());
  out.coeffs = coroot_direction(k);
  return FactoredRational::from(out);
}

inline QSeries directional_derivative(const QSeries& s, const std::vector<Rational>& dir) {
  return s.map([&](const FactoredRational& f) { return f.derivative(dir); });
}

// d/da^i with a_alpha = a^alpha - a^{alpha-1} (a^0 = a^r = 0), that is
// d/da_i - d/da_{i+1}.
inline std::vector<Rational> simple_coroot_direction(int r, int i) {
  if (i < 1 || i >= r) throw UsageError("coroot coordinate index out of range");
  const VariableSpace vars(r);
  std::vector<Rational> dir(vars.size(), Rational(0));
  dir[vars.a(i)] = 1;
  dir[vars.a(i + 1)] = -1;
  return dir;
}

// u_2 = (a, a)/2 - q dF/dq, with independent a-variables.
inline QSeries u2_series(const QSeries& f, int r) {
  const VariableSpace vars(r);
  RatPolynomial aa(vars.size());
  for (int alpha = 1; alpha <= r; ++alpha) {
    aa += RatPolynomial::variable(vars.size(), vars.a(alpha), 2) * ratio(1, 2);
  }
  QSeries out = -f.q_derivative();
  out[0] = out[0] + FactoredRational::from(aa);
  return out;
}

inline QSeries u2_series(int r, int order) { return u2_series(f_lowest(r, order), r); }

// sum_{k in Q} sign_k q^{(k,k)/2} / prod_{alpha<beta} (a_alpha - a_beta)^{<k,alpha>^2}
//   [((k, a) - q d/dq D_k F)^2 - (q d/dq)^2 F] exp(-D_k^2 F / 2)
// for a given prepotential F. The sign (-1)^{<k,rho>} (-1)^{r(k,k)/2} absorbs
// the powers of sqrt(-1). Rank 1 has no roots and is rejected.
inline QSeries contact_residual(const QSeries& f, int r, int order) {
  if (r < 2) throw UsageError("the contact-term equation needs rank >= 2");
  const VariableSpace vars(r);
  const std::size_t nv = vars.size();
  if (f.order() < order) throw UsageError("prepotential series is shorter than the requested order");
  const QSeries ff = f.truncated(order);
  const QSeries qqf = ff.q_derivative().q_derivative();
  const auto lattice = root_lattice_terms(r, order);
  std::vector<QSeries> terms = parallel_map(lattice.size(), [&](std::size_t idx) {
    const auto& [k, shift] = lattice[idx];
    const int room = order - shift;
    const auto dir = coroot_direction(k);
    const QSeries dkf = directional_derivative(ff.truncated(room), dir);
    QSeries inner = QSeries::constant(nv, room, pairing_form(k));
    inner -= dkf.q_derivative();
    QSeries bracket = inner * inner - qqf.truncated(room);
    QSeries e = directional_derivative(dkf, dir);
    e *= ratio(-1, 2);
    bracket = bracket * exp(e);
    bracket *= FactoredRational::from(l_factor_product_at_zero(k).inverse());
    QSeries placed(nv, order);
    for (int n = 0; n <= room; ++n) placed[n + shift] = bracket[n];
    return placed;
  });
  QSeries out(nv, order);
  for (const auto& t : terms) out += t;
  return out;
}

inline QSeries contact_residual(int r, int order) { return contact_residual(f_lowest(r, order), r, order); }

// The same residual with the q^1 coefficient of F shifted by delta; the
// solution of the contact-term equation is unique, so this must not vanish.
inline QSeries contact_residual_perturbed(int r, int order, const FactoredRational& delta) {
  if (order < 1) throw UsageError("perturbation needs order >= 1");
  QSeries f = f_lowest(r, order);
  f[1] = f[1] + delta;
  return contact_residual(f, r, order);
}

// The three eps -> 0 limits relating F^inst on the two charts to F:
//   (1) (q d/dq F_a(a + eps1 k) - q d/dq F_b(a + eps2 k)) / (eps2 - eps1) -> -q d/dq D_k F
//   (2) (eps1 (q d/dq)^2 F_a - eps2 (q d/dq)^2 F_b) / (eps2 - eps1)      -> -(q d/dq)^2 F
//   (3) ((F_a(a + eps1 k) - F_a)/eps1 - (F_b(a + eps2 k) - F_b)/eps2) / (eps2 - eps1) -> -D_k^2 F / 2
// with F_a = F^inst(eps1, eps2 - eps1, a) and F_b = F^inst(eps1 - eps2, eps2, a).
struct LimitCheck {
  CorootVector k;
  bool first = false;
  bool second = false;
  bool third = false;
};

inline std::vector<LimitCheck> chart_limit_checks(int r, int order) {
  const VariableSpace vars(r);
  const std::size_t nv = vars.size();
  const QSeries finst = f_inst_series(r, order);
  const QSeries f = at_eps_zero(finst);
  const QSeries qqf = f.q_derivative().q_derivative();
  const CorootVector zero = CorootVector::zero(r);
  const QSeries fa = chart_z_series(finst, zero, 1);
  const QSeries fb = chart_z_series(finst, zero, 2);

  auto eps_form = [&](int c1, int c2) {
    AffineForm out(nv);
    out.coeffs[vars.eps1()] = c1;
    out.coeffs[vars.eps2()] = c2;
    return FactoredRational::from(out);
  };
  const FactoredRational e1 = eps_form(1, 0);
  const FactoredRational e2 = eps_form(0, 1);
  const FactoredRational e21 = eps_form(-1, 1);

  std::vector<LimitCheck> out;
  for (const auto& [k, shift] : root_lattice_terms(r, order)) {
    (void)shift;
    LimitCheck c{k};
    const auto dir = coroot_direction(k);
    const QSeries fak = chart_z_series(finst, k, 1);
    const QSeries fbk = chart_z_series(finst, k, 2);
    const QSeries dkf = directional_derivative(f, dir);

    QSeries first = (fak.q_derivative() - fbk.q_derivative()).map([&](const FactoredRational& x) { return x / e21; });
    c.first = at_eps_zero(first) == -dkf.q_derivative();

    QSeries second = fa.q_derivative().q_derivative() * QSeries::constant(nv, order, e1) -
                     fb.q_derivative().q_derivative() * QSeries::constant(nv, order, e2);
    second = second.map([&](const FactoredRational& x) { return x / e21; });
    c.second = at_eps_zero(second) == -qqf;

    QSeries third = (fak - fa).map([&](const FactoredRational& x) { return x / e1; }) -
                    (fbk - fb).map([&](const FactoredRational& x) { return x / e2; });
    third = third.map([&](const FactoredRational& x) { return x / e21; });
    QSeries expected = directional_derivative(dkf, dir);
    expected *= ratio(-1, 2);
    c.third = at_eps_zero(third) == expected;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace nek
