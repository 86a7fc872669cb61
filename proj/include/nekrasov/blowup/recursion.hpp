#pragma once

#include <array>
#include <string>
#include <vector>

#include "nekrasov/blowup/series.hpp"

namespace nek {

struct RecursionResult {
  QSeries z;
  // Z_n(eps1 - eps2, eps2, a) from the second unknown agreed with the chart
  // substitution of the reconstructed Z_n at every order.
  bool second_chart_consistent = true;
};

// Determines Z order by order from the blowup equations with d = 1, 2.
// With X = Z_n(eps1, eps2 - eps1, a), Y = Z_n(eps1 - eps2, eps2, a):
//   n eps1 X + n eps2 Y = A,  n^2 eps1^2 X + n^2 eps2^2 Y = B,
// where A, B collect the terms built from Z_l, l < n. For r >= 2 the d = 1, 2
// sums vanish; for r = 1 only d = 1 does and the d = 2 sum equals -Z_{n-1}.
inline RecursionResult recursive_solve_z_checked(int r, int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  const VariableSpace vars(r);
  const std::size_t nv = vars.size();
  const auto lattice = root_lattice_terms(r, order);
  const CorootVector zero = CorootVector::zero(r);
  const FactoredRational e1 = variable(vars, vars.eps1());
  const FactoredRational e2 = variable(vars, vars.eps2());

  RecursionResult result{QSeries::one(nv, order), true};
  QSeries& z = result.z;
  // chart[k index][chart - 1][l]: Z_l in the chart substitution for lattice term k.
  std::vector<std::array<std::vector<FactoredRational>, 2>> chart(lattice.size());
  std::vector<FactoredRational> inv_l;
  std::vector<AffineForm> weights;
  std::vector<std::array<AffineMap, 2>> maps;
  for (const auto& term : lattice) {
    inv_l.push_back(FactoredRational::from(l_factor_product(term.k).inverse()));
    weights.push_back(coroot_weight(term.k));
    maps.push_back({chart_map(vars, term.k, 1), chart_map(vars, term.k, 2)});
  }
  auto extend_charts = [&](int l) {
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      for (int c = 0; c < 2; ++c) chart[i][static_cast<std::size_t>(c)].push_back(z[l].substitute(maps[i][static_cast<std::size_t>(c)]));
    }
  };
  extend_charts(0);

  for (int n = 1; n <= order; ++n) {
    std::vector<FactoredRational> a_terms, b_terms;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const int room = n - lattice[i].shift;
      if (room < 0) continue;
      for (int l = 0; l <= room; ++l) {
        const int m = room - l;
        const bool unknown = lattice[i].k == zero && (l == n || m == n);
        if (unknown) continue;
        AffineForm w = weights[i];
        w.coeffs[vars.eps1()] += l;
        w.coeffs[vars.eps2()] += m;
        const FactoredRational base = inv_l[i] * chart[i][0][static_cast<std::size_t>(l)] * chart[i][1][static_cast<std::size_t>(m)];
        const FactoredRational w1 = power(w, 1);
        a_terms.push_back(-(w1 * base));
        b_terms.push_back(-(w1 * w1 * base));
      }
    }
    if (r == 1) b_terms.push_back(-z[n - 1]);
    const FactoredRational a = sum(std::move(a_terms), nv);
    const FactoredRational b = sum(std::move(b_terms), nv);
    const Rational nn(n);
    // X = (n eps2 A - B) / (n^2 eps1 (eps2 - eps1)), Y = (B - n eps1 A) / (n^2 eps2 (eps2 - eps1)).
    std::vector<Rational> diff = zero_coeffs(vars);
    diff[vars.eps2()] = 1;
    diff[vars.eps1()] = -1;
    std::vector<Rational> e1c = zero_coeffs(vars), e2c = zero_coeffs(vars);
    e1c[vars.eps1()] = 1;
    e2c[vars.eps2()] = 1;
    FormProduct den_x(nv, nn * nn), den_y(nv, nn * nn);
    den_x.times(e1c).times(diff);
    den_y.times(e2c).times(diff);
    const FactoredRational x = (e2 * a * nn - b) * FactoredRational::from(den_x.inverse());
    const FactoredRational y = (b - e1 * a * nn) * FactoredRational::from(den_y.inverse());
    // X(eps1, eps2) = Z_n(eps1, eps2 - eps1): undo with eps2 -> eps1 + eps2.
    AffineMap back(nv);
    AffineForm img = AffineForm::variable(nv, vars.eps2());
    img.coeffs[vars.eps1()] = 1;
    back.set(vars.eps2(), img);
    z[n] = x.substitute(back);
    extend_charts(n);
    if (!(y == z[n].substitute(chart_map(vars, zero, 2)))) result.second_chart_consistent = false;
  }
  return result;
}

inline QSeries recursive_solve_z(int r, int order) { return recursive_solve_z_checked(r, order).z; }

}  // namespace nek
