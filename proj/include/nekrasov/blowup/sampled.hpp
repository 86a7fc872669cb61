#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nekrasov/algebra/sampling.hpp"
#include "nekrasov/blowup/series.hpp"

namespace nek {

// 1 / (product of forms) at a point; a vanishing factor is a pole.
inline Rational reciprocal_at(const FormProduct& f, const std::vector<Rational>& point, const std::string& label) {
  const Rational v = f.evaluate(point);
  if (v == 0) throw PoleError("denominator vanishes at the sample point", label);
  return 1 / v;
}

// Z_n at a rational point, summed term by term over the fixed points.
inline Rational z_value(int r, int n, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& y : enumerate_plane_fixed_points(r, n)) total += reciprocal_at(euler_class(y), point, y.render());
  return total;
}

struct SampledResidual {
  std::uint64_t seed = 0;
  int trials = 0;
  int redraws = 0;                                    // points rejected for hitting a pole
  std::vector<std::vector<Rational>> point_values;    // the points used
  // residual[trial][d][n]; d = 0 is the Z-identity residual
  std::vector<std::vector<std::vector<Rational>>> residual;
  long degree_bound = 0;                              // 2 * order * r * (2r)
  bool all_zero = true;
};

// Blowup-equation residuals evaluated at random points: every fixed-point
// term is evaluated numerically and summed, with no symbolic simplification.
inline SampledResidual blowup_residual_sampled(int r, unsigned d_max, int order, int trials, std::uint64_t seed) {
  if (trials < 1) throw UsageError("sampled mode needs at least one trial");
  const VariableSpace vars(r);
  const auto lattice = root_lattice_terms(r, order);
  SampledResidual out;
  out.seed = seed;
  out.trials = trials;
  out.degree_bound = 2L * order * r * (2L * r);
  RationalSampler sampler(seed);
  for (int trial = 0; trial < trials; ++trial) {
    for (;;) {
      std::vector<Rational> p = sampler.point(vars.size());
      p[vars.t()] = 0;
      try {
        std::vector<std::vector<Rational>> res(d_max + 1, std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
        for (int n = 0; n <= order; ++n) res[0][static_cast<std::size_t>(n)] = -z_value(r, n, p);
        for (const auto& term : lattice) {
          const int room = order - term.shift;
          const Rational inv_l = reciprocal_at(l_factor_product(term.k), p, term.k.render());
          const Rational c = coroot_weight(term.k).evaluate(p);
          const auto p1 = chart_point(vars, p, term.k, 1);
          const auto p2 = chart_point(vars, p, term.k, 2);
          std::vector<Rational> za, zb;
          for (int l = 0; l <= room; ++l) {
            za.push_back(z_value(r, l, p1));
            zb.push_back(z_value(r, l, p2));
          }
          for (int l = 0; l <= room; ++l) {
            for (int m = 0; l + m <= room; ++m) {
              const Rational w = c + l * p[vars.eps1()] + m * p[vars.eps2()];
              const Rational base = inv_l * za[static_cast<std::size_t>(l)] * zb[static_cast<std::size_t>(m)];
              Rational wd = 1;
              for (unsigned d = 0; d <= d_max; ++d) {
                res[d][static_cast<std::size_t>(term.shift + l + m)] += wd * base;
                wd *= w;
              }
            }
          }
        }
        for (unsigned d = 0; d <= d_max; ++d) {
          // Only the vanishing range 1 <= d <= 2r - 1 and d = 0 are claimed zero.
          if (d == 0 || d <= 2u * r - 1) {
            for (const auto& v : res[d]) {
              if (v != 0) out.all_zero = false;
            }
          }
        }
        out.point_values.push_back(p);
        out.residual.push_back(std::move(res));
        break;
      } catch (const PoleError&) {
        ++out.redraws;
      }
    }
  }
  return out;
}

}  // namespace nek
