#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nekrasov/algebra/sampling.hpp"
#include "nekrasov/blowup/sampled.hpp"

namespace nek {

// Thiele continued-fraction interpolation through (xs[i], ys[i]).
// Returns the interpolant's value at x0 once the fraction terminates, that is
// once the remaining points are reproduced exactly; nullopt if the points run
// out first.
inline std::optional<Rational> thiele_value(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                                            const Rational& x0) {
  if (xs.size() != ys.size() || xs.empty()) throw UsageError("interpolation needs matching nonempty samples");
  const std::size_t m = xs.size();
  std::vector<Rational> phi = ys;  // phi[j] holds phi_k(x_j) for j >= k
  std::vector<Rational> coeff;
  for (std::size_t k = 0; k < m; ++k) {
    coeff.push_back(phi[k]);
    bool done = true;
    for (std::size_t j = k + 1; j < m; ++j) {
      if (phi[j] != phi[k]) done = false;
    }
    // Need at least two points confirming the last coefficient.
    if (done && m - k >= 3) {
      // a0 + (x - x0)/(a1 + (x - x1)/(... + (x - x_{k-1})/a_k))
      Rational value = coeff[k];
      for (std::size_t i = k; i-- > 0;) {
        if (value == 0) return std::nullopt;
        value = coeff[i] + (x0 - xs[i]) / value;
      }
      return value;
    }
    for (std::size_t j = k + 1; j < m; ++j) {
      const Rational diff = phi[j] - phi[k];
      if (diff == 0) return std::nullopt;  // degenerate sample set
      phi[j] = (xs[j] - xs[k]) / diff;
    }
  }
  return std::nullopt;
}

// q^1..q^order coefficients of eps1 eps2 log Z at a rational point, from
// numerically summed fixed-point contributions.
inline std::vector<Rational> f_inst_values(int r, int order, const std::vector<Rational>& point) {
  const VariableSpace vars(r);
  std::vector<Rational> z(static_cast<std::size_t>(order) + 1), l(z.size());
  z[0] = 1;
  for (int n = 1; n <= order; ++n) z[static_cast<std::size_t>(n)] = z_value(r, n, point);
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k < n; ++k) acc += k * l[static_cast<std::size_t>(k)] * z[static_cast<std::size_t>(n - k)];
    l[static_cast<std::size_t>(n)] = z[static_cast<std::size_t>(n)] - acc / n;
  }
  const Rational e12 = point[vars.eps1()] * point[vars.eps2()];
  for (auto& x : l) x *= e12;
  return l;
}

struct ExtrapolatedPrepotential {
  std::vector<Rational> a_point;   // a_1..a_r
  std::vector<Rational> values;    // index n: F_n(a), n = 0..order
  int samples = 0;                 // eps-line points evaluated
};

// F_n(a) for a random a, by sampling F^inst along the line
// (eps1, eps2) = x (u, v) and extrapolating to x = 0 with Thiele fractions.
inline ExtrapolatedPrepotential f_lowest_sampled(int r, int order, std::uint64_t seed) {
  const VariableSpace vars(r);
  RationalSampler rng(seed);
  ExtrapolatedPrepotential out;
  std::vector<Rational> point(vars.size(), Rational(0));
  for (int alpha = 1; alpha <= r; ++alpha) {
    point[vars.a(alpha)] = rng.next();
    out.a_point.push_back(point[vars.a(alpha)]);
  }
  const Rational u = rng.next_nonzero();
  const Rational v = rng.next_nonzero();
  // Generous cap; the loop stops as soon as every fraction terminates.
  const int max_samples = 4 * order * order * r + 16;
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> ys(static_cast<std::size_t>(order) + 1);
  out.values.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  std::vector<bool> found(out.values.size(), false);
  found[0] = true;
  for (int step = 1; static_cast<int>(xs.size()) < max_samples; ++step) {
    const Rational x = ratio(step, 7);
    point[vars.eps1()] = x * u;
    point[vars.eps2()] = x * v;
    std::vector<Rational> f;
    try {
      f = f_inst_values(r, order, point);
    } catch (const PoleError&) {
      continue;
    }
    ++out.samples;
    xs.push_back(x);
    bool all = true;
    for (int n = 1; n <= order; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      ys[idx].push_back(f[idx]);
      if (found[idx]) continue;
      if (auto val = thiele_value(xs, ys[idx], Rational(0))) {
        out.values[idx] = *val;
        found[idx] = true;
      } else {
        all = false;
      }
    }
    if (all) return out;
  }
  throw ConsistencyError("eps -> 0 extrapolation did not converge");
}

}  // namespace nek
