#pragma once

#include <vector>

#include "nekrasov/algebra/factored_rational.hpp"
#include "nekrasov/partitions/blowup_points.hpp"
#include "nekrasov/plane/weights.hpp"

namespace nek {

// Coefficient vector over the full variable space (eps1, eps2, a, t).
inline std::vector<Rational> zero_coeffs(const VariableSpace& vars) { return std::vector<Rational>(vars.size(), Rational(0)); }

// l^k_alpha for the root e_alpha - e_beta, so <k, root> = k_alpha - k_beta
// and <a, root> = a_alpha - a_beta:
//   <k,root> < 0 : prod_{i+j <= -<k,root>-1} (-i eps1 - j eps2 + <a,root>)
//   <k,root> > 1 : prod_{i+j <= <k,root>-2} ((i+1) eps1 + (j+1) eps2 + <a,root>)
//   otherwise    : 1
inline FormProduct l_factor(const CorootVector& k, int alpha, int beta) {
  const VariableSpace vars(k.rank());
  if (alpha == beta) throw UsageError("l-factor needs a root, alpha != beta");
  FormProduct out(vars.size());
  const int n = k.root_pairing(alpha, beta);
  auto factor = [&](int c1, int c2) {
    std::vector<Rational> w = zero_coeffs(vars);
    w[vars.eps1()] = c1;
    w[vars.eps2()] = c2;
    w[vars.a(alpha)] += 1;
    w[vars.a(beta)] -= 1;
    out.times(w);
  };
  if (n < 0) {
    for (int i = 0; i <= -n - 1; ++i) {
      for (int j = 0; i + j <= -n - 1; ++j) factor(-i, -j);
    }
  } else if (n > 1) {
    for (int i = 0; i <= n - 2; ++i) {
      for (int j = 0; i + j <= n - 2; ++j) factor(i + 1, j + 1);
    }
  }
  return out;
}

// prod over all roots of l^k_alpha.
inline FormProduct l_factor_product(const CorootVector& k) {
  const VariableSpace vars(k.rank());
  FormProduct out(vars.size());
  for (int alpha = 1; alpha <= k.rank(); ++alpha) {
    for (int beta = 1; beta <= k.rank(); ++beta) {
      if (alpha != beta) out *= l_factor(k, alpha, beta);
    }
  }
  return out;
}

// Homology weight (p, q, c) of a plane fixed point, re-expressed after
// eps2 -> eps2 - eps1, a -> a + eps1 k (first chart) or
// eps1 -> eps1 - eps2, a -> a + eps2 k (second chart).
inline std::vector<Rational> chart_weight(const VariableSpace& vars, const std::vector<int>& w, const CorootVector& k,
                                          int chart) {
  std::vector<Rational> out = zero_coeffs(vars);
  int ck = 0;
  for (int alpha = 1; alpha <= vars.rank(); ++alpha) {
    out[vars.a(alpha)] = w[static_cast<std::size_t>(alpha) + 1];
    ck += w[static_cast<std::size_t>(alpha) + 1] * k[alpha];
  }
  const int p = w[0];
  const int q = w[1];
  if (chart == 1) {
    out[vars.eps1()] = p - q + ck;
    out[vars.eps2()] = q;
  } else {
    out[vars.eps1()] = p;
    out[vars.eps2()] = q - p + ck;
  }
  return out;
}

// Euler class of the tangent space at a blowup fixed point:
// prod l^k * n^{Y1}(eps1, eps2 - eps1, a + eps1 k) * n^{Y2}(eps1 - eps2, eps2, a + eps2 k).
inline FormProduct blowup_euler_class(const BlowupFixedPoint& fp) {
  const VariableSpace vars(fp.rank());
  FormProduct out = l_factor_product(fp.coroot);
  for (const auto& w : homology_weights(fp.tuple1)) out.times(chart_weight(vars, w, fp.coroot, 1));
  for (const auto& w : homology_weights(fp.tuple2)) out.times(chart_weight(vars, w, fp.coroot, 2));
  return out;
}

// Restriction of mu(C): |Y1| eps1 + |Y2| eps2 + (k, a) + ((k, k)/2)(eps1 + eps2).
inline AffineForm mu_weight(const BlowupFixedPoint& fp) {
  const VariableSpace vars(fp.rank());
  const CorootPairings pr = coroot_pairings(fp.coroot);
  AffineForm out(vars.size());
  out.coeffs[vars.eps1()] = Rational(fp.tuple1.size()) + pr.k_dot_k / 2;
  out.coeffs[vars.eps2()] = Rational(fp.tuple2.size()) + pr.k_dot_k / 2;
  for (int alpha = 1; alpha <= vars.rank(); ++alpha) out.coeffs[vars.a(alpha)] = pr.k_dot_a[static_cast<std::size_t>(alpha - 1)];
  return out;
}

// (k, a) + ((k, k)/2)(eps1 + eps2): the mu weight with empty diagrams.
inline AffineForm coroot_weight(const CorootVector& k) {
  return mu_weight({k, PartitionTuple::empty(k.rank()), PartitionTuple::empty(k.rank())});
}

// Sign and a-power of prod_{roots} l^k at eps = 0:
// prod_{alpha in Delta+} (-1)^{n(n+1)/2} <a, alpha>^{n^2}, n = <k, alpha>.
inline int l_factor_sign_at_zero(const CorootVector& k) {
  int sign = 1;
  for (int alpha = 1; alpha <= k.rank(); ++alpha) {
    for (int beta = alpha + 1; beta <= k.rank(); ++beta) {
      const long n = k.root_pairing(alpha, beta);
      sign *= sign_power(n * (n + 1) / 2);
    }
  }
  return sign;
}

inline FormProduct l_factor_product_at_zero(const CorootVector& k) {
  const VariableSpace vars(k.rank());
  FormProduct out(vars.size(), Rational(l_factor_sign_at_zero(k)));
  for (int alpha = 1; alpha <= k.rank(); ++alpha) {
    for (int beta = alpha + 1; beta <= k.rank(); ++beta) {
      const int n = k.root_pairing(alpha, beta);
      if (n == 0) continue;
      std::vector<Rational> w = zero_coeffs(vars);
      w[vars.a(alpha)] = 1;
      w[vars.a(beta)] = -1;
      out.times(w, n * n);
    }
  }
  return out;
}

}  // namespace nek
