#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nekrasov/partitions/tuple.hpp"
#include "nekrasov/plane/laurent.hpp"
#include "nekrasov/plane/weights.hpp"

namespace nek {

struct HilbertCheck {
  bool ok = true;
  std::string report;  // first mismatch, empty when ok
};

namespace detail {

inline Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// Partitions of n as multiplicity vectors m[1..n].
inline void for_each_cycle_type(int n, const std::function<void(const std::vector<int>&)>& f) {
  for (const auto& p : partitions_of(n)) {
    std::vector<int> m(static_cast<std::size_t>(n) + 1, 0);
    for (int part : p.columns()) ++m[static_cast<std::size_t>(part)];
    f(m);
  }
}

}  // namespace detail

// sum_Y q^|Y| / prod_s (1 - t1^{-l} t2^{1+a})(1 - t1^{1+l} t2^{-a})
//   = exp(sum_m q^m / ((1 - t1^m)(1 - t2^m) m)),
// compared order by order after multiplying both sides by n!.
inline HilbertCheck check_haiman(int order) {
  if (order < 0) throw UsageError("order must be nonnegative");
  HilbertCheck out;
  for (int n = 0; n <= order; ++n) {
    const Integer nf = detail::factorial(n);
    LaurentFractionSum lhs(2), rhs(2);
    for (const auto& y : partitions_of(n)) {
      std::vector<std::vector<int>> factors;
      for (const auto& [i, j] : y.cells()) {
        const int a = arm(y, i, j);
        const int l = leg(y, i, j);
        factors.push_back({-l, 1 + a});
        factors.push_back({1 + l, -a});
      }
      lhs.add(LaurentPolynomial::constant(2, nf), factors);
    }
    // The q^n coefficient of the exponential is sum over cycle types of
    // prod_i (1/(i (1 - t1^i)(1 - t2^i)))^{m_i} / m_i!; n! / z_mu is the class size.
    detail::for_each_cycle_type(n, [&](const std::vector<int>& m) {
      Integer z = 1;
      std::vector<std::vector<int>> factors;
      for (std::size_t i = 1; i < m.size(); ++i) {
        for (int c = 0; c < m[i]; ++c) {
          z *= static_cast<long>(i);
          factors.push_back({static_cast<int>(i), 0});
          factors.push_back({0, static_cast<int>(i)});
        }
        z *= detail::factorial(m[i]);
      }
      rhs.add(LaurentPolynomial::constant(2, nf / z), factors);
    });
    if (!LaurentFractionSum::equal(lhs, rhs)) {
      out.ok = false;
      out.report = "mismatch at q^" + std::to_string(n);
      return out;
    }
  }
  return out;
}

// Two-point localization on M(2,1) against
// (1 + t1 t2) / ((1 - t1)(1 - t2)(1 - t1 t2 e1/e2)(1 - t1 t2 e2/e1)).
inline HilbertCheck check_m21() {
  HilbertCheck out;
  LaurentFractionSum lhs(4), rhs(4);
  for (const auto& y : enumerate_plane_fixed_points(2, 1)) {
    lhs.add(LaurentPolynomial::constant(4, 1), kth_euler_denominator(plane_weights(y)).factors);
  }
  LaurentPolynomial num = LaurentPolynomial::constant(4, 1) + LaurentPolynomial::monomial({1, 1, 0, 0});
  rhs.add(num, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, -1}, {1, 1, -1, 1}});
  if (!LaurentFractionSum::equal(lhs, rhs)) {
    out.ok = false;
    out.report = "two-point sum differs from the closed form";
  }
  return out;
}

}  // namespace nek
