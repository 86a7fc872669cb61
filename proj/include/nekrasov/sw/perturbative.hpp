#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "nekrasov/algebra/errors.hpp"

namespace nek {

// sum_{alpha<beta} [(a_alpha - a_beta)^2 log(i (a_alpha - a_beta) / Lambda) - 3/2 (a_alpha - a_beta)^2]
// in double precision, principal branch of log: for real d != 0,
// log(i d / Lambda) = log(|d| / Lambda) + i sign(d) pi / 2.
// Reporting only; nothing exact depends on it.
inline std::complex<double> perturbative_eval(const std::vector<double>& a, double lambda) {
  if (!(lambda > 0)) throw DomainError("Lambda must be positive");
  std::complex<double> total = 0;
  for (std::size_t alpha = 0; alpha < a.size(); ++alpha) {
    for (std::size_t beta = alpha + 1; beta < a.size(); ++beta) {
      const double d = a[alpha] - a[beta];
      if (d == 0) throw DomainError("coincident a-values");
      const std::complex<double> arg(0.0, d / lambda);
      total += d * d * std::log(arg) - 1.5 * d * d;
    }
  }
  return total;
}

}  // namespace nek
