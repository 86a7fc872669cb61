#pragma once

#include <algorithm>
#include <vector>

#include "nekrasov/algebra/factored_rational.hpp"
#include "nekrasov/partitions/tuple.hpp"
#include "nekrasov/plane/laurent.hpp"

namespace nek {

// Tangent weights at a fixed point of M(r, n). A homology form is stored by
// its coefficients on (eps1, eps2, a_1..a_r); a K-theory weight by the
// exponents (p, q, c_1..c_r) of t1^p t2^q prod e_alpha^{c_alpha}.
struct WeightSystem {
  int rank = 0;
  std::vector<std::vector<int>> homology_forms;
  std::vector<std::vector<int>> k_exponents;
};

// Homology forms from the localization formula for Z.
inline std::vector<std::vector<int>> homology_weights(const PartitionTuple& y) {
  const int r = y.rank();
  std::vector<std::vector<int>> out;
  for (int alpha = 1; alpha <= r; ++alpha) {
    for (int beta = 1; beta <= r; ++beta) {
      const Partition& ya = y[alpha];
      const Partition& yb = y[beta];
      auto base = [&]() {
        std::vector<int> w(static_cast<std::size_t>(r) + 2, 0);
        w[static_cast<std::size_t>(beta) + 1] += 1;
        w[static_cast<std::size_t>(alpha) + 1] -= 1;
        return w;
      };
      for (auto [i, j] : ya.cells()) {
        auto w = base();
        w[0] = -leg(yb, i, j);
        w[1] = arm(ya, i, j) + 1;
        out.push_back(std::move(w));
      }
      for (auto [i, j] : yb.cells()) {
        auto w = base();
        w[0] = leg(ya, i, j) + 1;
        w[1] = -arm(yb, i, j);
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

// Character of the tangent space computed from the diagram characters
// V_alpha = sum_{(i,j) in Y_alpha} t1^{1-i} t2^{1-j}:
//   sum_{alpha,beta} e_beta/e_alpha ((t1 + t2 - 1 - t1 t2) V_alpha^* V_beta + V_beta + t1 t2 V_alpha^*).
inline LaurentPolynomial tangent_character(const PartitionTuple& y) {
  const int r = y.rank();
  const std::size_t nv = static_cast<std::size_t>(r) + 2;
  std::vector<LaurentPolynomial> v;
  for (int alpha = 1; alpha <= r; ++alpha) {
    LaurentPolynomial va(nv);
    for (auto [i, j] : y[alpha].cells()) {
      std::vector<int> e(nv, 0);
      e[0] = 1 - i;
      e[1] = 1 - j;
      va.add_term(e, 1);
    }
    v.push_back(std::move(va));
  }
  auto mono = [&](int p, int q) {
    std::vector<int> e(nv, 0);
    e[0] = p;
    e[1] = q;
    return LaurentPolynomial::monomial(e);
  };
  const LaurentPolynomial one = mono(0, 0);
  const LaurentPolynomial t1t2 = mono(1, 1);
  const LaurentPolynomial cross = mono(1, 0) + mono(0, 1) - one - t1t2;
  LaurentPolynomial total(nv);
  for (int alpha = 1; alpha <= r; ++alpha) {
    const LaurentPolynomial va_dual = v[static_cast<std::size_t>(alpha - 1)].dual();
    for (int beta = 1; beta <= r; ++beta) {
      const LaurentPolynomial& vb = v[static_cast<std::size_t>(beta - 1)];
      std::vector<int> e(nv, 0);
      e[static_cast<std::size_t>(beta) + 1] += 1;
      e[static_cast<std::size_t>(alpha) + 1] -= 1;
      total += LaurentPolynomial::monomial(e) * (cross * va_dual * vb + vb + t1t2 * va_dual);
    }
  }
  return total;
}

// Tangent weights as a multiset of exponent vectors; throws if the character
// is not a sum of monomials with positive coefficients.
inline std::vector<std::vector<int>> k_theory_weights(const PartitionTuple& y) {
  std::vector<std::vector<int>> out;
  const LaurentPolynomial chi = tangent_character(y);
  for (const auto& [e, c] : chi.terms()) {
    if (c < 0 || !c.fits_sint_p()) throw ConsistencyError("tangent character has a negative coefficient");
    for (int i = 0; i < c.get_si(); ++i) out.push_back(e);
  }
  return out;
}

inline WeightSystem plane_weights(const PartitionTuple& y) {
  return {y.rank(), homology_weights(y), k_theory_weights(y)};
}

// True when the exponent multiset equals the coefficient multiset.
inline bool weights_correspond(const WeightSystem& ws) {
  auto h = ws.homology_forms;
  auto k = ws.k_exponents;
  std::sort(h.begin(), h.end());
  std::sort(k.begin(), k.end());
  return h == k;
}

// Converts a homology weight (coefficients on eps1, eps2, a) into the
// coefficient vector of a form in the full variable space (t last).
inline std::vector<Rational> to_variable_coeffs(const std::vector<int>& w) {
  std::vector<Rational> out;
  for (int c : w) out.emplace_back(c);
  out.emplace_back(0);
  return out;
}

// Equivariant Euler class: the product of all homology forms.
inline FormProduct euler_class(const PartitionTuple& y) {
  const VariableSpace vars(y.rank());
  FormProduct out(vars.size());
  for (const auto& w : homology_weights(y)) out.times(to_variable_coeffs(w));
  return out;
}

// prod over K-theory weights m of (1 - m); the factors are kept as exponents.
struct KDenominator {
  std::size_t nvars = 0;
  std::vector<std::vector<int>> factors;

  LaurentPolynomial expand() const {
    LaurentPolynomial out = LaurentPolynomial::constant(nvars, 1);
    for (const auto& m : factors) out *= LaurentPolynomial::constant(nvars, 1) - LaurentPolynomial::monomial(m);
    return out;
  }
};

inline KDenominator kth_euler_denominator(const WeightSystem& ws) {
  return {static_cast<std::size_t>(ws.rank) + 2, ws.k_exponents};
}

}  // namespace nek
