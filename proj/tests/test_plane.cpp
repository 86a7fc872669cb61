#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace nek;
using nek::testing::cst;
using nek::testing::lin;
using nek::testing::var;

namespace {

std::vector<std::vector<int>> sorted(std::vector<std::vector<int>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

AffineMap swap_eps(const VariableSpace& vars) {
  AffineMap m(vars.size());
  m.set(vars.eps1(), AffineForm::variable(vars.size(), vars.eps2()));
  m.set(vars.eps2(), AffineForm::variable(vars.size(), vars.eps1()));
  return m;
}

AffineMap negate_all(const VariableSpace& vars) {
  AffineMap m(vars.size());
  for (std::size_t v = 0; v + 1 < vars.size(); ++v) m.set(v, Rational(-1) * AffineForm::variable(vars.size(), v));
  return m;
}

AffineMap permute_a(const VariableSpace& vars, const std::vector<int>& perm) {
  AffineMap m(vars.size());
  for (int alpha = 1; alpha <= vars.rank(); ++alpha) {
    m.set(vars.a(alpha), AffineForm::variable(vars.size(), vars.a(perm[static_cast<std::size_t>(alpha - 1)])));
  }
  return m;
}

}  // namespace

TEST(WeightsTest, SingleBox) {
  const auto ws = plane_weights(PartitionTuple({Partition(std::vector<int>{1})}));
  EXPECT_EQ(sorted(ws.homology_forms), (std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(sorted(ws.k_exponents), (std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 0}}));
  EXPECT_TRUE(plane_weights(PartitionTuple::empty(1)).homology_forms.empty());
}

TEST(WeightsTest, RankTwoOneBox) {
  const PartitionTuple y({Partition(std::vector<int>{1}), Partition(std::vector<int>{})});
  const auto ws = plane_weights(y);
  // eps1, eps2, eps1 + eps2 + a2 - a1, a1 - a2
  const std::vector<std::vector<int>> expected = {{0, 0, 1, -1}, {0, 1, 0, 0}, {1, 0, 0, 0}, {1, 1, -1, 1}};
  EXPECT_EQ(sorted(ws.homology_forms), expected);
  EXPECT_EQ(sorted(ws.k_exponents), expected);

  const VariableSpace v2(2);
  const auto e = FactoredRational::from(euler_class(y));
  EXPECT_EQ(e, var(v2, 0) * var(v2, 1) * lin(v2, {1, 1, -1, 1}) * lin(v2, {0, 0, 1, -1}));
  EXPECT_EQ(euler_class(PartitionTuple::empty(2)).degree(), 0);

  // (1 - t1)(1 - t2)(1 - e1/e2)(1 - t1 t2 e2/e1)
  const auto den = kth_euler_denominator(ws).expand();
  auto one_minus = [](std::vector<int> e) { return LaurentPolynomial::constant(4, 1) - LaurentPolynomial::monomial(e); };
  EXPECT_EQ(den, one_minus({1, 0, 0, 0}) * one_minus({0, 1, 0, 0}) * one_minus({0, 0, 1, -1}) * one_minus({1, 1, -1, 1}));
  EXPECT_EQ(kth_euler_denominator(plane_weights(PartitionTuple::empty(2))).expand(), LaurentPolynomial::constant(4, 1));
}

// The K-theory character and the homology forms describe the same weights.
TEST(WeightsTest, Correspondence) {
  for (int r = 1; r <= 2; ++r) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& y : enumerate_plane_fixed_points(r, n)) {
        const auto ws = plane_weights(y);
        EXPECT_EQ(ws.homology_forms.size(), static_cast<std::size_t>(2 * n * r));
        EXPECT_TRUE(weights_correspond(ws)) << y.render();
      }
    }
  }
}

TEST(WeightsTest, ConjugationSwapsEpsilons) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& y : enumerate_plane_fixed_points(r, n)) {
        auto c = homology_weights(y.conjugate());
        for (auto& w : c) std::swap(w[0], w[1]);
        EXPECT_EQ(sorted(c), sorted(homology_weights(y))) << y.render();
      }
    }
  }
}

TEST(PartitionFunctionTest, RankOneClosedForm) {
  const VariableSpace v1(1);
  const auto inv = cst(v1, 1) / var(v1, 0) / var(v1, 1);
  EXPECT_EQ(z_coefficient(1, 1), inv);
  EXPECT_EQ(z_coefficient(1, 3), inv * inv * inv * Rational(1, 6));
  QSeries s(v1.size(), 4);
  s[1] = inv;
  EXPECT_EQ(z_series(1, 4), exp(s));
  EXPECT_EQ(f_inst_series(1, 3)[1], cst(v1, 1));
  EXPECT_TRUE(f_inst_series(1, 3)[2].is_zero());
}

TEST(PartitionFunctionTest, RankTwoFirstCoefficient) {
  const VariableSpace v2(2);
  const auto u = lin(v2, {1, 1, -1, 1});
  const auto w = lin(v2, {1, 1, 1, -1});
  const auto z1 = cst(v2, 2) / var(v2, 0) / var(v2, 1) / u / w;
  EXPECT_EQ(z_coefficient(2, 1), z1);
  EXPECT_EQ(f_inst_series(2, 1)[1], cst(v2, 2) / u / w);

  // Common-denominator oracle with plain polynomials: sum of 1/e over both
  // fixed points, cross-multiplied against 2 / (e1 e2 u w).
  const std::size_t nv = v2.size();
  RatPolynomial num(nv), den = RatPolynomial::constant(nv, Rational(1));
  for (const auto& y : enumerate_plane_fixed_points(2, 1)) {
    RatPolynomial e = RatPolynomial::constant(nv, Rational(1));
    for (const auto& wt : homology_weights(y)) {
      RatPolynomial f(nv);
      for (std::size_t i = 0; i < wt.size(); ++i) f += RatPolynomial::variable(nv, i) * Rational(wt[i]);
      e *= f;
    }
    num = num * e + den;
    den *= e;
  }
  auto P = [&](std::initializer_list<long> c) {
    RatPolynomial p(nv);
    std::size_t i = 0;
    for (long x : c) p += RatPolynomial::variable(nv, i++) * Rational(x);
    return p;
  };
  const RatPolynomial closed = P({1}) * P({0, 1}) * P({1, 1, -1, 1}) * P({1, 1, 1, -1});
  EXPECT_EQ(num * closed, den * Rational(2));

  std::vector<Rational> point = {1, 1, 5, 0, 0};
  EXPECT_EQ(z_coefficient(2, 1).evaluate(point), Rational(-2, 21));
}

TEST(PartitionFunctionTest, SymmetriesSymbolic) {
  for (int r = 1; r <= 3; ++r) {
    const VariableSpace vars(r);
    for (int n = 1; n <= (r == 3 ? 2 : 3); ++n) {
      const auto z = z_coefficient(r, n);
      EXPECT_EQ(z.substitute(swap_eps(vars)), z);
      EXPECT_EQ(z.substitute(negate_all(vars)), z);
      std::vector<int> perm(static_cast<std::size_t>(r));
      std::iota(perm.begin(), perm.end(), 1);
      do {
        EXPECT_EQ(z.substitute(permute_a(vars, perm)), z);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(PartitionFunctionTest, SymmetriesAndHomogeneitySampled) {
  RationalSampler rng(8);
  for (int r = 1; r <= 3; ++r) {
    const VariableSpace vars(r);
    for (int n = 1; n <= 3; ++n) {
      int checked = 0;
      while (checked < 50) {
        auto p = nek::testing::random_point(rng, vars);
        Rational z;
        try {
          z = z_value(r, n, p);
        } catch (const PoleError&) {
          continue;
        }
        auto swapped = p;
        std::swap(swapped[vars.eps1()], swapped[vars.eps2()]);
        EXPECT_EQ(z_value(r, n, swapped), z);
        auto negated = p;
        for (auto& x : negated) x = -x;
        EXPECT_EQ(z_value(r, n, negated), z);
        auto rotated = p;
        std::rotate(rotated.begin() + 2, rotated.begin() + 3, rotated.begin() + 2 + r);
        EXPECT_EQ(z_value(r, n, rotated), z);
        const Rational lambda = rng.next_nonzero();
        auto scaled = p;
        for (auto& x : scaled) x *= lambda;
        EXPECT_EQ(z_value(r, n, scaled) * pow(lambda, static_cast<unsigned>(2 * n * r)), z);
        ++checked;
      }
    }
  }
}

TEST(HilbertTest, Identities) {
  EXPECT_TRUE(check_haiman(0).ok);
  EXPECT_TRUE(check_haiman(4).ok);
  EXPECT_TRUE(check_m21().ok);
}
