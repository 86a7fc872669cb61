#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace nek;
using nek::testing::cst;
using nek::testing::lin;
using nek::testing::var;

namespace {

const VariableSpace kVars2(2);

// Random rational function: small polynomial over a product of up to three
// random linear forms.
FactoredRational random_rational(std::mt19937_64& gen, const VariableSpace& vars) {
  auto small = [&](int bound) { return static_cast<long>(gen() % static_cast<std::uint64_t>(2 * bound + 1)) - bound; };
  const std::size_t nv = vars.size();
  RatPolynomial num(nv);
  const int terms = 1 + static_cast<int>(gen() % 3);
  for (int i = 0; i < terms; ++i) {
    RatPolynomial m = RatPolynomial::constant(nv, Rational(small(5)));
    const int deg = static_cast<int>(gen() % 3);
    for (int d = 0; d < deg; ++d) m *= RatPolynomial::variable(nv, gen() % (nv - 1));
    num += m;
  }
  FormProduct den(nv, ratio(1 + static_cast<long>(gen() % 4), 1 + static_cast<long>(gen() % 3)));
  const int nden = static_cast<int>(gen() % 4);
  for (int i = 0; i < nden; ++i) {
    std::vector<Rational> c(nv, Rational(0));
    bool any = false;
    for (std::size_t v = 0; v + 1 < nv; ++v) {
      c[v] = small(2);
      any = any || c[v] != 0;
    }
    if (!any) c[0] = 1;
    den.times(c);
  }
  return FactoredRational::from(num) * FactoredRational::from(den.inverse());
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(ratio(2, 4), Rational(1, 2));
  EXPECT_EQ(to_string(ratio(6, -4)), "-3/2");
  EXPECT_EQ(to_string(ratio(0, 5)), "0");
  EXPECT_EQ(ratio(0, 5).get_den(), 1);
  EXPECT_THROW(ratio(1, 0), DomainError);
  EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
}

TEST(Polynomial, Arithmetic) {
  const std::size_t nv = kVars2.size();
  auto x = RatPolynomial::variable(nv, kVars2.eps1());
  auto y = RatPolynomial::variable(nv, kVars2.eps2());
  EXPECT_EQ((x + y) + (x - y), x * Rational(2));
  EXPECT_TRUE((x * RatPolynomial(nv)).is_zero());
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_THROW(x + RatPolynomial::variable(3, 0), UsageError);
}

TEST(Polynomial, MultiplyLinearMatchesGeneralProduct) {
  std::mt19937_64 gen(7);
  const std::size_t nv = kVars2.size();
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial p(nv);
    for (int i = 0; i < 6; ++i) {
      IntPolynomial m = IntPolynomial::constant(nv, Integer(static_cast<long>(gen() % 11) - 5));
      for (unsigned d = 0; d < gen() % 4; ++d) m *= IntPolynomial::variable(nv, gen() % 4);
      p += m;
    }
    std::vector<std::int64_t> c(nv, 0);
    for (std::size_t v = 0; v < 4; ++v) c[v] = static_cast<std::int64_t>(gen() % 7) - 3;
    if (std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; })) c[1] = 1;
    const LinearForm form = LinearForm::normalize(nv, c).second;
    EXPECT_EQ(multiply_linear(p, form), p * IntPolynomial::from(form));
    if (!p.is_zero()) {
      auto q = divide_exact(multiply_linear(p, form), form);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*q, p);
    }
  }
}

TEST(LinearFormTest, NormalizationAndRendering) {
  auto [pre, form] = LinearForm::normalize(kVars2.size(), std::vector<Rational>{ratio(-2, 3), ratio(-4, 3), 2, -2, 0});
  EXPECT_EQ(pre, Rational(-2, 3));
  EXPECT_EQ(form.render(kVars2), "eps1+2*eps2-3*a1+3*a2");
  auto [pre2, form2] = LinearForm::normalize(kVars2.size(), std::vector<std::int64_t>{1, 1, -1, 1, 0});
  EXPECT_EQ(pre2, 1);
  EXPECT_EQ(form2.render(kVars2), "eps1+eps2-a1+a2");
  EXPECT_THROW(LinearForm::normalize(kVars2.size(), std::vector<std::int64_t>{0, 0, 0, 0, 0}), DomainError);
}

TEST(FactoredRationalTest, LocalizationPairSum) {
  // 1/((e1+e2+a2-a1)(a1-a2)) + 1/((e1+e2+a1-a2)(a2-a1))
  const auto u = lin(kVars2, {1, 1, -1, 1});
  const auto v = lin(kVars2, {1, 1, 1, -1});
  const auto d = lin(kVars2, {0, 0, 1, -1});
  const auto one = cst(kVars2, 1);
  const FactoredRational sum = one / u / d - one / v / d;
  const FactoredRational expected = cst(kVars2, 2) / u / v;
  EXPECT_EQ(sum, expected);

  // Independent check with plain polynomials: cross-multiply n1/d1 + n2/d2
  // against 2/(u v).
  const std::size_t nv = kVars2.size();
  auto P = [&](std::initializer_list<long> c) {
    RatPolynomial p(nv);
    std::size_t i = 0;
    for (long x : c) p += RatPolynomial::variable(nv, i++) * Rational(x);
    return p;
  };
  const RatPolynomial pu = P({1, 1, -1, 1}), pv = P({1, 1, 1, -1}), pd = P({0, 0, 1, -1});
  const RatPolynomial d1 = pu * pd, d2 = pv * pd * Rational(-1);
  const RatPolynomial lhs_num = d2 + d1;  // 1*d2 + 1*d1 over d1*d2
  EXPECT_EQ(lhs_num * (pu * pv), (d1 * d2) * Rational(2));
}

TEST(FactoredRationalTest, TrivialIdentities) {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_rational(gen, kVars2);
    EXPECT_EQ(f + FactoredRational::zero(kVars2.size()), f);
    if (!f.is_zero()) {
      const auto g = random_rational(gen, kVars2);
      EXPECT_EQ(f / f, cst(kVars2, 1));
      EXPECT_EQ(f * g - g * f, FactoredRational::zero(kVars2.size()));
    }
  }
  EXPECT_THROW(cst(kVars2, 1) / FactoredRational::zero(kVars2.size()), DomainError);
  // f / f for a non-linear numerator goes through exact polynomial division.
  const auto u = lin(kVars2, {1, 1, -1, 1});
  const auto w = u * u + lin(kVars2, {0, 0, 1, 0});
  EXPECT_EQ(w / w, cst(kVars2, 1));
  EXPECT_EQ((w * u) / w, u);
  EXPECT_THROW(u / w, DomainError);
}

TEST(FactoredRationalTest, Substitution) {
  const std::size_t nv = kVars2.size();
  const auto one = cst(kVars2, 1);
  AffineMap shift(nv);
  shift.set(kVars2.a(1), AffineForm::variable(nv, kVars2.a(1)) + AffineForm::variable(nv, kVars2.eps1()));
  EXPECT_EQ((one / lin(kVars2, {0, 0, 1, -1})).substitute(shift), one / lin(kVars2, {1, 0, 1, -1}));

  AffineMap reparam(nv);
  reparam.set(kVars2.eps2(), AffineForm::variable(nv, kVars2.eps2()) - AffineForm::variable(nv, kVars2.eps1()));
  EXPECT_EQ(lin(kVars2, {1, 1}).substitute(reparam), var(kVars2, kVars2.eps2()));

  // 2/((e1+e2)^2 - (a1-a2)^2) at eps = 0 is -2/(a1-a2)^2.
  const auto f = cst(kVars2, 2) / lin(kVars2, {1, 1, -1, 1}) / lin(kVars2, {1, 1, 1, -1});
  AffineMap zero(nv);
  zero.set(kVars2.eps1(), AffineForm(nv)).set(kVars2.eps2(), AffineForm(nv));
  const auto g = f.substitute(zero);
  const auto d = lin(kVars2, {0, 0, 1, -1});
  EXPECT_EQ(g, cst(kVars2, -2) / d / d);
  RationalSampler rng(11);
  for (int i = 0; i < 20; ++i) {
    auto p = nek::testing::random_point(rng, kVars2);
    auto p0 = p;
    p0[0] = p0[1] = 0;
    EXPECT_EQ(g.evaluate(p), f.evaluate(p0));
  }

  // A factor that becomes identically zero is reported, not divided by.
  AffineMap collide(nv);
  collide.set(kVars2.a(1), AffineForm::variable(nv, kVars2.a(2)));
  try {
    (one / d).substitute(collide);
    FAIL() << "expected a pole";
  } catch (const PoleError& e) {
    EXPECT_EQ(e.factor(), "a1-a2");
  }
}

TEST(FactoredRationalTest, Evaluation) {
  const std::size_t nv = kVars2.size();
  std::vector<Rational> p(nv, Rational(0));
  p[kVars2.a(1)] = 3;
  p[kVars2.a(2)] = 1;
  EXPECT_EQ(lin(kVars2, {0, 0, 1, -1}).evaluate(p), 2);
  p[0] = Rational(1, 2);
  p[1] = Rational(-1, 3);
  EXPECT_EQ((cst(kVars2, 1) / var(kVars2, 0) / var(kVars2, 1)).evaluate(p), -6);
  p[0] = p[1] = 0;
  EXPECT_THROW((cst(kVars2, 1) / var(kVars2, 0)).evaluate(p), PoleError);
}

// evaluate commutes with +, -, *, / at random points.
TEST(FactoredRationalTest, EvaluationIsAHomomorphism) {
  std::mt19937_64 gen(2024);
  RationalSampler rng(99);
  for (int kind = 0; kind < 4; ++kind) {
    int checked = 0;
    while (checked < 100) {
      const auto f = random_rational(gen, kVars2);
      const auto g = random_rational(gen, kVars2);
      // Division needs a divisor numerator that is constant or a linear form.
      if (kind == 3 && (g.is_zero() || !(g.numerator().is_constant() || FactoredRational::as_linear_form(g.numerator()))))
        continue;
      const auto p = nek::testing::random_point(rng, kVars2);
      auto fv = nek::testing::try_evaluate(f, p);
      auto gv = nek::testing::try_evaluate(g, p);
      if (!fv || !gv || (kind == 3 && *gv == 0)) continue;
      FactoredRational h;
      Rational expected;
      switch (kind) {
        case 0: h = f + g; expected = *fv + *gv; break;
        case 1: h = f - g; expected = *fv - *gv; break;
        case 2: h = f * g; expected = *fv * *gv; break;
        default: h = f / g; expected = *fv / *gv; break;
      }
      EXPECT_EQ(h.evaluate(p), expected) << "operation " << kind;
      ++checked;
    }
  }
}

TEST(FactoredRationalTest, CanonicalizationIsIdempotent) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_rational(gen, kVars2) + random_rational(gen, kVars2);
    const auto again = FactoredRational::from_parts(f.scalar(), f.numerator(), f.denominator());
    EXPECT_EQ(again, f);
    EXPECT_EQ(again.render(kVars2), f.render(kVars2));
  }
}

TEST(FactoredRationalTest, AdditionIsAssociativeAndCommutative) {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_rational(gen, kVars2);
    const auto g = random_rational(gen, kVars2);
    const auto h = random_rational(gen, kVars2);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(sum({f, g, h}, kVars2.size()), (f + g) + h);
  }
}

TEST(FactoredRationalTest, QuotientRuleDerivative) {
  std::mt19937_64 gen(23);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_rational(gen, kVars2);
    const auto g = random_rational(gen, kVars2);
    const std::size_t v = gen() % 4;
    EXPECT_EQ((f * g).derivative(v), f.derivative(v) * g + f * g.derivative(v));
  }
  const auto x = var(kVars2, kVars2.a(1));
  EXPECT_EQ((cst(kVars2, 1) / x).derivative(kVars2.a(1)), cst(kVars2, -1) / x / x);
}

TEST(QSeriesTest, ExpOfRankOneTerm) {
  const VariableSpace v1(1);
  const std::size_t nv = v1.size();
  QSeries s(nv, 3);
  const auto inv_e12 = cst(v1, 1) / var(v1, v1.eps1()) / var(v1, v1.eps2());
  s[1] = inv_e12;
  const QSeries e = exp(s);
  EXPECT_EQ(e[3], inv_e12 * inv_e12 * inv_e12 * Rational(1, 6));
  EXPECT_TRUE(log(QSeries::one(nv, 4)).is_zero());
  EXPECT_EQ(log(e), s);
  EXPECT_THROW(log(s), DomainError);
  EXPECT_THROW(exp(QSeries::one(nv, 2)), DomainError);
}

TEST(QSeriesTest, ExpLogInverseUpToOrderTwelve) {
  const VariableSpace vars(1);
  const std::size_t nv = vars.size();
  const auto e = lin(vars, {1, 1});
  for (int order = 0; order <= 12; ++order) {
    QSeries s(nv, order);
    FactoredRational power = cst(vars, 1);
    for (int n = 1; n <= order; ++n) {
      power = power / e;
      s[n] = power * Rational(n % 3 == 0 ? -n : n);
    }
    EXPECT_EQ(log(exp(s)), s) << "order " << order;
    QSeries one_plus = s;
    one_plus[0] = cst(vars, 1);
    EXPECT_EQ(exp(log(one_plus)), one_plus) << "order " << order;
  }
}

TEST(QSeriesTest, TruncationAndOffsets) {
  const std::size_t nv = kVars2.size();
  QSeries a = QSeries::one(nv, 5), b = QSeries::one(nv, 2);
  EXPECT_EQ((a * b).order(), 2);
  EXPECT_EQ((a + b).order(), 2);
  QSeries c(nv, 2, Rational(1, 4));
  EXPECT_THROW(a + c, UsageError);
  EXPECT_EQ((a * c).offset(), Rational(1, 4));
  EXPECT_THROW(b.truncated(3), UsageError);
  QSeries q(nv, 2);
  q[1] = cst(kVars2, 1);
  // (q d/dq) on q^(n + 1/4) scales by n + 1/4
  QSeries qo(nv, 2, Rational(1, 4));
  qo[1] = cst(kVars2, 1);
  EXPECT_EQ(qo.q_derivative()[1], cst(kVars2, Rational(5, 4)));
  EXPECT_EQ(inverse(QSeries::one(nv, 2) + q)[2], cst(kVars2, 1));
}
