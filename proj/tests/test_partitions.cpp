#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace nek;

namespace {

// Brute-force partitions of n: all weakly decreasing sequences.
std::set<std::vector<int>> brute_partitions(int n, int cap) {
  std::set<std::vector<int>> out;
  if (n == 0) return {{}};
  for (int first = std::min(n, cap); first >= 1; --first) {
    for (auto rest : brute_partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.insert(rest);
    }
  }
  return out;
}

}  // namespace

TEST(PartitionTest, ArmLegConventions) {
  const Partition y(std::vector<int>{2, 1});
  const auto s = arm_leg(y, y, 1, 1);
  EXPECT_EQ(s.arm, 1);
  EXPECT_EQ(s.leg, 1);
  EXPECT_EQ(s.coarm, 0);
  EXPECT_EQ(s.coleg, 0);

  const auto e = arm_leg(Partition(std::vector<int>{}), Partition(std::vector<int>{1}), 1, 1);
  EXPECT_EQ(e.leg, 0);
  EXPECT_EQ(e.arm, -1);

  const auto t = arm_leg(Partition(std::vector<int>{3}), Partition(std::vector<int>{}), 1, 1);
  EXPECT_EQ(t.arm, 2);
  EXPECT_EQ(t.leg, -1);

  EXPECT_THROW(arm_leg(y, y, 0, 1), UsageError);
  EXPECT_THROW(Partition(std::vector<int>{1, 2}), UsageError);
  EXPECT_EQ(Partition(std::vector<int>{3, 1, 1}).render(), "(3,1,1)");
  EXPECT_EQ(Partition(std::vector<int>{}).render(), "()");
}

TEST(PartitionTest, ConjugationIsAnInvolution) {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.conjugate().size(), n);
      // lambda'_j counts the columns of length >= j
      for (int j = 1; j <= p.length() + 1; ++j) {
        int count = 0;
        for (int c : p.columns()) count += c >= j;
        EXPECT_EQ(p.lambda_prime(j), count);
      }
    }
  }
}

TEST(PartitionTest, CountsMatchBruteForce) {
  const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(enumerate_plane_fixed_points(1, n).size(), counts[static_cast<std::size_t>(n)]);
    std::set<std::vector<int>> listed;
    for (const auto& p : partitions_of(n)) listed.insert(p.columns());
    EXPECT_EQ(listed, brute_partitions(n, n));
  }
}

TEST(TupleTest, PlaneFixedPoints) {
  const auto r1 = enumerate_plane_fixed_points(1, 2);
  ASSERT_EQ(r1.size(), 2u);
  EXPECT_EQ(r1[0].render(), "((2))");
  EXPECT_EQ(r1[1].render(), "((1,1))");

  const auto r2 = enumerate_plane_fixed_points(2, 1);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_EQ(r2[0].render(), "((1),())");
  EXPECT_EQ(r2[1].render(), "((),(1))");

  // Pairs of partitions with total size n, counted independently.
  for (int n = 0; n <= 6; ++n) {
    std::size_t pairs = 0;
    for (int m = 0; m <= n; ++m) pairs += brute_partitions(m, m).size() * brute_partitions(n - m, n - m).size();
    const auto listed = enumerate_plane_fixed_points(2, n);
    EXPECT_EQ(listed.size(), pairs);
    std::set<std::string> unique;
    for (const auto& y : listed) unique.insert(y.render());
    EXPECT_EQ(unique.size(), listed.size());
  }
  EXPECT_EQ(enumerate_plane_fixed_points(2, 2).size(), 5u);
  // Deterministic order.
  EXPECT_EQ(enumerate_plane_fixed_points(3, 3), enumerate_plane_fixed_points(3, 3));
}

TEST(CorootTest, PairingExamples) {
  const auto p = coroot_pairings(CorootVector({1, -1}));
  EXPECT_EQ(p.k_dot_a, (std::vector<Rational>{1, -1}));
  EXPECT_EQ(p.k_dot_k, 2);
  EXPECT_EQ(p.k_dot_rho, 1);

  const auto z = coroot_pairings(CorootVector::zero(3));
  EXPECT_EQ(z.k_dot_k, 0);
  EXPECT_EQ(z.k_dot_rho, 0);

  const auto q = coroot_pairings(CorootVector({1, 0, -1}));
  const auto qc = coroot_pairings_cartan(CorootVector({1, 0, -1}));
  EXPECT_EQ(q.k_dot_k, 2);
  EXPECT_EQ(q.k_dot_rho, 2);
  EXPECT_EQ(qc.k_dot_k, 2);
  EXPECT_EQ(qc.k_dot_rho, 2);
}

// Root sums, Cartan-matrix form and the plain sums for sum k = 0 agree.
TEST(CorootTest, PairingFormulasAgree) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(gen() % 5);
    std::vector<int> k(static_cast<std::size_t>(r), 0);
    int total = 0;
    for (int i = 0; i + 1 < r; ++i) {
      k[static_cast<std::size_t>(i)] = static_cast<int>(gen() % 7) - 3;
      total += k[static_cast<std::size_t>(i)];
    }
    k[static_cast<std::size_t>(r - 1)] = -total;
    const CorootVector kv(k);
    const auto a = coroot_pairings(kv);
    const auto b = coroot_pairings_cartan(kv);
    Rational plain_kk = 0, plain_rho = 0;
    for (int x : k) plain_kk += x * x;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) plain_rho += ratio(k[static_cast<std::size_t>(i)] - k[static_cast<std::size_t>(j)], 2);
    }
    EXPECT_EQ(a.k_dot_k, plain_kk);
    EXPECT_EQ(b.k_dot_k, plain_kk);
    EXPECT_EQ(a.k_dot_rho, plain_rho);
    EXPECT_EQ(b.k_dot_rho, plain_rho);
    for (int i = 0; i < r; ++i) {
      EXPECT_EQ(a.k_dot_a[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]);
      // The Cartan form is defined up to a multiple of sum a_alpha.
      EXPECT_EQ(b.k_dot_a[static_cast<std::size_t>(i)] - b.k_dot_a[0], a.k_dot_a[static_cast<std::size_t>(i)] - a.k_dot_a[0]);
    }
    // Sum over positive roots of <k, alpha>^2 is r (k, k).
    long roots = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        const long d = kv.root_pairing(i + 1, j + 1);
        roots += d * d;
      }
    }
    EXPECT_EQ(Rational(roots), r * plain_kk);
  }
}

TEST(BlowupPointsTest, Examples) {
  const auto r1 = enumerate_blowup_fixed_points(1, 0, Rational(1));
  ASSERT_EQ(r1.size(), 3u);
  std::set<std::string> r1_names;
  for (const auto& fp : r1) r1_names.insert(fp.render());
  EXPECT_EQ(r1_names, (std::set<std::string>{"[(0),(()),(())]", "[(0),((1)),(())]", "[(0),(()),((1))]"}));

  const auto r2 = enumerate_blowup_fixed_points(2, 0, Rational(1));
  std::set<std::string> names;
  for (const auto& fp : r2) names.insert(fp.render());
  EXPECT_TRUE(names.count("[(1,-1),((),()),((),())]"));
  EXPECT_TRUE(names.count("[(-1,1),((),()),((),())]"));
  EXPECT_TRUE(names.count("[(0,0),((1),()),((),())]"));
  EXPECT_EQ(r2.size(), 1u + 2u + 4u);

  const auto half = enumerate_blowup_fixed_points(2, 0, Rational(1, 2));
  ASSERT_EQ(half.size(), 1u);
  EXPECT_EQ(half[0].render(), "[(0,0),((),()),((),())]");
  EXPECT_THROW(enumerate_blowup_fixed_points(2, 2, Rational(1)), UsageError);
}

// Every emitted point satisfies the grading condition, and the list is
// complete for small bounds.
TEST(BlowupPointsTest, GradingCondition) {
  for (int r = 1; r <= 3; ++r) {
    for (int k = 0; k < r; ++k) {
      const Rational bound = Rational(2) + grading_offset(r, k);
      const auto points = enumerate_blowup_fixed_points(r, k, bound);
      for (const auto& fp : points) {
        int sum = 0;
        for (int x : fp.coroot.entries()) sum += x;
        EXPECT_EQ(sum, k);
        Rational pair_sum = 0;
        for (int a = 1; a <= r; ++a) {
          for (int b = a + 1; b <= r; ++b) {
            const int d = fp.coroot[a] - fp.coroot[b];
            pair_sum += d * d;
          }
        }
        const Rational n = Rational(fp.tuple1.size() + fp.tuple2.size()) + pair_sum / (2 * r);
        EXPECT_EQ(fp.instanton_number(), n);
        EXPECT_LE(n, bound);
        // n minus the minimal grading of the class is an integer
        const Rational shifted = n - grading_offset(r, k);
        EXPECT_EQ(shifted.get_den(), 1);
      }
      EXPECT_EQ(points, enumerate_blowup_fixed_points(r, k, bound));
    }
  }
}
