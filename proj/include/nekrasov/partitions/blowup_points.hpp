#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <vector>

#include "nekrasov/partitions/coroot.hpp"
#include "nekrasov/partitions/tuple.hpp"

namespace nek {

// Torus fixed point of the blowup moduli space.
struct BlowupFixedPoint {
  CorootVector coroot;
  PartitionTuple tuple1;
  PartitionTuple tuple2;

  int rank() const { return coroot.rank(); }

  // |Y1| + |Y2| + (l, l)/2 with l the normalized coroot vector.
  Rational instanton_number() const {
    return Rational(tuple1.size() + tuple2.size()) + coroot_pairings(coroot).k_dot_k / 2;
  }

  std::string render() const { return "[" + coroot.render() + "," + tuple1.render() + "," + tuple2.render() + "]"; }

  friend bool operator==(const BlowupFixedPoint&, const BlowupFixedPoint&) = default;
};

// Integer vectors with entries summing to k and (l, l)/2 <= n_max, in
// lexicographic order.
inline std::vector<CorootVector> enumerate_coroot_vectors(int r, int k, const Rational& n_max) {
  if (r < 1) throw UsageError("rank must be at least 1");
  if (k < 0 || k >= r) throw UsageError("first Chern class must satisfy 0 <= k < r");
  if (n_max < 0) throw UsageError("instanton bound must be nonnegative");
  // |l_alpha| <= sqrt(2 n_max) and k_alpha = l_alpha + k/r.
  const int bound = static_cast<int>(std::ceil(std::sqrt(2.0 * n_max.get_d()))) + 2;
  std::vector<CorootVector> out;
  std::vector<int> current;
  auto rec = [&](auto& self, int alpha, int partial) -> void {
    if (alpha == r - 1) {
      current.push_back(k - partial);
      CorootVector v(current);
      if (coroot_pairings(v).k_dot_k / 2 <= n_max) out.push_back(v);
      current.pop_back();
      return;
    }
    for (int x = -bound; x <= bound; ++x) {
      current.push_back(x);
      self(self, alpha + 1, partial + x);
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Fixed points of the blowup moduli spaces with instanton number <= n_max,
// sorted by (instanton number, coroot, tuple1, tuple2).
inline std::vector<BlowupFixedPoint> enumerate_blowup_fixed_points(int r, int k, const Rational& n_max) {
  std::vector<std::pair<Rational, BlowupFixedPoint>> keyed;
  for (const auto& kv : enumerate_coroot_vectors(r, k, n_max)) {
    const Rational base = coroot_pairings(kv).k_dot_k / 2;
    Rational room_q = n_max - base;
    const int room = static_cast<int>(mpz_class(room_q.get_num() / room_q.get_den()).get_si());
    for (int n1 = 0; n1 <= room; ++n1) {
      for (int n2 = 0; n1 + n2 <= room; ++n2) {
        for (const auto& y1 : enumerate_plane_fixed_points(r, n1)) {
          for (const auto& y2 : enumerate_plane_fixed_points(r, n2)) {
            keyed.emplace_back(base + n1 + n2, BlowupFixedPoint{kv, y1, y2});
          }
        }
      }
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second.coroot, x.second.tuple1, x.second.tuple2) <
           std::tie(y.first, y.second.coroot, y.second.tuple1, y.second.tuple2);
  });
  std::vector<BlowupFixedPoint> out;
  out.reserve(keyed.size());
  for (auto& entry : keyed) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace nek
