#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "nekrasov/algebra/rational.hpp"
#include "nekrasov/algebra/variables.hpp"

namespace nek {

// Integer vector (k_1, ..., k_r). Entries summing to zero form the coroot
// lattice Q; for first Chern class k the entries sum to k and pairings use
// the normalized vector l = k - (k/r)(1, ..., 1).
class CorootVector {
 public:
  CorootVector() = default;
  explicit CorootVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw UsageError("coroot vector needs r >= 1 entries");
  }
  static CorootVector zero(int r) { return CorootVector(std::vector<int>(static_cast<std::size_t>(r), 0)); }

  int rank() const noexcept { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  // alpha is 1-based.
  int operator[](int alpha) const { return entries_.at(static_cast<std::size_t>(alpha - 1)); }
  int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
  bool is_zero() const {
    for (int k : entries_) {
      if (k) return false;
    }
    return true;
  }

  CorootVector operator-() const {
    std::vector<int> out = entries_;
    for (int& k : out) k = -k;
    return CorootVector(out);
  }

  // l_alpha = k_alpha - total/r.
  std::vector<Rational> normalized() const {
    std::vector<Rational> out;
    const Rational shift = ratio(total(), rank());
    for (int k : entries_) out.push_back(Rational(k) - shift);
    return out;
  }

  // Coordinates against simple coroots: k^i = sum_{alpha <= i} l_alpha.
  std::vector<Rational> simple_coordinates() const {
    std::vector<Rational> l = normalized();
    std::vector<Rational> out;
    Rational acc = 0;
    for (int i = 0; i + 1 < rank(); ++i) {
      acc += l[static_cast<std::size_t>(i)];
      out.push_back(acc);
    }
    return out;
  }

  // <k, alpha> for the root e_alpha - e_beta.
  int root_pairing(int alpha, int beta) const { return (*this)[alpha] - (*this)[beta]; }

  std::string render() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(entries_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const CorootVector&, const CorootVector&) = default;
  friend auto operator<=>(const CorootVector& x, const CorootVector& y) { return x.entries_ <=> y.entries_; }

 private:
  std::vector<int> entries_;
};

struct CorootPairings {
  std::vector<Rational> k_dot_a;  // coefficients of (k, a) on a_1..a_r
  Rational k_dot_k;
  Rational k_dot_rho;
};

// Root-sum expressions: (1/2r) sum_{alpha,beta} (k_a - k_b)(a_a - a_b), etc.
inline CorootPairings coroot_pairings(const CorootVector& k) {
  const int r = k.rank();
  CorootPairings out{std::vector<Rational>(static_cast<std::size_t>(r), Rational(0)), 0, 0};
  for (int alpha = 1; alpha <= r; ++alpha) {
    for (int beta = 1; beta <= r; ++beta) {
      const int d = k[alpha] - k[beta];
      out.k_dot_a[static_cast<std::size_t>(alpha - 1)] += ratio(d, 2 * r);
      out.k_dot_a[static_cast<std::size_t>(beta - 1)] -= ratio(d, 2 * r);
      out.k_dot_k += ratio(d * d, 2 * r);
      if (alpha < beta) out.k_dot_rho += ratio(d, 2);
    }
  }
  return out;
}

// The same pairings through simple-coroot coordinates and the Cartan matrix
// of A_{r-1}: (k, a) = sum C_ij a^i k^j, (k, k) = sum C_ij k^i k^j,
// <k, rho> = sum_i k^i. Coordinates of a are a^i = sum_{alpha <= i} a_alpha.
inline CorootPairings coroot_pairings_cartan(const CorootVector& k) {
  const int r = k.rank();
  const std::vector<Rational> kc = k.simple_coordinates();
  auto cartan = [](int i, int j) { return i == j ? 2 : (i - j == 1 || j - i == 1) ? -1 : 0; };
  CorootPairings out{std::vector<Rational>(static_cast<std::size_t>(r), Rational(0)), 0, 0};
  for (int i = 0; i + 1 < r; ++i) {
    out.k_dot_rho += kc[static_cast<std::size_t>(i)];
    for (int j = 0; j + 1 < r; ++j) {
      const int c = cartan(i, j);
      if (c == 0) continue;
      out.k_dot_k += c * kc[static_cast<std::size_t>(i)] * kc[static_cast<std::size_t>(j)];
      // a^i contributes to a_alpha for alpha <= i.
      for (int alpha = 0; alpha <= i; ++alpha) {
        out.k_dot_a[static_cast<std::size_t>(alpha)] += c * kc[static_cast<std::size_t>(j)];
      }
    }
  }
  return out;
}

}  // namespace nek
