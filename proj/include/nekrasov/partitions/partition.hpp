#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/algebra/errors.hpp"

namespace nek {

// Young diagram stored by column lengths lambda_1 >= lambda_2 >= ... > 0.
// Cell (i, j) has 1 <= i <= length() and 1 <= j <= lambda(i).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> columns) : columns_(std::move(columns)) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] <= 0) throw UsageError("partition entries must be positive");
      if (i > 0 && columns_[i] > columns_[i - 1]) throw UsageError("partition entries must be weakly decreasing");
    }
  }

  const std::vector<int>& columns() const noexcept { return columns_; }
  int length() const noexcept { return static_cast<int>(columns_.size()); }
  int size() const noexcept { return std::accumulate(columns_.begin(), columns_.end(), 0); }
  bool empty() const noexcept { return columns_.empty(); }

  // lambda_i, read as 0 outside 1..length().
  int lambda(int i) const { return (i >= 1 && i <= length()) ? columns_[static_cast<std::size_t>(i - 1)] : 0; }
  // lambda'_j = #{i : lambda_i >= j}, read as 0 for j < 1.
  int lambda_prime(int j) const {
    if (j < 1) return 0;
    int count = 0;
    for (int c : columns_) {
      if (c < j) break;
      ++count;
    }
    return count;
  }

  Partition conjugate() const {
    std::vector<int> out;
    const int width = columns_.empty() ? 0 : columns_.front();
    for (int j = 1; j <= width; ++j) out.push_back(lambda_prime(j));
    return Partition(std::move(out));
  }

  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= length(); ++i) {
      for (int j = 1; j <= lambda(i); ++j) out.emplace_back(i, j);
    }
    return out;
  }

  std::string render() const {
    std::string out = "(";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(columns_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& x, const Partition& y) { return x.columns_ <=> y.columns_; }

 private:
  std::vector<int> columns_;
};

struct ArmLeg {
  int arm;       // a_Y(i,j) = lambda_i - j
  int leg;       // l_{Yother}(i,j) = lambda'_j - i, measured in the other diagram
  int coarm;     // a'(i,j) = j - 1
  int coleg;     // l'(i,j) = i - 1
  friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

// Statistics of the cell (i, j) with arm from `y` and leg from `other`.
// Cells outside either diagram are allowed; values may be negative.
inline ArmLeg arm_leg(const Partition& y, const Partition& other, int i, int j) {
  if (i < 1 || j < 1) throw UsageError("cell coordinates start at 1");
  return {y.lambda(i) - j, other.lambda_prime(j) - i, j - 1, i - 1};
}

inline int arm(const Partition& y, int i, int j) { return y.lambda(i) - j; }
inline int leg(const Partition& y, int i, int j) { return y.lambda_prime(j) - i; }

// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw UsageError("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace nek
