#pragma once

#include <string>
#include <vector>

#include "nekrasov/partitions/partition.hpp"

namespace nek {

// r-tuple of Young diagrams, the fixed points of M(r, n).
class PartitionTuple {
 public:
  PartitionTuple() = default;
  explicit PartitionTuple(std::vector<Partition> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw UsageError("a partition tuple needs r >= 1 entries");
  }
  static PartitionTuple empty(int r) { return PartitionTuple(std::vector<Partition>(static_cast<std::size_t>(r))); }

  int rank() const noexcept { return static_cast<int>(parts_.size()); }
  // alpha is 1-based.
  const Partition& operator[](int alpha) const { return parts_.at(static_cast<std::size_t>(alpha - 1)); }
  const std::vector<Partition>& parts() const noexcept { return parts_; }

  int size() const {
    int n = 0;
    for (const auto& p : parts_) n += p.size();
    return n;
  }

  PartitionTuple conjugate() const {
    std::vector<Partition> out;
    for (const auto& p : parts_) out.push_back(p.conjugate());
    return PartitionTuple(std::move(out));
  }

  std::string render() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += parts_[i].render();
    }
    return out + ")";
  }

  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
  friend auto operator<=>(const PartitionTuple& x, const PartitionTuple& y) { return x.parts_ <=> y.parts_; }

 private:
  std::vector<Partition> parts_;
};

// All r-tuples with total size n. The first entry carries the most boxes
// first; within a size split, diagrams follow partitions_of order.
inline std::vector<PartitionTuple> enumerate_plane_fixed_points(int r, int n) {
  if (r < 1) throw UsageError("rank must be at least 1");
  if (n < 0) throw UsageError("instanton number must be nonnegative");
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) by_size[static_cast<std::size_t>(m)] = partitions_of(m);
  std::vector<PartitionTuple> out;
  std::vector<Partition> current;
  auto rec = [&](auto& self, int alpha, int remaining) -> void {
    if (alpha == r) {
      if (remaining == 0) out.emplace_back(current);
      return;
    }
    const int lo = (alpha == r - 1) ? remaining : 0;
    for (int m = remaining; m >= lo; --m) {
      for (const auto& p : by_size[static_cast<std::size_t>(m)]) {
        current.push_back(p);
        self(self, alpha + 1, remaining - m);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace nek
