#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nekrasov/algebra/errors.hpp"

namespace nek {

// Packed exponent vectors hold at most this many variables.
inline constexpr std::size_t kMaxVariables = 8;

// Ordered variable names eps1, eps2, a1..ar, t. The rank is fixed for the
// lifetime of a computation; every polynomial carries only the arity.
class VariableSpace {
 public:
  explicit VariableSpace(int rank) : rank_(rank) {
    if (rank < 1 || static_cast<std::size_t>(rank) + 3 > kMaxVariables) {
      throw UsageError("rank must lie in [1, " + std::to_string(kMaxVariables - 3) + "]");
    }
    names_ = {"eps1", "eps2"};
    for (int alpha = 1; alpha <= rank; ++alpha) names_.push_back("a" + std::to_string(alpha));
    names_.push_back("t");
  }

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  static constexpr std::size_t eps1() noexcept { return 0; }
  static constexpr std::size_t eps2() noexcept { return 1; }
  // alpha is 1-based, as in a_1..a_r.
  std::size_t a(int alpha) const {
    if (alpha < 1 || alpha > rank_) throw UsageError("a-index out of range");
    return static_cast<std::size_t>(alpha) + 1;
  }
  std::size_t t() const noexcept { return static_cast<std::size_t>(rank_) + 2; }

  friend bool operator==(const VariableSpace& x, const VariableSpace& y) { return x.rank_ == y.rank_; }

 private:
  int rank_;
  std::vector<std::string> names_;
};

}  // namespace nek
