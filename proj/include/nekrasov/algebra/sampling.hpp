#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nekrasov/algebra/rational.hpp"

namespace nek {

// Deterministic source of random rational points. Uses the raw engine output
// (not std::uniform_*_distribution) so that a seed gives the same points with
// every standard library.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long numerator_bound = 1000, long denominator_bound = 997)
      : engine_(seed), num_bound_(numerator_bound), den_bound_(denominator_bound) {}

  Rational next() {
    const auto span = static_cast<std::uint64_t>(2 * num_bound_ + 1);
    const long num = static_cast<long>(engine_() % span) - num_bound_;
    const long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(den_bound_)) + 1;
    return ratio(num, den);
  }

  // Nonzero value, for scaling factors.
  Rational next_nonzero() {
    for (;;) {
      Rational r = next();
      if (r != 0) return r;
    }
  }

  std::vector<Rational> point(std::size_t n) {
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(next());
    return out;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  long num_bound_;
  long den_bound_;
};

}  // namespace nek
