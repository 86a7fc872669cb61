#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "nekrasov/algebra/variables.hpp"

namespace nek {

// Exponent vector packed one byte per variable, variable 0 in the most
// significant byte, so that integer comparison is lexicographic order.
using Monomial = std::uint64_t;

namespace monomial {

inline constexpr unsigned shift(std::size_t var) { return static_cast<unsigned>(8 * (kMaxVariables - 1 - var)); }

inline constexpr unsigned exponent(Monomial m, std::size_t var) { return static_cast<unsigned>((m >> shift(var)) & 0xffu); }

inline constexpr Monomial unit(std::size_t var, unsigned e = 1) { return static_cast<Monomial>(e) << shift(var); }

inline constexpr Monomial without(Monomial m, std::size_t var) { return m & ~(Monomial{0xff} << shift(var)); }

inline constexpr unsigned degree(Monomial m) {
  unsigned d = 0;
  for (std::size_t v = 0; v < kMaxVariables; ++v) d += exponent(m, v);
  return d;
}

inline std::array<unsigned, kMaxVariables> unpack(Monomial m) {
  std::array<unsigned, kMaxVariables> out{};
  for (std::size_t v = 0; v < kMaxVariables; ++v) out[v] = exponent(m, v);
  return out;
}

}  // namespace monomial
}  // namespace nek
