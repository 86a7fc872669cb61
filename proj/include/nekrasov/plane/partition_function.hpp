#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "nekrasov/algebra/qseries.hpp"
#include "nekrasov/plane/weights.hpp"
#include "nekrasov/util/parallel.hpp"

namespace nek {

namespace detail {

inline FactoredRational compute_z_coefficient(int r, int n) {
  const VariableSpace vars(r);
  const auto points = enumerate_plane_fixed_points(r, n);
  auto terms = parallel_map(points.size(), [&](std::size_t i) {
    return FactoredRational::from(euler_class(points[i]).inverse());
  });
  return sum(std::move(terms), vars.size());
}

// Coefficients are reused by every module, so they are computed once.
class ZCache {
 public:
  static ZCache& instance() {
    static ZCache cache;
    return cache;
  }
  FactoredRational get(int r, int n) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = values_.find({r, n});
      if (it != values_.end()) return it->second;
    }
    FactoredRational value = compute_z_coefficient(r, n);
    std::lock_guard<std::mutex> lock(mutex_);
    return values_.emplace(std::make_pair(r, n), std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, FactoredRational> values_;
};

}  // namespace detail

// Z_n = sum over fixed points of M(r, n) of 1 / e(T_Y).
inline FactoredRational z_coefficient(int r, int n) {
  if (n < 0) throw UsageError("instanton number must be nonnegative");
  (void)VariableSpace(r);
  return detail::ZCache::instance().get(r, n);
}

inline QSeries z_series(int r, int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  const VariableSpace vars(r);
  QSeries out(vars.size(), order);
  for (int n = 0; n <= order; ++n) out[n] = z_coefficient(r, n);
  return out;
}

// eps1 * eps2 as a rational function.
inline FactoredRational eps1_eps2(const VariableSpace& vars) {
  std::vector<Rational> e1(vars.size(), Rational(0)), e2(vars.size(), Rational(0));
  e1[vars.eps1()] = 1;
  e2[vars.eps2()] = 1;
  FormProduct eps(vars.size());
  eps.times(e1).times(e2);
  return FactoredRational::from(eps);
}

// F^inst = eps1 eps2 log Z.
inline QSeries f_inst_series(int r, int order) {
  const VariableSpace vars(r);
  return log(z_series(r, order)) * eps1_eps2(vars);
}

}  // namespace nek
