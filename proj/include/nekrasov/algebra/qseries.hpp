#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/algebra/factored_rational.hpp"

namespace nek {

// Truncated series sum_{n=0}^{order} c_n q^{n + offset}.
class QSeries {
 public:
  QSeries() = default;
  QSeries(std::size_t nvars, int order, Rational offset = 0) : nvars_(nvars), offset_(std::move(offset)) {
    if (order < 0) throw UsageError("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, FactoredRational::zero(nvars));
  }

  static QSeries constant(std::size_t nvars, int order, const FactoredRational& c) {
    QSeries s(nvars, order);
    s.coeffs_[0] = c;
    return s;
  }
  static QSeries one(std::size_t nvars, int order) { return constant(nvars, order, FactoredRational::one(nvars)); }

  std::size_t nvars() const noexcept { return nvars_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& offset() const noexcept { return offset_; }
  const std::vector<FactoredRational>& coefficients() const noexcept { return coeffs_; }

  const FactoredRational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  FactoredRational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FactoredRational& c) { return c.is_zero(); });
  }
  // Index of the first nonzero coefficient, or -1.
  int first_nonzero() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (!coeffs_[n].is_zero()) return static_cast<int>(n);
    }
    return -1;
  }

  QSeries truncated(int order) const {
    if (order > this->order()) throw UsageError("cannot extend a truncated series");
    QSeries out = *this;
    out.coeffs_.resize(static_cast<std::size_t>(order) + 1);
    return out;
  }

  friend bool operator==(const QSeries& x, const QSeries& y) {
    return x.nvars_ == y.nvars_ && x.offset_ == y.offset_ && x.coeffs_ == y.coeffs_;
  }

  QSeries operator-() const {
    QSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend QSeries operator+(const QSeries& x, const QSeries& y) { return combine(x, y, false); }
  friend QSeries operator-(const QSeries& x, const QSeries& y) { return combine(x, y, true); }
  QSeries& operator+=(const QSeries& y) { return *this = combine(*this, y, false); }
  QSeries& operator-=(const QSeries& y) { return *this = combine(*this, y, true); }

  friend QSeries operator*(const QSeries& x, const QSeries& y) {
    check_arity(x, y);
    const int order = std::min(x.order(), y.order());
    QSeries out(x.nvars_, order, x.offset_ + y.offset_);
    for (int n = 0; n <= order; ++n) {
      std::vector<FactoredRational> terms;
      for (int k = 0; k <= n; ++k) {
        if (x[k].is_zero() || y[n - k].is_zero()) continue;
        terms.push_back(x[k] * y[n - k]);
      }
      out[n] = sum(std::move(terms), x.nvars_);
    }
    return out;
  }
  QSeries& operator*=(const QSeries& y) { return *this = *this * y; }

  QSeries& operator*=(const FactoredRational& c) {
    for (auto& x : coeffs_) {
      if (!x.is_zero()) x *= c;
    }
    return *this;
  }
  QSeries& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  friend QSeries operator*(QSeries x, const FactoredRational& c) { return x *= c; }
  friend QSeries operator*(const FactoredRational& c, QSeries x) { return x *= c; }
  friend QSeries operator*(QSeries x, const Rational& c) { return x *= c; }
  friend QSeries operator*(const Rational& c, QSeries x) { return x *= c; }

  // q^shift * this, keeping coefficients up to `order`.
  QSeries shifted(int shift, int order) const {
    if (shift < 0) throw UsageError("negative series shift");
    if (order - shift > this->order()) throw UsageError("shift would expose untracked coefficients");
    QSeries out(nvars_, order, offset_);
    for (int n = 0; n + shift <= order; ++n) out[n + shift] = coeffs_[static_cast<std::size_t>(n)];
    return out;
  }

  // q d/dq: the coefficient of q^(n + offset) is scaled by n + offset.
  QSeries q_derivative() const {
    QSeries out = *this;
    for (int n = 0; n <= order(); ++n) out[n] *= Rational(n) + offset_;
    return out;
  }

  QSeries map(const std::function<FactoredRational(const FactoredRational&)>& f) const {
    QSeries out = *this;
    for (auto& c : out.coeffs_) c = f(c);
    if (!out.coeffs_.empty()) out.nvars_ = out.coeffs_.front().nvars();
    return out;
  }

  QSeries substitute(const AffineMap& map) const {
    return this->map([&](const FactoredRational& c) { return c.substitute(map); });
  }

  std::vector<Rational> evaluate(const std::vector<Rational>& point) const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.evaluate(point));
    return out;
  }

 private:
  static void check_arity(const QSeries& x, const QSeries& y) {
    if (x.nvars_ != y.nvars_) throw UsageError("series arity mismatch");
  }
  static QSeries combine(const QSeries& x, const QSeries& y, bool subtract) {
    check_arity(x, y);
    if (x.offset_ != y.offset_) throw UsageError("series offsets differ");
    const int order = std::min(x.order(), y.order());
    QSeries out(x.nvars_, order, x.offset_);
    for (int n = 0; n <= order; ++n) out[n] = subtract ? x[n] - y[n] : x[n] + y[n];
    return out;
  }

  std::size_t nvars_ = 0;
  std::vector<FactoredRational> coeffs_;
  Rational offset_ = 0;
};

inline QSeries exp(const QSeries& s) {
  if (s.offset() != 0) throw DomainError("exp of a series with fractional grading");
  if (!s[0].is_zero()) throw DomainError("exp requires a vanishing constant term");
  const std::size_t nvars = s.nvars();
  QSeries out = QSeries::one(nvars, s.order());
  for (int n = 1; n <= s.order(); ++n) {
    // n E_n = sum_k k s_k E_{n-k}
    std::vector<FactoredRational> terms;
    for (int k = 1; k <= n; ++k) {
      if (s[k].is_zero() || out[n - k].is_zero()) continue;
      terms.push_back(s[k] * out[n - k] * Rational(k));
    }
    out[n] = sum(std::move(terms), nvars) * ratio(1, n);
  }
  return out;
}

inline QSeries log(const QSeries& s) {
  if (s.offset() != 0) throw DomainError("log of a series with fractional grading");
  if (!(s[0] == FactoredRational::one(s.nvars()))) throw DomainError("log requires constant term 1");
  const std::size_t nvars = s.nvars();
  QSeries out(nvars, s.order());
  for (int n = 1; n <= s.order(); ++n) {
    // n L_n = n s_n - sum_{k<n} k L_k s_{n-k}
    std::vector<FactoredRational> terms;
    if (!s[n].is_zero()) terms.push_back(s[n] * Rational(n));
    for (int k = 1; k < n; ++k) {
      if (out[k].is_zero() || s[n - k].is_zero()) continue;
      terms.push_back(out[k] * s[n - k] * Rational(-k));
    }
    out[n] = sum(std::move(terms), nvars) * ratio(1, n);
  }
  return out;
}

}  // namespace nek

namespace nek {

// Drops numerator terms of degree > max_degree in `var`. Valid when no
// denominator factor involves `var` (the insertion variable t).
inline FactoredRational truncate_in(const FactoredRational& f, std::size_t var, unsigned max_degree) {
  if (f.is_zero()) return f;
  for (const auto& [form, mult] : f.denominator()) {
    if (form.depends_on(var)) throw DomainError("truncation variable appears in a denominator");
  }
  if (f.numerator().degree_in(var) <= max_degree) return f;
  IntPolynomial num(f.nvars());
  for (const auto& [m, c] : f.numerator().terms()) {
    if (monomial::exponent(m, var) <= max_degree) num.mutable_terms().emplace_back(m, c);
  }
  return FactoredRational::from_parts(f.scalar(), std::move(num), f.denominator());
}

inline QSeries truncate_in(const QSeries& s, std::size_t var, unsigned max_degree) {
  return s.map([&](const FactoredRational& c) { return truncate_in(c, var, max_degree); });
}

// Multiplicative inverse of a series with constant term 1.
inline QSeries inverse(const QSeries& s) {
  if (s.offset() != 0) throw DomainError("inverse of a series with fractional grading");
  if (!(s[0] == FactoredRational::one(s.nvars()))) throw DomainError("inverse requires constant term 1");
  QSeries out = QSeries::one(s.nvars(), s.order());
  for (int n = 1; n <= s.order(); ++n) {
    std::vector<FactoredRational> terms;
    for (int k = 1; k <= n; ++k) {
      if (s[k].is_zero() || out[n - k].is_zero()) continue;
      terms.push_back(-(s[k] * out[n - k]));
    }
    out[n] = sum(std::move(terms), s.nvars());
  }
  return out;
}

}  // namespace nek
