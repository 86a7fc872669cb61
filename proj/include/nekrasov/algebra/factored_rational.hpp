#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/algebra/linear_form.hpp"
#include "nekrasov/algebra/polynomial.hpp"
#include "nekrasov/algebra/rational.hpp"

namespace nek {

// Multiset of linear forms with multiplicities, kept sorted and merged.
using FactorList = std::vector<std::pair<LinearForm, int>>;

namespace detail {

inline void merge_factor(FactorList& list, const LinearForm& form, int mult) {
  auto it = std::lower_bound(list.begin(), list.end(), form,
                             [](const auto& entry, const LinearForm& f) { return entry.first < f; });
  if (it != list.end() && it->first == form) {
    it->second += mult;
    if (it->second == 0) list.erase(it);
  } else if (mult != 0) {
    list.insert(it, {form, mult});
  }
}

// p * prod form^mult, one linear factor at a time.
inline IntPolynomial multiply_factors(IntPolynomial p, const FactorList& list) {
  for (const auto& [form, mult] : list) {
    for (int i = 0; i < mult; ++i) p = multiply_linear(p, form);
  }
  return p;
}

inline IntPolynomial expand_factors(std::size_t nvars, const FactorList& list) {
  return multiply_factors(IntPolynomial::constant(nvars, Integer(1)), list);
}

// Rendering for error messages; the arity determines the rank.
inline std::string describe(const LinearForm& form) {
  if (form.nvars() >= 4) return form.render(VariableSpace(static_cast<int>(form.nvars()) - 3));
  std::string out;
  for (std::size_t i = 0; i < form.nvars(); ++i) {
    if (form.coeff(i) != 0) out += (out.empty() ? "" : " ") + std::to_string(form.coeff(i)) + "*x" + std::to_string(i);
  }
  return out;
}

}  // namespace detail

// scalar * product of linear forms (multiplicities may be negative). The
// Euler classes and l-factors are of this shape and stay unexpanded.
class FormProduct {
 public:
  FormProduct() = default;
  explicit FormProduct(std::size_t nvars, Rational scalar = 1) : nvars_(nvars), scalar_(std::move(scalar)) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const Rational& scalar() const noexcept { return scalar_; }
  const FactorList& factors() const noexcept { return factors_; }
  bool is_zero() const { return scalar_ == 0; }

  // Multiplies by an arbitrary linear expression given by its coefficients.
  FormProduct& times(const std::vector<Rational>& coeffs, int mult = 1) {
    bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
    if (zero) {
      if (mult < 0) throw DomainError("inverse of a vanishing linear form");
      if (mult > 0) scalar_ = 0;
      return *this;
    }
    auto [pre, form] = LinearForm::normalize(nvars_, coeffs);
    return times(form, mult, pre);
  }
  FormProduct& times(const LinearForm& form, int mult = 1, const Rational& prefactor = 1) {
    if (form.nvars() != nvars_) throw UsageError("form product arity mismatch");
    scalar_ *= mult >= 0 ? pow(prefactor, static_cast<unsigned>(mult)) : 1 / pow(prefactor, static_cast<unsigned>(-mult));
    detail::merge_factor(factors_, form, mult);
    return *this;
  }
  FormProduct& operator*=(const FormProduct& o) {
    if (o.nvars_ != nvars_) throw UsageError("form product arity mismatch");
    scalar_ *= o.scalar_;
    for (const auto& [f, m] : o.factors_) detail::merge_factor(factors_, f, m);
    return *this;
  }
  FormProduct& operator*=(const Rational& s) {
    scalar_ *= s;
    return *this;
  }
  friend FormProduct operator*(FormProduct x, const FormProduct& y) { return x *= y; }

  FormProduct inverse() const {
    if (scalar_ == 0) throw DomainError("inverse of zero");
    FormProduct out(nvars_, 1 / scalar_);
    out.factors_ = factors_;
    for (auto& entry : out.factors_) entry.second = -entry.second;
    return out;
  }

  int degree() const {
    int d = 0;
    for (const auto& entry : factors_) d += entry.second;
    return d;
  }

  Rational evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const FormProduct& x, const FormProduct& y) {
    return x.nvars_ == y.nvars_ && x.scalar_ == y.scalar_ && (x.scalar_ == 0 || x.factors_ == y.factors_);
  }

 private:
  std::size_t nvars_ = 0;
  Rational scalar_ = 1;
  FactorList factors_;
};

// scalar * num / prod(den_i ^ m_i) with num a primitive integer polynomial
// whose leading coefficient is positive and which no den_i divides. This
// reduced form is unique, so equality is structural.
class FactoredRational {
 public:
  FactoredRational() = default;
  explicit FactoredRational(std::size_t nvars) : nvars_(nvars), num_(IntPolynomial::constant(nvars, Integer(1))), scalar_(0) {}

  static FactoredRational constant(std::size_t nvars, const Rational& c) {
    FactoredRational out(nvars);
    out.scalar_ = c;
    return out;
  }
  static FactoredRational zero(std::size_t nvars) { return FactoredRational(nvars); }
  static FactoredRational one(std::size_t nvars) { return constant(nvars, Rational(1)); }

  static FactoredRational from(const FormProduct& p) {
    FactoredRational out = constant(p.nvars(), p.scalar());
    if (p.is_zero()) return out;
    FactorList positive;
    for (const auto& [f, m] : p.factors()) {
      if (m > 0) positive.emplace_back(f, m);
      else out.den_.emplace_back(f, -m);
    }
    out.num_ = detail::expand_factors(p.nvars(), positive);
    out.normalize();
    return out;
  }
  static FactoredRational from(const RatPolynomial& p) {
    FactoredRational out(p.nvars());
    auto [content, prim] = primitive_part(p);
    if (content == 0) return out;
    out.scalar_ = content;
    out.num_ = std::move(prim);
    return out;
  }
  static FactoredRational from(const IntPolynomial& p) { return from_parts(Rational(1), p, {}); }
  static FactoredRational from(const AffineForm& f) {
    RatPolynomial p = RatPolynomial::from(f);
    return from(p);
  }

  // Assembles scalar * num / den and reduces.
  static FactoredRational from_parts(const Rational& scalar, IntPolynomial num, FactorList den) {
    FactoredRational out(num.nvars());
    if (scalar == 0 || num.is_zero()) return out;
    out.scalar_ = scalar;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    out.normalize();
    return out;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const Rational& scalar() const noexcept { return scalar_; }
  const IntPolynomial& numerator() const noexcept { return num_; }
  const FactorList& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return scalar_ == 0; }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  int denominator_degree() const {
    int d = 0;
    for (const auto& e : den_) d += e.second;
    return d;
  }

  friend bool operator==(const FactoredRational& x, const FactoredRational& y) {
    return x.nvars_ == y.nvars_ && x.scalar_ == y.scalar_ &&
           (x.scalar_ == 0 || (x.num_ == y.num_ && x.den_ == y.den_));
  }

  FactoredRational operator-() const {
    FactoredRational out = *this;
    out.scalar_ = -out.scalar_;
    return out;
  }

  friend FactoredRational operator+(const FactoredRational& x, const FactoredRational& y) { return add(x, y, false); }
  friend FactoredRational operator-(const FactoredRational& x, const FactoredRational& y) { return add(x, y, true); }
  FactoredRational& operator+=(const FactoredRational& y) { return *this = add(*this, y, false); }
  FactoredRational& operator-=(const FactoredRational& y) { return *this = add(*this, y, true); }

  friend FactoredRational operator*(const FactoredRational& x, const FactoredRational& y) {
    check_arity(x, y);
    if (x.is_zero() || y.is_zero()) return zero(x.nvars_);
    FactorList den = x.den_;
    for (const auto& [f, m] : y.den_) detail::merge_factor(den, f, m);
    FactoredRational out(x.nvars_);
    out.scalar_ = x.scalar_ * y.scalar_;
    out.num_ = x.num_ * y.num_;
    out.den_ = std::move(den);
    out.normalize();
    return out;
  }
  FactoredRational& operator*=(const FactoredRational& y) { return *this = *this * y; }

  FactoredRational& operator*=(const Rational& s) {
    if (s == 0) return *this = zero(nvars_);
    scalar_ *= s;
    return *this;
  }
  friend FactoredRational operator*(FactoredRational x, const Rational& s) { return x *= s; }
  friend FactoredRational operator*(const Rational& s, FactoredRational x) { return x *= s; }

  FactoredRational& operator*=(const FormProduct& p) {
    if (p.nvars() != nvars_) throw UsageError("arity mismatch");
    if (is_zero()) return *this;
    if (p.is_zero()) return *this = zero(nvars_);
    scalar_ *= p.scalar();
    FactorList positive;
    for (const auto& [f, m] : p.factors()) {
      // Positive multiplicities first cancel against the denominator.
      int remaining = m;
      if (m > 0) {
        auto it = std::find_if(den_.begin(), den_.end(), [&](const auto& e) { return e.first == f; });
        if (it != den_.end()) {
          const int used = std::min(it->second, m);
          remaining -= used;
          detail::merge_factor(den_, f, -used);
        }
        if (remaining > 0) positive.emplace_back(f, remaining);
      } else {
        detail::merge_factor(den_, f, -m);
      }
    }
    if (!positive.empty()) num_ = detail::multiply_factors(std::move(num_), positive);
    normalize();
    return *this;
  }

  // Division by a value whose numerator is constant or a single linear form,
  // or whose numerator divides ours exactly.
  friend FactoredRational operator/(const FactoredRational& x, const FactoredRational& y) {
    check_arity(x, y);
    if (y.is_zero()) throw DomainError("division by the zero function");
    FormProduct inv(x.nvars_, 1 / y.scalar_);
    for (const auto& [f, m] : y.den_) inv.times(f, m);
    FactoredRational out = x;
    if (!y.num_.is_constant()) {
      if (auto form = as_linear_form(y.num_)) {
        inv.times(*form, -1);
      } else if (auto q = divide_exact(x.num_, y.num_)) {
        out = from_parts(x.scalar_, std::move(*q), x.den_);
      } else {
        throw DomainError("quotient has a denominator that is not a product of linear forms");
      }
    }
    out *= inv;
    return out;
  }

  // Composition with an affine change of variables.
  FactoredRational substitute(const AffineMap& map) const {
    if (map.nvars() != nvars_) throw UsageError("substitution arity mismatch");
    if (is_zero()) return *this;
    Rational scalar = scalar_;
    FactorList den;
    for (const auto& [form, mult] : den_) {
      AffineForm image = map.apply(form);
      if (image.is_zero()) throw PoleError("substitution makes a denominator factor vanish", detail::describe(form));
      if (image.is_constant()) {
        scalar /= pow(image.constant, static_cast<unsigned>(mult));
        continue;
      }
      if (image.constant != 0) throw DomainError("non-homogeneous image of a denominator factor");
      auto [pre, f] = LinearForm::normalize(nvars_, image.coeffs);
      scalar /= pow(pre, static_cast<unsigned>(mult));
      detail::merge_factor(den, f, mult);
    }
    IntPolynomial num(nvars_);
    if (map.is_integral()) {
      num = num_.substitute(map);
    } else {
      auto [content, prim] = primitive_part(to_rational(num_).substitute(map));
      scalar *= content;
      num = std::move(prim);
    }
    return from_parts(scalar, std::move(num), std::move(den));
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw UsageError("evaluation point arity mismatch");
    if (is_zero()) return 0;
    Rational value = scalar_ * num_.evaluate(point);
    for (const auto& [form, mult] : den_) {
      Rational v = form.evaluate(point);
      if (v == 0) throw PoleError("denominator vanishes at evaluation point", detail::describe(form));
      value /= pow(v, static_cast<unsigned>(mult));
    }
    return value;
  }

  // Directional derivative sum_v direction[v] * d/dx_v.
  FactoredRational derivative(const std::vector<Rational>& direction) const {
    if (direction.size() != nvars_) throw UsageError("direction arity mismatch");
    if (is_zero()) return *this;
    RatPolynomial num = to_rational(num_);
    RatPolynomial dnum(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (direction[v] != 0) dnum += num.derivative(v) * direction[v];
    }
    // d(N / prod L^m) = (N' * P - N * sum m_i c_i P / L_i) / (prod L^m * P),
    // P the product of the factors the direction sees.
    FactorList touched;
    std::vector<Rational> slopes;
    for (const auto& [form, mult] : den_) {
      Rational c = 0;
      for (std::size_t v = 0; v < nvars_; ++v) c += direction[v] * static_cast<long>(form.coeff(v));
      if (c != 0) {
        touched.emplace_back(form, 1);
        slopes.push_back(c * mult);
      }
    }
    RatPolynomial result = dnum * to_rational(detail::expand_factors(nvars_, touched));
    for (std::size_t i = 0; i < touched.size(); ++i) {
      FactorList others;
      for (std::size_t j = 0; j < touched.size(); ++j) {
        if (j != i) others.push_back(touched[j]);
      }
      result -= num * to_rational(detail::expand_factors(nvars_, others)) * slopes[i];
    }
    FactorList den = den_;
    for (const auto& entry : touched) detail::merge_factor(den, entry.first, 1);
    auto [content, prim] = primitive_part(result);
    return from_parts(scalar_ * content, std::move(prim), std::move(den));
  }

  FactoredRational derivative(std::size_t var) const {
    std::vector<Rational> dir(nvars_, Rational(0));
    dir.at(var) = 1;
    return derivative(dir);
  }

  // True when some denominator factor vanishes identically under `map`.
  bool has_pole_under(const AffineMap& map) const {
    return std::any_of(den_.begin(), den_.end(), [&](const auto& e) { return map.apply(e.first).is_zero(); });
  }

  std::string render(const VariableSpace& vars) const {
    if (is_zero()) return "0";
    std::string out;
    if (num_.is_constant()) {
      out = scalar_.get_den() == 1 || den_.empty() ? scalar_.get_str() : "(" + scalar_.get_str() + ")";
    } else {
      if (scalar_ == -1) {
        out = "-";
      } else if (scalar_ != 1) {
        out = (scalar_.get_den() == 1 ? scalar_.get_str() : "(" + scalar_.get_str() + ")") + "*";
      }
      out += "(" + num_.render(vars) + ")";
    }
    if (!den_.empty()) {
      out += "/(";
      bool first = true;
      for (const auto& [form, mult] : den_) {
        if (!first) out += "*";
        first = false;
        out += "(" + form.render(vars) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
      }
      out += ")";
    }
    return out;
  }

  static std::optional<LinearForm> as_linear_form(const IntPolynomial& p) {
    if (p.is_zero() || p.total_degree() != 1) return std::nullopt;
    std::vector<Rational> coeffs(p.nvars(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
      if (m == 0) return std::nullopt;
      for (std::size_t v = 0; v < p.nvars(); ++v) {
        if (monomial::exponent(m, v)) coeffs[v] = Rational(c);
      }
    }
    auto [pre, form] = LinearForm::normalize(p.nvars(), coeffs);
    if (pre != 1) return std::nullopt;  // p is primitive with positive lead
    return form;
  }

 private:
  static void check_arity(const FactoredRational& x, const FactoredRational& y) {
    if (x.nvars_ != y.nvars_) throw UsageError("rational function arity mismatch");
  }

  // Restores the invariants: primitive numerator, then linear cancellation.
  void normalize() {
    if (scalar_ == 0 || num_.is_zero()) {
      *this = zero(nvars_);
      return;
    }
    auto [content, prim] = primitive_part(std::move(num_));
    scalar_ *= content;
    num_ = std::move(prim);
    cancel();
  }

  void cancel() {
    if (num_.is_constant()) return;
    for (auto& entry : den_) {
      while (entry.second > 0 && !num_.is_constant() && !certainly_not_divisible(num_, entry.first)) {
        auto q = divide_exact(num_, entry.first);
        if (!q) break;
        num_ = std::move(*q);
        --entry.second;
      }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const auto& e) { return e.second == 0; }), den_.end());
    if (num_.is_constant()) {
      scalar_ *= Rational(num_.constant_term());
      num_ = IntPolynomial::constant(nvars_, Integer(1));
    } else if (num_.leading().second < 0) {
      scalar_ = -scalar_;
      num_ = -num_;
    }
  }

  static FactoredRational add(const FactoredRational& x, const FactoredRational& y, bool subtract) {
    check_arity(x, y);
    if (y.is_zero()) return x;
    if (x.is_zero()) return subtract ? -y : y;
    // Common denominator: the factorwise maximum.
    FactorList den, extra_x, extra_y;
    auto i = x.den_.begin();
    auto j = y.den_.begin();
    while (i != x.den_.end() || j != y.den_.end()) {
      if (j == y.den_.end() || (i != x.den_.end() && i->first < j->first)) {
        den.push_back(*i);
        extra_y.push_back(*i);
        ++i;
      } else if (i == x.den_.end() || j->first < i->first) {
        den.push_back(*j);
        extra_x.push_back(*j);
        ++j;
      } else {
        den.emplace_back(i->first, std::max(i->second, j->second));
        if (i->second < j->second) extra_x.emplace_back(i->first, j->second - i->second);
        if (j->second < i->second) extra_y.emplace_back(i->first, i->second - j->second);
        ++i;
        ++j;
      }
    }
    // Factor out g = gcd(numerators)/lcm(denominators) of the two scalars.
    Integer gnum, gden;
    mpz_gcd(gnum.get_mpz_t(), x.scalar_.get_num_mpz_t(), y.scalar_.get_num_mpz_t());
    mpz_lcm(gden.get_mpz_t(), x.scalar_.get_den_mpz_t(), y.scalar_.get_den_mpz_t());
    const Rational g = ratio(gnum, gden);
    const Rational sx = x.scalar_ / g;
    Rational sy = y.scalar_ / g;
    if (subtract) sy = -sy;
    IntPolynomial nx = detail::multiply_factors(x.num_, extra_x);
    nx *= Integer(sx.get_num());
    IntPolynomial ny = detail::multiply_factors(y.num_, extra_y);
    ny *= Integer(sy.get_num());
    return from_parts(g, nx + ny, std::move(den));
  }

  std::size_t nvars_ = 0;
  IntPolynomial num_;
  FactorList den_;
  Rational scalar_ = 0;
};

inline Rational FormProduct::evaluate(const std::vector<Rational>& point) const {
  Rational value = scalar_;
  if (value == 0) return value;
  for (const auto& [form, mult] : factors_) {
    Rational v = form.evaluate(point);
    if (mult < 0) {
      if (v == 0) throw PoleError("form product has a pole at the evaluation point", detail::describe(form));
      value /= pow(v, static_cast<unsigned>(-mult));
    } else {
      value *= pow(v, static_cast<unsigned>(mult));
    }
  }
  return value;
}

namespace detail {

// Estimated work to bring x and y over their common denominator: numerator
// size times the number of linear factors each side is multiplied by.
inline std::size_t merge_cost(const FactoredRational& x, const FactoredRational& y) {
  int common = 0;
  auto i = x.denominator().begin();
  auto j = y.denominator().begin();
  while (i != x.denominator().end() && j != y.denominator().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      common += std::min(i->second, j->second);
      ++i;
      ++j;
    }
  }
  const auto extra_x = static_cast<std::size_t>(y.denominator_degree() - common);
  const auto extra_y = static_cast<std::size_t>(x.denominator_degree() - common);
  return x.numerator().size() * extra_x + y.numerator().size() * extra_y + 1;
}

}  // namespace detail

// Sum of many terms. Pairs are merged cheapest-first, which keeps common
// denominators (and numerators) small when terms share most factors.
inline FactoredRational sum(std::vector<FactoredRational> terms, std::size_t nvars) {
  terms.erase(std::remove_if(terms.begin(), terms.end(), [](const FactoredRational& t) { return t.is_zero(); }),
              terms.end());
  if (terms.empty()) return FactoredRational::zero(nvars);
  const std::size_t n = terms.size();
  std::vector<bool> alive(n, true);
  std::vector<std::vector<std::size_t>> cost(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cost[i][j] = detail::merge_cost(terms[i], terms[j]);
  }
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    std::size_t bi = 0, bj = 0, best = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        if (!found || cost[i][j] < best) {
          best = cost[i][j];
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    terms[bi] = terms[bi] + terms[bj];
    alive[bj] = false;
    terms[bj] = FactoredRational();
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k] || k == bi) continue;
      const std::size_t c = detail::merge_cost(terms[std::min(k, bi)], terms[std::max(k, bi)]);
      cost[std::min(k, bi)][std::max(k, bi)] = c;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) return std::move(terms[i]);
  }
  return FactoredRational::zero(nvars);
}

}  // namespace nek
