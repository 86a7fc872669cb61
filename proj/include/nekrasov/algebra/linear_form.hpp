#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/algebra/rational.hpp"
#include "nekrasov/algebra/variables.hpp"

namespace nek {

// Homogeneous linear form with coprime integer coefficients whose first
// nonzero entry is positive. Anything else is written prefactor * form.
class LinearForm {
 public:
  using Coeffs = std::array<std::int64_t, kMaxVariables>;

  LinearForm() = default;

  // Normalizes `coeffs`; returns the scalar that was divided out.
  static std::pair<Rational, LinearForm> normalize(std::size_t nvars, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != nvars || nvars > kMaxVariables) throw UsageError("linear form arity mismatch");
    Integer den_lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints(nvars);
    Integer g = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      ints[i] = coeffs[i].get_num() * (den_lcm / coeffs[i].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) throw DomainError("linear form is identically zero");
    std::size_t lead = 0;
    while (ints[lead] == 0) ++lead;
    if (ints[lead] < 0) g = -g;
    LinearForm form;
    form.nvars_ = static_cast<std::uint8_t>(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      Integer q = ints[i] / g;
      if (!q.fits_slong_p()) throw DomainError("linear form coefficient overflow");
      form.coeffs_[i] = q.get_si();
    }
    return {ratio(g, den_lcm), form};
  }

  static std::pair<Rational, LinearForm> normalize(std::size_t nvars, const std::vector<std::int64_t>& coeffs) {
    std::vector<Rational> rs(coeffs.begin(), coeffs.end());
    for (std::size_t i = 0; i < coeffs.size(); ++i) rs[i] = Rational(static_cast<long>(coeffs[i]));
    return normalize(nvars, rs);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  std::int64_t coeff(std::size_t i) const { return coeffs_.at(i); }
  const Coeffs& coeffs() const noexcept { return coeffs_; }

  bool depends_on(std::size_t var) const { return coeffs_.at(var) != 0; }

  // Pivot for division: a variable whose coefficient has minimal magnitude.
  std::size_t pivot() const {
    std::size_t best = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (coeffs_[i] == 0) continue;
      if (best == nvars_ || std::llabs(coeffs_[i]) < std::llabs(coeffs_[best])) best = i;
    }
    return best;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational s = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (coeffs_[i] != 0) s += Rational(static_cast<long>(coeffs_[i])) * point.at(i);
    }
    return s;
  }

  std::string render(const VariableSpace& vars) const {
    std::string out;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const std::int64_t c = coeffs_[i];
      if (c == 0) continue;
      if (c < 0) out += '-';
      else if (!out.empty()) out += '+';
      const std::int64_t mag = c < 0 ? -c : c;
      if (mag != 1) out += std::to_string(mag) + "*";
      out += vars.name(i);
    }
    return out;
  }

  friend bool operator==(const LinearForm& x, const LinearForm& y) {
    return x.nvars_ == y.nvars_ && x.coeffs_ == y.coeffs_;
  }
  friend auto operator<=>(const LinearForm& x, const LinearForm& y) {
    if (auto c = x.nvars_ <=> y.nvars_; c != 0) return c;
    return x.coeffs_ <=> y.coeffs_;
  }

 private:
  std::uint8_t nvars_ = 0;
  Coeffs coeffs_{};
};

// Linear expression with rational coefficients plus a constant; images of
// substitutions and restrictions of equivariant classes live here.
struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant = 0;

  AffineForm() = default;
  explicit AffineForm(std::size_t nvars) : coeffs(nvars, Rational(0)) {}

  static AffineForm variable(std::size_t nvars, std::size_t var) {
    AffineForm f(nvars);
    f.coeffs.at(var) = 1;
    return f;
  }
  static AffineForm from(const LinearForm& form) {
    AffineForm f(form.nvars());
    for (std::size_t i = 0; i < form.nvars(); ++i) f.coeffs[i] = Rational(static_cast<long>(form.coeff(i)));
    return f;
  }

  std::size_t nvars() const noexcept { return coeffs.size(); }

  bool is_constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
  }
  bool is_zero() const { return constant == 0 && is_constant(); }
  bool is_integral() const {
    return is_nek_integral(constant) &&
           std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return is_nek_integral(c); });
  }

  AffineForm& operator+=(const AffineForm& o) {
    if (o.nvars() != nvars()) throw UsageError("affine form arity mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    constant += o.constant;
    return *this;
  }
  AffineForm& operator-=(const AffineForm& o) {
    if (o.nvars() != nvars()) throw UsageError("affine form arity mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    constant -= o.constant;
    return *this;
  }
  AffineForm& operator*=(const Rational& s) {
    for (auto& c : coeffs) c *= s;
    constant *= s;
    return *this;
  }
  friend AffineForm operator+(AffineForm x, const AffineForm& y) { return x += y; }
  friend AffineForm operator-(AffineForm x, const AffineForm& y) { return x -= y; }
  friend AffineForm operator*(const Rational& s, AffineForm x) { return x *= s; }
  friend bool operator==(const AffineForm& x, const AffineForm& y) {
    return x.coeffs == y.coeffs && x.constant == y.constant;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational s = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) s += coeffs[i] * point.at(i);
    }
    return s;
  }

  std::string render(const VariableSpace& vars) const {
    std::string out;
    auto emit = [&](const Rational& c, const std::string& name) {
      if (c == 0) return;
      Rational mag = abs(c);
      if (c < 0) out += '-';
      else if (!out.empty()) out += '+';
      if (name.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += name;
      }
    };
    for (std::size_t i = 0; i < coeffs.size(); ++i) emit(coeffs[i], vars.name(i));
    emit(constant, "");
    return out.empty() ? "0" : out;
  }

 private:
  static bool is_nek_integral(const Rational& x) { return x.get_den() == 1; }
};

// Per-variable images; variables not mentioned map to themselves.
class AffineMap {
 public:
  explicit AffineMap(std::size_t nvars) {
    images_.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) images_.push_back(AffineForm::variable(nvars, i));
  }

  AffineMap& set(std::size_t var, AffineForm image) {
    if (image.nvars() != images_.size()) throw UsageError("substitution image arity mismatch");
    images_.at(var) = std::move(image);
    return *this;
  }

  std::size_t nvars() const noexcept { return images_.size(); }
  const AffineForm& image(std::size_t var) const { return images_.at(var); }

  bool is_identity(std::size_t var) const { return images_.at(var) == AffineForm::variable(images_.size(), var); }
  bool is_integral() const {
    return std::all_of(images_.begin(), images_.end(), [](const AffineForm& f) { return f.is_integral(); });
  }

  // Image of a linear form: the composition, as an affine expression.
  AffineForm apply(const LinearForm& form) const {
    AffineForm out(images_.size());
    for (std::size_t i = 0; i < form.nvars(); ++i) {
      if (form.coeff(i) == 0) continue;
      AffineForm term = images_[i];
      term *= Rational(static_cast<long>(form.coeff(i)));
      out += term;
    }
    return out;
  }

 private:
  std::vector<AffineForm> images_;
};

}  // namespace nek
