#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/algebra/rational.hpp"

namespace nek {

// Integer Laurent polynomial in a fixed number of variables; the K-theory
// side (t1, t2, e_1..e_r) lives here.
class LaurentPolynomial {
 public:
  using Exponent = std::vector<int>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPolynomial monomial(const Exponent& e, const Integer& c = 1) {
    LaurentPolynomial p(e.size());
    if (c != 0) p.terms_[e] = c;
    return p;
  }
  static LaurentPolynomial constant(std::size_t nvars, const Integer& c) { return monomial(Exponent(nvars, 0), c); }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& e, const Integer& c) {
    if (e.size() != nvars_) throw UsageError("Laurent exponent arity mismatch");
    Integer& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial x, const LaurentPolynomial& y) { return x += y; }
  friend LaurentPolynomial operator-(LaurentPolynomial x, const LaurentPolynomial& y) { return x -= y; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    if (x.nvars_ != y.nvars_) throw UsageError("Laurent arity mismatch");
    LaurentPolynomial out(x.nvars_);
    Exponent e(x.nvars_);
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
        out.add_term(e, cx * cy);
      }
    }
    return out;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& y) { return *this = *this * y; }

  // Substitution of every variable by its inverse.
  LaurentPolynomial dual() const {
    LaurentPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent d = e;
      for (int& x : d) x = -x;
      out.terms_[d] = c;
    }
    return out;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string render(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (c < 0) out += "-";
      else if (!out.empty()) out += "+";
      Integer mag = abs(c);
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names.at(i);
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) out += mag.get_str();
      else out += (mag != 1 ? mag.get_str() + "*" : std::string()) + mono;
    }
    return out;
  }

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Integer> terms_;
};

// A sum of terms num / prod (1 - m_j). Two such sums are compared by
// bringing both over the factorwise maximum of their denominators.
class LaurentFractionSum {
 public:
  using Exponent = LaurentPolynomial::Exponent;

  explicit LaurentFractionSum(std::size_t nvars) : nvars_(nvars) {}

  // Adds num / prod_j (1 - x^{factors[j]}).
  void add(LaurentPolynomial num, const std::vector<Exponent>& factors) {
    std::map<Exponent, int> den;
    for (Exponent m : factors) {
      if (m.size() != nvars_) throw UsageError("factor arity mismatch");
      // Keep the first nonzero exponent of each factor positive.
      std::size_t lead = 0;
      while (lead < m.size() && m[lead] == 0) ++lead;
      if (lead == m.size()) throw DomainError("factor 1 - 1 vanishes");
      if (m[lead] < 0) {
        // 1 / (1 - x^m) = -x^{-m} / (1 - x^{-m})
        for (int& x : m) x = -x;
        num *= LaurentPolynomial::monomial(m, -1);
      }
      ++den[m];
    }
    terms_.push_back({std::move(num), std::move(den)});
  }

  std::map<Exponent, int> denominator() const {
    std::map<Exponent, int> out;
    for (const auto& t : terms_) {
      for (const auto& [m, k] : t.den) out[m] = std::max(out[m], k);
    }
    return out;
  }

  // Numerator over the given common denominator.
  LaurentPolynomial numerator_over(const std::map<Exponent, int>& common) const {
    LaurentPolynomial total(nvars_);
    for (const auto& t : terms_) {
      LaurentPolynomial num = t.num;
      for (const auto& [m, k] : common) {
        auto it = t.den.find(m);
        const int have = it == t.den.end() ? 0 : it->second;
        if (have > k) throw UsageError("denominator is not a common multiple");
        const LaurentPolynomial factor = LaurentPolynomial::constant(nvars_, 1) - LaurentPolynomial::monomial(m);
        for (int i = have; i < k; ++i) num *= factor;
      }
      total += num;
    }
    return total;
  }

  static bool equal(const LaurentFractionSum& x, const LaurentFractionSum& y) {
    auto common = x.denominator();
    for (const auto& [m, k] : y.denominator()) common[m] = std::max(common[m], k);
    return x.numerator_over(common) == y.numerator_over(common);
  }

  std::size_t size() const noexcept { return terms_.size(); }

 private:
  struct Term {
    LaurentPolynomial num;
    std::map<Exponent, int> den;
  };
  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace nek
