#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "nekrasov/algebra/linear_form.hpp"
#include "nekrasov/algebra/monomial.hpp"
#include "nekrasov/algebra/rational.hpp"

namespace nek {

// Sparse multivariate polynomial over Integer or Rational. Terms are kept in
// strictly decreasing lexicographic order with no zero coefficients.
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVariables) throw UsageError("too many variables");
  }

  static Polynomial constant(std::size_t nvars, const C& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace_back(Monomial{0}, c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t var, unsigned exp = 1) {
    if (var >= nvars) throw UsageError("variable index out of range");
    Polynomial p(nvars);
    p.terms_.emplace_back(monomial::unit(var, exp), C(1));
    return p;
  }
  static Polynomial from(const LinearForm& form) {
    Polynomial p(form.nvars());
    for (std::size_t i = 0; i < form.nvars(); ++i) {
      if (form.coeff(i) != 0) p.terms_.emplace_back(monomial::unit(i), C(static_cast<long>(form.coeff(i))));
    }
    return p;
  }
  // Only valid for C = Rational or an integral AffineForm.
  static Polynomial from(const AffineForm& form) {
    Polynomial p(form.nvars());
    for (std::size_t i = 0; i < form.nvars(); ++i) {
      if (form.coeffs[i] != 0) p.terms_.emplace_back(monomial::unit(i), coerce(form.coeffs[i]));
    }
    if (form.constant != 0) p.terms_.emplace_back(Monomial{0}, coerce(form.constant));
    return p;
  }
  // Builds from unsorted terms, combining duplicates.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) p.terms_.back().second += t.second;
      else p.terms_.push_back(std::move(t));
    }
    p.drop_zeros();
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  C constant_term() const {
    if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
    return C(0);
  }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, monomial::degree(t.first));
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, monomial::exponent(t.first, var));
    return d;
  }
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  friend bool operator==(const Polynomial& x, const Polynomial& y) {
    return x.nvars_ == y.nvars_ && x.terms_ == y.terms_;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y) { return combine(x, y, false); }
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y) { return combine(x, y, true); }
  Polynomial& operator+=(const Polynomial& y) { return *this = combine(*this, y, false); }
  Polynomial& operator-=(const Polynomial& y) { return *this = combine(*this, y, true); }

  Polynomial& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
  }
  friend Polynomial operator*(Polynomial x, const C& s) { return x *= s; }
  friend Polynomial operator*(const C& s, Polynomial x) { return x *= s; }

  friend Polynomial operator*(const Polynomial& x, const Polynomial& y) { return multiply(x, y); }
  Polynomial& operator*=(const Polynomial& y) { return *this = multiply(*this, y); }

  // Multiplication by a monomial is an order-preserving shift.
  Polynomial shifted(Monomial m) const {
    Polynomial out = *this;
    if (m == 0) return out;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (monomial::exponent(m, v) + degree_in(v) > 255) throw DomainError("exponent overflow");
    }
    for (auto& t : out.terms_) t.first += m;
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(nvars_, C(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw UsageError("evaluation point arity mismatch");
    std::array<std::vector<Rational>, kMaxVariables> powers;
    for (std::size_t v = 0; v < nvars_; ++v) {
      const unsigned d = degree_in(v);
      powers[v].resize(d + 1);
      powers[v][0] = 1;
      for (unsigned e = 1; e <= d; ++e) powers[v][e] = powers[v][e - 1] * point[v];
    }
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
      Rational term = to_rational(c);
      for (std::size_t v = 0; v < nvars_; ++v) {
        const unsigned e = monomial::exponent(m, v);
        if (e) term *= powers[v][e];
      }
      sum += term;
    }
    return sum;
  }

  // Value modulo the prime 2^61 - 1 at a point given by residues.
  std::uint64_t evaluate_mod(const std::array<std::uint64_t, kMaxVariables>& point) const;

  Polynomial derivative(std::size_t var) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      const unsigned e = monomial::exponent(m, var);
      if (e == 0) continue;
      out.terms_.emplace_back(m - monomial::unit(var), c * C(static_cast<long>(e)));
    }
    // Lowering one exponent keeps the relative order of the surviving terms.
    return out;
  }

  // Composition with an affine change of variables.
  Polynomial substitute(const AffineMap& map) const;

  std::string render(const VariableSpace& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      C mag = negative ? C(-c) : c;
      if (negative) out += '-';
      else if (!out.empty()) out += '+';
      std::string mono;
      for (std::size_t v = 0; v < nvars_; ++v) {
        const unsigned e = monomial::exponent(m, v);
        if (e == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += vars.name(v);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

  // Internal access used by the algorithms below.
  std::vector<Term>& mutable_terms() noexcept { return terms_; }
  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 0; }),
                 terms_.end());
  }

 private:
  static C coerce(const Rational& r) {
    if constexpr (std::is_same_v<C, Rational>) {
      return r;
    } else {
      if (r.get_den() != 1) throw DomainError("non-integral coefficient in integer polynomial");
      return r.get_num();
    }
  }

  static void check_arity(const Polynomial& x, const Polynomial& y) {
    if (x.nvars_ != y.nvars_) throw UsageError("polynomial arity mismatch");
  }

  static Polynomial combine(const Polynomial& x, const Polynomial& y, bool subtract) {
    check_arity(x, y);
    Polynomial out(x.nvars_);
    out.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto i = x.terms_.begin();
    auto j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != x.terms_.end() && i->first > j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == x.terms_.end() || j->first > i->first) {
        out.terms_.emplace_back(j->first, subtract ? C(-j->second) : j->second);
        ++j;
      } else {
        C c = subtract ? C(i->second - j->second) : C(i->second + j->second);
        if (c != 0) out.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  static Polynomial multiply(const Polynomial& x, const Polynomial& y) {
    check_arity(x, y);
    Polynomial out(x.nvars_);
    if (x.is_zero() || y.is_zero()) return out;
    for (std::size_t v = 0; v < x.nvars_; ++v) {
      if (x.degree_in(v) + y.degree_in(v) > 255) throw DomainError("exponent overflow in product");
    }
    const Polynomial& small = x.size() <= y.size() ? x : y;
    const Polynomial& big = x.size() <= y.size() ? y : x;
    if (small.size() == 1) {
      out = big.shifted(small.terms_[0].first);
      out *= small.terms_[0].second;
      return out;
    }
    // k-way merge of the rows small[i] * big, each already sorted.
    using Entry = std::pair<Monomial, std::size_t>;
    std::priority_queue<Entry> heap;
    std::vector<std::size_t> cursor(small.size(), 0);
    for (std::size_t i = 0; i < small.size(); ++i) heap.emplace(small.terms_[i].first + big.terms_[0].first, i);
    out.terms_.reserve(big.size() * 2);
    while (!heap.empty()) {
      auto [m, i] = heap.top();
      heap.pop();
      const C& a = small.terms_[i].second;
      const C& b = big.terms_[cursor[i]].second;
      if (!out.terms_.empty() && out.terms_.back().first == m) {
        add_product(out.terms_.back().second, a, b);
      } else {
        out.terms_.emplace_back(m, C(a * b));
      }
      if (++cursor[i] < big.size()) heap.emplace(small.terms_[i].first + big.terms_[cursor[i]].first, i);
    }
    out.drop_zeros();
    return out;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s >= kPrime) s -= kPrime;
  return s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inverse(std::uint64_t a) { return pow(a, kPrime - 2); }
inline std::uint64_t from_signed(std::int64_t x) {
  if (x >= 0) return static_cast<std::uint64_t>(x) % kPrime;
  return kPrime - (static_cast<std::uint64_t>(-x) % kPrime);
}
inline std::uint64_t reduce(const Integer& x) {
  const std::uint64_t r = mpz_fdiv_ui(x.get_mpz_t(), kPrime);
  return r;
}
inline std::uint64_t reduce(const Rational& x) {
  return mul(reduce(Integer(x.get_num())), inverse(reduce(Integer(x.get_den()))));
}

}  // namespace modp

template <class C>
std::uint64_t Polynomial<C>::evaluate_mod(const std::array<std::uint64_t, kMaxVariables>& point) const {
  std::array<std::vector<std::uint64_t>, kMaxVariables> powers;
  for (std::size_t v = 0; v < nvars_; ++v) {
    const unsigned d = degree_in(v);
    powers[v].resize(d + 1);
    powers[v][0] = 1;
    for (unsigned e = 1; e <= d; ++e) powers[v][e] = modp::mul(powers[v][e - 1], point[v]);
  }
  std::uint64_t sum = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t term = modp::reduce(c);
    for (std::size_t v = 0; v < nvars_; ++v) {
      const unsigned e = monomial::exponent(m, v);
      if (e) term = modp::mul(term, powers[v][e]);
    }
    sum = modp::add(sum, term);
  }
  return sum;
}

namespace detail {

// Horner evaluation of terms[begin, end) (which agree on all variables
// before `level`) under `images`, treating variables >= level.
template <class C>
Polynomial<C> substitute_range(const std::vector<typename Polynomial<C>::Term>& terms, std::size_t begin,
                               std::size_t end, std::size_t level, std::size_t nvars,
                               const std::vector<Polynomial<C>>& images, const std::vector<bool>& identity) {
  if (level == nvars) {
    // All exponents consumed; exactly one term remains.
    return Polynomial<C>::constant(nvars, terms[begin].second);
  }
  Polynomial<C> acc(nvars);
  std::size_t i = begin;
  if (identity[level]) {
    while (i < end) {
      const unsigned e = monomial::exponent(terms[i].first, level);
      std::size_t j = i;
      while (j < end && monomial::exponent(terms[j].first, level) == e) ++j;
      Polynomial<C> inner = substitute_range<C>(terms, i, j, level + 1, nvars, images, identity);
      acc += inner.shifted(monomial::unit(level, e));
      i = j;
    }
    return acc;
  }
  unsigned previous = 0;
  bool first = true;
  while (i < end) {
    const unsigned e = monomial::exponent(terms[i].first, level);
    std::size_t j = i;
    while (j < end && monomial::exponent(terms[j].first, level) == e) ++j;
    Polynomial<C> inner = substitute_range<C>(terms, i, j, level + 1, nvars, images, identity);
    if (first) {
      acc = std::move(inner);
      first = false;
    } else {
      for (unsigned g = e; g < previous; ++g) acc *= images[level];
      acc += inner;
    }
    previous = e;
    i = j;
  }
  for (unsigned g = 0; g < previous; ++g) acc *= images[level];
  return acc;
}

}  // namespace detail

template <class C>
Polynomial<C> Polynomial<C>::substitute(const AffineMap& map) const {
  if (map.nvars() != nvars_) throw UsageError("substitution arity mismatch");
  if (terms_.empty()) return *this;
  std::vector<Polynomial<C>> images;
  std::vector<bool> identity(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    images.push_back(Polynomial<C>::from(map.image(v)));
    identity[v] = map.is_identity(v);
  }
  return detail::substitute_range<C>(terms_, 0, terms_.size(), 0, nvars_, images, identity);
}

// p * form, as a merge of shifted copies of p (one per variable in the form).
template <class C>
Polynomial<C> multiply_linear(const Polynomial<C>& p, const LinearForm& form) {
  if (form.nvars() != p.nvars()) throw UsageError("form arity mismatch");
  Polynomial<C> out(p.nvars());
  for (std::size_t v = 0; v < form.nvars(); ++v) {
    if (form.coeff(v) == 0) continue;
    Polynomial<C> part = p.shifted(monomial::unit(v));
    if (form.coeff(v) != 1) part *= C(static_cast<long>(form.coeff(v)));
    out = out.is_zero() ? std::move(part) : out + part;
  }
  return out;
}

// p / q when q divides p in Z[x], by long division on leading terms.
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.nvars() != q.nvars()) throw UsageError("division arity mismatch");
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  const std::size_t nvars = p.nvars();
  const auto& [lead_m, lead_c] = q.terms().front();
  IntPolynomial rest = p;
  std::vector<IntPolynomial::Term> quotient;
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.terms().front();
    for (std::size_t v = 0; v < nvars; ++v) {
      if (monomial::exponent(m, v) < monomial::exponent(lead_m, v)) return std::nullopt;
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    const Monomial qm = m - lead_m;
    Integer qc = c / lead_c;
    IntPolynomial step = q.shifted(qm);
    step *= qc;
    rest -= step;
    quotient.emplace_back(qm, std::move(qc));
  }
  IntPolynomial out(nvars);
  out.mutable_terms() = std::move(quotient);
  return out;
}

// Content-free integer polynomial with positive leading coefficient, and the
// rational factor divided out: p == factor * primitive.
inline std::pair<Rational, IntPolynomial> primitive_part(const RatPolynomial& p) {
  IntPolynomial out(p.nvars());
  if (p.is_zero()) return {Rational(0), out};
  Integer den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
  Integer g = 0;
  auto& terms = out.mutable_terms();
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    terms.emplace_back(m, std::move(v));
  }
  if (terms.front().second < 0) g = -g;
  for (auto& t : terms) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
  return {ratio(g, den), out};
}

inline std::pair<Rational, IntPolynomial> primitive_part(IntPolynomial p) {
  if (p.is_zero()) return {Rational(0), p};
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  if (p.leading().second < 0) g = -g;
  if (g != 1) {
    for (auto& t : p.mutable_terms()) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
  }
  return {Rational(g), std::move(p)};
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
  RatPolynomial out(p.nvars());
  auto& terms = out.mutable_terms();
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, Rational(c));
  return out;
}

// Exact quotient p / form when the form divides p, else nullopt. Synthetic
// division in the pivot variable; Gauss's lemma keeps the quotient integral.
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const LinearForm& form) {
  if (form.nvars() != p.nvars()) throw UsageError("division arity mismatch");
  const std::size_t nvars = p.nvars();
  if (p.is_zero()) return p;
  const std::size_t v = form.pivot();
  const Integer c = static_cast<long>(form.coeff(v));
  IntPolynomial rest(nvars);  // form - c * x_v
  for (std::size_t i = 0; i < nvars; ++i) {
    if (i != v && form.coeff(i) != 0) rest.mutable_terms().emplace_back(monomial::unit(i), Integer(static_cast<long>(form.coeff(i))));
  }
  const unsigned d = p.degree_in(v);
  if (d == 0) return std::nullopt;
  std::vector<IntPolynomial> slices(d + 1, IntPolynomial(nvars));
  for (const auto& [m, coeff] : p.terms()) {
    slices[monomial::exponent(m, v)].mutable_terms().emplace_back(monomial::without(m, v), coeff);
  }
  auto divide_by_c = [&](IntPolynomial& q) {
    if (c == 1) return true;
    for (auto& t : q.mutable_terms()) {
      if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t())) return false;
      mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    }
    return true;
  };
  std::vector<IntPolynomial> quotient(d, IntPolynomial(nvars));
  quotient[d - 1] = slices[d];
  if (!divide_by_c(quotient[d - 1])) return std::nullopt;
  for (unsigned e = d - 1; e >= 1; --e) {
    IntPolynomial t = slices[e] - rest * quotient[e];
    if (!divide_by_c(t)) return std::nullopt;
    quotient[e - 1] = std::move(t);
  }
  if (!(slices[0] - rest * quotient[0]).is_zero()) return std::nullopt;
  std::vector<IntPolynomial::Term> terms;
  for (unsigned e = 0; e < d; ++e) {
    for (auto& [m, coeff] : quotient[e].mutable_terms()) terms.emplace_back(m + monomial::unit(v, e), std::move(coeff));
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  IntPolynomial out(nvars);
  out.mutable_terms() = std::move(terms);
  return out;
}

// Random point (mod 2^61 - 1) on the hyperplane form == 0, derived from `salt`.
inline std::array<std::uint64_t, kMaxVariables> hyperplane_point(const LinearForm& form, std::uint64_t salt) {
  std::array<std::uint64_t, kMaxVariables> point{};
  std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ (salt * 0xbf58476d1ce4e5b9ULL);
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return (z ^ (z >> 31)) % modp::kPrime;
  };
  const std::size_t v = form.pivot();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < form.nvars(); ++i) {
    point[i] = next();
    if (i != v) acc = modp::add(acc, modp::mul(modp::from_signed(form.coeff(i)), point[i]));
  }
  // c * x_v + acc == 0
  point[v] = modp::mul(modp::sub(0, acc), modp::inverse(modp::from_signed(form.coeff(v))));
  return point;
}

// True when the form provably does not divide p (nonzero on its hyperplane).
inline bool certainly_not_divisible(const IntPolynomial& p, const LinearForm& form) {
  return p.evaluate_mod(hyperplane_point(form, 1)) != 0;
}

}  // namespace nek
