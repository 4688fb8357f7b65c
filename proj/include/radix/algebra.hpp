#pragma once

// Exact polynomial arithmetic over big integers or rationals, the binomial
// layer polynomial, the functional-identity checker, the degree inference and
// the linear-ansatz coefficient solver.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "radix/errors.hpp"
#include "radix/numeric.hpp"

namespace radix {

// Dense polynomial, coefficients indexed by power, trailing zeros trimmed.
// The zero polynomial has an empty coefficient vector; its degree() is -1
// as a sentinel for "minus infinity".
template <class Coeff>
class polynomial {
 public:
  polynomial() = default;

  polynomial(std::initializer_list<Coeff> coeffs)
      : c_(coeffs) {
    trim();
  }

  explicit polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static polynomial monomial(const Coeff& coeff, std::size_t power) {
    std::vector<Coeff> c(power + 1, Coeff(0));
    c[power] = coeff;
    return polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Coeff coeff(std::size_t power) const {
    return power < c_.size() ? c_[power] : Coeff(0);
  }

  const std::vector<Coeff>& coefficients() const { return c_; }

  friend polynomial operator+(const polynomial& a, const polynomial& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return polynomial(std::move(c));
  }

  friend polynomial operator-(const polynomial& a, const polynomial& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return polynomial(std::move(c));
  }

  friend polynomial operator*(const polynomial& a, const polynomial& b) {
    if (a.is_zero() || b.is_zero()) return polynomial();
    std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    return polynomial(std::move(c));
  }

  polynomial pow(std::uint64_t n) const {
    polynomial result{Coeff(1)};
    polynomial base = *this;
    while (n) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  Coeff eval(const Coeff& x) const {
    Coeff acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const polynomial& a, const polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const polynomial& a, const polynomial& b) {
    return !(a == b);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using int_polynomial = polynomial<bigint>;
using rat_polynomial = polynomial<rational>;

// C(n, k) by the multiplicative formula; exact at any size.
inline bigint binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  bigint r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// sum_{k=0}^{n-2} C(n,k) x^k: the non-radical part under each layer's root.
inline int_polynomial layer_constant_poly(unsigned n) {
  if (n < 2) throw std::invalid_argument("layer_constant_poly: order must be >= 2");
  std::vector<bigint> c(n - 1);
  for (unsigned k = 0; k + 2 <= n; ++k) c[k] = binomial(n, k);
  return int_polynomial(std::move(c));
}

// (x+1)^n == layer_constant_poly(n) + x^{n-1} (x + n), checked exactly.
inline bool functional_identity_check(unsigned n) {
  if (n < 2)
    throw std::invalid_argument("functional_identity_check: order must be >= 2");
  int_polynomial lhs = int_polynomial{1, 1}.pow(n);
  int_polynomial rhs = layer_constant_poly(n) +
                       int_polynomial::monomial(1, n - 1) *
                           int_polynomial{bigint(n), 1};
  return (lhs - rhs).is_zero();
}

// Solve order*d = d + (order-1) for an integer degree d.
inline int infer_degree(unsigned order) {
  if (order < 2) throw std::invalid_argument("infer_degree: order must be >= 2");
  const std::int64_t num = static_cast<std::int64_t>(order) - 1;
  const std::int64_t den = static_cast<std::int64_t>(order) - 1;
  if (num % den != 0)
    throw no_integer_degree_error("degree equation has no integer solution");
  return static_cast<int>(num / den);
}

// One candidate (a, b) for f(x) = a x + b against the four order-3 relations
//   a^3 = a,  3 a^2 b = 2a + b,  3 a b^2 = 3,  b^3 = 1
// in that flag order.  The flags are exact rational checks.
struct ansatz_candidate {
  rational a;
  rational b;
  std::array<bool, 4> satisfied;

  bool all_satisfied() const {
    return satisfied[0] && satisfied[1] && satisfied[2] && satisfied[3];
  }
};

/// (a x + b)^3 expanded: b^3 + 3ab^2 x + 3a^2 b x^2 + a^3 x^3.
inline rat_polynomial expand_lhs_order3(const rational& a, const rational& b) {
  return rat_polynomial{b, a}.pow(3);
}

// 1 + 3x + x^2 (a (x+2) + b) expanded: 1 + 3x + (2a+b) x^2 + a x^3.
inline rat_polynomial expand_rhs_order3(const rational& a, const rational& b) {
  return rat_polynomial{1, 3} +
         rat_polynomial::monomial(1, 2) * rat_polynomial{a * 2 + b, a};
}

inline ansatz_candidate check_ansatz(const rational& a, const rational& b) {
  ansatz_candidate c{a, b, {}};
  c.satisfied[0] = pow_rat(a, 3) == a;
  c.satisfied[1] = 3 * pow_rat(a, 2) * b == 2 * a + b;
  c.satisfied[2] = 3 * a * pow_rat(b, 2) == rational(3);
  c.satisfied[3] = pow_rat(b, 3) == rational(1);
  return c;
}

// Enumerate the real roots of the univariate constraints (a^3 = a gives
// a in {-1, 0, 1}; b^3 = 1 gives b = 1) and check all four relations for
// each pair.  Exactly one candidate satisfies everything.
inline std::vector<ansatz_candidate> solve_linear_ansatz() {
  std::vector<ansatz_candidate> out;
  for (int a : {-1, 0, 1}) out.push_back(check_ansatz(rational(a), rational(1)));
  return out;
}

}  // namespace radix
