#pragma once

// Exact rational numbers, dyadic (mantissa * 2^exponent) endpoint values and
// outward-rounded interval arithmetic.  Every interval operation rounds its
// lower endpoint toward -inf and its upper endpoint toward +inf, so the true
// real result is always contained in the returned interval.  The nth root is
// a bisection-seeded Newton iteration on scaled integers whose result is
// verified exactly (candidate^n compared against the radicand as integers),
// so certified endpoints never depend on floating-point behavior.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "radix/errors.hpp"

namespace radix {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

enum class round_dir { down, up };

inline round_dir flip(round_dir d) {
  return d == round_dir::down ? round_dir::up : round_dir::down;
}

inline std::size_t bit_length(const bigint& v) {
  if (v == 0) return 0;
  return static_cast<std::size_t>(msb(v < 0 ? bigint(-v) : v)) + 1;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline bigint floor_div(const bigint& a, const bigint& b) {
  bigint q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline bigint pow_int(bigint base, std::uint64_t n) {
  bigint r = 1;
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

inline rational pow_rat(const rational& q, std::uint64_t n) {
  return rational(pow_int(numerator(q), n), pow_int(denominator(q), n));
}

// Floor of the integer nth root: the largest x with x^n <= v.
// Seeded with the power-of-two upper bracket 2^ceil(bits/n); Newton then
// descends monotonically, and the trailing loops pin the result exactly.
inline bigint iroot_floor(const bigint& v, std::uint64_t n) {
  if (v < 0) throw negative_radicand_error("iroot_floor: negative operand");
  if (n == 0) throw std::invalid_argument("iroot_floor: zero root order");
  if (v == 0) return 0;
  if (n == 1) return v;
  const std::size_t bits = bit_length(v);
  if (bits <= n) return 1;  // 1 <= v < 2^n
  bigint x = bigint(1) << ((bits + n - 1) / n);
  for (;;) {
    bigint xn1 = pow_int(x, n - 1);
    bigint y = (bigint(n - 1) * x + v / xn1) / n;
    if (y >= x) break;
    x = y;
  }
  while (pow_int(x, n) > v) --x;
  while (pow_int(x + 1, n) <= v) ++x;
  return x;
}

// A dyadic value mantissa * 2^exponent.  Canonical: mantissa odd or zero
// (zero has exponent 0), so equality is representation equality.
class dyadic {
 public:
  dyadic() : mant_(0), exp_(0) {}

  dyadic(bigint mantissa, std::int64_t exponent)
      : mant_(std::move(mantissa)), exp_(exponent) {
    normalize();
  }

  explicit dyadic(const bigint& integer) : mant_(integer), exp_(0) {
    normalize();
  }

  explicit dyadic(std::int64_t integer) : mant_(integer), exp_(0) {
    normalize();
  }

  const bigint& mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }

  bool is_zero() const { return mant_ == 0; }
  int sign() const { return mant_ == 0 ? 0 : (mant_ < 0 ? -1 : 1); }

  // floor(log2(|v|)); requires a nonzero value.
  std::int64_t ilog2() const {
    if (mant_ == 0) throw std::domain_error("ilog2 of zero");
    return static_cast<std::int64_t>(msb(mant_ < 0 ? bigint(-mant_) : mant_)) +
           exp_;
  }

  // Significant bits of the mantissa.
  std::size_t bits() const { return bit_length(mant_); }

  rational to_rational() const {
    if (exp_ >= 0) return rational(mant_ << exp_);
    return rational(mant_, bigint(1) << -exp_);
  }

  dyadic operator-() const { return dyadic(-mant_, exp_); }

  friend dyadic operator+(const dyadic& a, const dyadic& b) {
    if (a.mant_ == 0) return b;
    if (b.mant_ == 0) return a;
    std::int64_t e = a.exp_ < b.exp_ ? a.exp_ : b.exp_;
    bigint ma = a.mant_ << static_cast<unsigned>(a.exp_ - e);
    bigint mb = b.mant_ << static_cast<unsigned>(b.exp_ - e);
    return dyadic(ma + mb, e);
  }

  friend dyadic operator-(const dyadic& a, const dyadic& b) { return a + (-b); }

  friend dyadic operator*(const dyadic& a, const dyadic& b) {
    return dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
  }

  dyadic pow(std::uint64_t n) const {
    if (n == 0) return dyadic(bigint(1), 0);
    return dyadic(pow_int(mant_, n), exp_ * static_cast<std::int64_t>(n));
  }

  // Exact three-way comparison.
  friend int compare(const dyadic& a, const dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    std::int64_t e = a.exp_ < b.exp_ ? a.exp_ : b.exp_;
    bigint ma = a.mant_ << static_cast<unsigned>(a.exp_ - e);
    bigint mb = b.mant_ << static_cast<unsigned>(b.exp_ - e);
    return ma == mb ? 0 : (ma < mb ? -1 : 1);
  }

  friend bool operator==(const dyadic& a, const dyadic& b) {
    return a.mant_ == b.mant_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const dyadic& a, const dyadic& b) { return !(a == b); }
  friend bool operator<(const dyadic& a, const dyadic& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const dyadic& a, const dyadic& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const dyadic& a, const dyadic& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const dyadic& a, const dyadic& b) {
    return compare(a, b) >= 0;
  }

 private:
  void normalize() {
    if (mant_ == 0) {
      exp_ = 0;
      return;
    }
    std::size_t tz = static_cast<std::size_t>(
        lsb(mant_ < 0 ? bigint(-mant_) : mant_));
    if (tz > 0) {
      mant_ >>= tz;
      exp_ += static_cast<std::int64_t>(tz);
    }
  }

  bigint mant_;
  std::int64_t exp_;
};

// Exact comparison of a dyadic against a rational.
inline int compare(const dyadic& d, const rational& q) {
  // m * 2^e  vs  a/b  <=>  m * 2^e * b  vs  a
  const bigint& a = numerator(q);
  const bigint& b = denominator(q);
  bigint lhs = d.mantissa() * b;
  bigint rhs = a;
  std::int64_t e = d.exponent();
  if (e >= 0) {
    lhs <<= static_cast<unsigned>(e);
  } else {
    rhs <<= static_cast<unsigned>(-e);
  }
  return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
}

// Unit in the last place at `precision` significant bits, relative to the
// magnitude of v.  Defined for nonzero v.
inline dyadic ulp_at(const dyadic& v, unsigned precision) {
  return dyadic(bigint(1), v.ilog2() - static_cast<std::int64_t>(precision) + 1);
}

// Directed rounding to at most `precision` significant mantissa bits.
inline dyadic round_to(const dyadic& v, unsigned precision, round_dir dir) {
  if (precision == 0) throw std::invalid_argument("precision must be >= 1");
  if (v.is_zero()) return v;
  std::size_t nbits = v.bits();
  if (nbits <= precision) return v;
  unsigned shift = static_cast<unsigned>(nbits - precision);
  bigint mag = v.mantissa() < 0 ? bigint(-v.mantissa()) : v.mantissa();
  bool neg = v.mantissa() < 0;
  // Round magnitude down for the direction pointing toward zero on this
  // sign, up for the direction pointing away from zero.
  bool away = (dir == round_dir::up) != neg;
  bigint m = mag >> shift;
  if (away && (m << shift) != mag) ++m;
  return dyadic(neg ? bigint(-m) : m, v.exponent() + shift);
}

// Directed conversion of an exact rational to a dyadic with at most
// `precision` significant bits.  Error is below one ulp; dyadic rationals
// that fit convert exactly.
inline dyadic dyadic_from_rational(const rational& q, unsigned precision,
                                   round_dir dir) {
  if (precision == 0) throw std::invalid_argument("precision must be >= 1");
  if (q == 0) return dyadic();
  const bool neg = q < 0;
  bigint a = numerator(q);
  if (neg) a = -a;
  const bigint& b = denominator(q);
  const std::int64_t ma = static_cast<std::int64_t>(msb(a));
  const std::int64_t mb = static_cast<std::int64_t>(msb(b));
  // Scale so the quotient has p or p+1 significant bits.
  std::int64_t e = ma - mb - static_cast<std::int64_t>(precision);
  bigint num = a, den = b;
  if (e >= 0) {
    den <<= static_cast<unsigned>(e);
  } else {
    num <<= static_cast<unsigned>(-e);
  }
  bigint m = num / den;
  const bool exact = m * den == num;
  const bool away = (dir == round_dir::up) != neg;
  if (away && !exact) ++m;
  dyadic result(neg ? bigint(-m) : m, e);
  return round_to(result, precision, dir);
}

// Directed nth root of a nonnegative dyadic at `precision` significant bits.
// Guarantees r^n <= v (down) or r^n >= v (up) exactly, with error below one
// ulp of the result.
inline dyadic root_dyadic(const dyadic& v, std::uint64_t n, unsigned precision,
                          round_dir dir) {
  if (n < 2) throw std::invalid_argument("root order must be >= 2");
  if (v.sign() < 0)
    throw negative_radicand_error("nth root of a negative value");
  if (v.is_zero()) return v;
  const std::int64_t p = static_cast<std::int64_t>(precision);
  // Place the root's mantissa window: a = floor(v^{1/n} * 2^-f) has p or p+1
  // bits when f = floor(ilog2(v)/n) - p + 1.
  const std::int64_t f = floor_div(v.ilog2(), static_cast<std::int64_t>(n)) - p + 1;
  const std::int64_t se = v.exponent() - static_cast<std::int64_t>(n) * f;
  bigint scaled = v.mantissa();
  if (se >= 0) {
    scaled <<= static_cast<unsigned>(se);
  } else {
    scaled >>= static_cast<unsigned>(-se);  // floor; root floor is unaffected
  }
  bigint a = iroot_floor(scaled, n);
  dyadic candidate(a, f);
  if (dir == round_dir::up && candidate.pow(n) != v) {
    candidate = dyadic(a + 1, f);
  }
  dyadic r = round_to(candidate, precision, dir);
  // Certification: the directed inequality must hold exactly.
  if (dir == round_dir::down) {
    while (compare(r.pow(n), v) > 0) r = r - ulp_at(r, precision);
  } else {
    while (compare(r.pow(n), v) < 0) r = r + ulp_at(r, precision);
  }
  return r;
}

// Closed interval [lo, hi] of dyadic endpoints carrying a working precision.
// Invariant: lo <= hi.  All arithmetic rounds outward at that precision.
class interval {
 public:
  interval(dyadic lo, dyadic hi, unsigned precision)
      : lo_(std::move(lo)), hi_(std::move(hi)), prec_(precision) {
    if (prec_ == 0) throw std::invalid_argument("precision must be >= 1");
    if (compare(lo_, hi_) > 0)
      throw std::logic_error("interval endpoints out of order");
  }

  static interval point(const dyadic& v, unsigned precision) {
    return interval(v, v, precision);
  }

  static interval from_rational(const rational& q, unsigned precision) {
    return interval(dyadic_from_rational(q, precision, round_dir::down),
                    dyadic_from_rational(q, precision, round_dir::up),
                    precision);
  }

  const dyadic& lo() const { return lo_; }
  const dyadic& hi() const { return hi_; }
  unsigned precision() const { return prec_; }

  dyadic width() const { return hi_ - lo_; }

  bool contains(const rational& q) const {
    return compare(lo_, q) <= 0 && compare(hi_, q) >= 0;
  }
  bool contains(const dyadic& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  friend interval operator+(const interval& a, const interval& b) {
    unsigned p = a.prec_ > b.prec_ ? a.prec_ : b.prec_;
    return interval(round_to(a.lo_ + b.lo_, p, round_dir::down),
                    round_to(a.hi_ + b.hi_, p, round_dir::up), p);
  }

  friend interval operator-(const interval& a, const interval& b) {
    unsigned p = a.prec_ > b.prec_ ? a.prec_ : b.prec_;
    return interval(round_to(a.lo_ - b.hi_, p, round_dir::down),
                    round_to(a.hi_ - b.lo_, p, round_dir::up), p);
  }

  friend interval operator*(const interval& a, const interval& b) {
    unsigned p = a.prec_ > b.prec_ ? a.prec_ : b.prec_;
    dyadic c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_,
                   a.hi_ * b.hi_};
    dyadic lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
      if (c[i] < lo) lo = c[i];
      if (c[i] > hi) hi = c[i];
    }
    return interval(round_to(lo, p, round_dir::down),
                    round_to(hi, p, round_dir::up), p);
  }

  // Integer power with exact endpoint powers before the outward rounding.
  interval pow(std::uint64_t n) const {
    if (n == 0) return point(dyadic(std::int64_t{1}), prec_);
    dyadic a = lo_.pow(n);
    dyadic b = hi_.pow(n);
    dyadic lo, hi;
    if (n % 2 == 1 || lo_.sign() >= 0) {
      lo = a;
      hi = b;
    } else if (hi_.sign() <= 0) {
      lo = b;
      hi = a;
    } else {
      lo = dyadic();
      hi = a > b ? a : b;
    }
    return interval(round_to(lo, prec_, round_dir::down),
                    round_to(hi, prec_, round_dir::up), prec_);
  }

 private:
  dyadic lo_, hi_;
  unsigned prec_;
};

// Interval nth root: contains {y^{1/n} : y in v}.  The radicand must be
// certainly nonnegative.
inline interval nth_root(const interval& v, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("root order must be >= 2");
  if (v.lo().sign() < 0)
    throw negative_radicand_error(
        "nth root: radicand interval extends below zero");
  return interval(root_dyadic(v.lo(), n, v.precision(), round_dir::down),
                  root_dyadic(v.hi(), n, v.precision(), round_dir::up),
                  v.precision());
}

// Enclosure of 2^q for rational q.  The exponent denominator is the root
// order of the final extraction and must stay within sane bounds.
inline interval pow2_interval(const rational& q, unsigned precision) {
  const bigint& num = numerator(q);
  const bigint& den = denominator(q);
  if (num < -(bigint(1) << 40) || num > (bigint(1) << 40))
    throw std::invalid_argument("pow2_interval: exponent numerator too large");
  dyadic base(bigint(1), num.convert_to<std::int64_t>());
  if (den == 1) return interval::point(base, precision);
  if (den > 1000000)
    throw std::invalid_argument(
        "pow2_interval: exponent denominator too large");
  return nth_root(interval::point(base, precision),
                  den.convert_to<std::uint64_t>());
}

// --- Decimal rendering -----------------------------------------------------
//
// Directed decimal strings: the rendered value is <= the input for
// round-down and >= for round-up, so a printed enclosure is itself a valid
// (coarser) enclosure.  All digit arithmetic is exact.

inline std::int64_t floor_log10(const rational& q) {
  if (q <= 0) throw std::domain_error("floor_log10 of nonpositive value");
  const std::int64_t ma = static_cast<std::int64_t>(msb(numerator(q)));
  const std::int64_t mb = static_cast<std::int64_t>(msb(denominator(q)));
  // log10(2) ~ 30103/100000; the estimate is fixed exactly below.
  std::int64_t e = (ma - mb) * 30103 / 100000 - 2;
  auto pow10_cmp = [&](std::int64_t k) {
    // compare q against 10^k
    if (k >= 0) return q < rational(pow_int(10, static_cast<std::uint64_t>(k)))
                           ? -1
                           : (q == rational(pow_int(10, static_cast<std::uint64_t>(k))) ? 0 : 1);
    rational p(1, pow_int(10, static_cast<std::uint64_t>(-k)));
    return q < p ? -1 : (q == p ? 0 : 1);
  };
  while (pow10_cmp(e + 1) >= 0) ++e;
  while (pow10_cmp(e) < 0) --e;
  return e;
}

inline std::string to_decimal_string(const dyadic& v, unsigned sig_digits,
                                     round_dir dir) {
  if (sig_digits == 0) throw std::invalid_argument("need >= 1 digit");
  if (v.is_zero()) return "0";
  const bool neg = v.sign() < 0;
  rational mag = (neg ? -v : v).to_rational();
  std::int64_t e10 = floor_log10(mag);
  const std::int64_t k = static_cast<std::int64_t>(sig_digits) - 1 - e10;
  bigint num = numerator(mag);
  bigint den = denominator(mag);
  if (k >= 0) {
    num *= pow_int(10, static_cast<std::uint64_t>(k));
  } else {
    den *= pow_int(10, static_cast<std::uint64_t>(-k));
  }
  bigint d = num / den;
  const bool exact = d * den == num;
  const bool away = (dir == round_dir::up) != neg;
  if (away && !exact) ++d;
  if (d == pow_int(10, sig_digits)) {
    d = pow_int(10, sig_digits - 1);
    ++e10;
  }
  std::string digits = d.str();
  // drop trailing zeros; the value is unchanged
  std::size_t keep = digits.find_last_not_of('0');
  digits.erase(keep + 1);
  std::string out = neg ? "-" : "";
  if (e10 >= 0 && e10 <= 14) {
    std::size_t ip = static_cast<std::size_t>(e10) + 1;
    if (digits.size() <= ip) {
      out += digits + std::string(ip - digits.size(), '0');
    } else {
      out += digits.substr(0, ip) + "." + digits.substr(ip);
    }
  } else if (e10 < 0 && e10 >= -4) {
    out += "0." + std::string(static_cast<std::size_t>(-e10) - 1, '0') + digits;
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e10);
  }
  return out;
}

// Exact read-back of strings produced by to_decimal_string (also accepts a
// leading '+' and 'E').  Used to check outward rendering and by the plot
// layout, which works from the rendered rows.
inline rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
  bigint mantissa = 0;
  std::int64_t frac_digits = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      break;
    } else {
      throw std::invalid_argument("bad decimal string: " + text);
    }
  }
  std::int64_t exp10 = 0;
  if (i < text.size()) {
    exp10 = std::stoll(text.substr(i + 1));
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal string: " + text);
  std::int64_t k = exp10 - frac_digits;
  rational q(mantissa);
  if (k > 0) q *= rational(pow_int(10, static_cast<std::uint64_t>(k)));
  if (k < 0) q /= rational(pow_int(10, static_cast<std::uint64_t>(-k)));
  return neg ? -q : q;
}

// Exact rationals from "p" or "p/q" text.  Decimal literals are rejected so
// inputs stay exact end-to-end.
inline rational parse_rational(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos)
    throw std::invalid_argument("empty rational literal");
  std::string body = text.substr(first, last - first + 1);
  if (body.find('.') != std::string::npos)
    throw std::invalid_argument(
        "decimal literals are not accepted; use an exact rational like 3/2: '" +
        body + "'");
  std::size_t slash = body.find('/');
  try {
    if (slash == std::string::npos) return rational(bigint(body));
    bigint num(body.substr(0, slash));
    bigint den(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + body + "'");
  }
}

}  // namespace radix
