#pragma once

// Layer generation for the nested-radical families, truncated evaluation
// under the tail policies, certified enclosures of the limit, and the
// bracket-exponent refinement.
//
// A layer j of a radical of order n contributes
//     root(n, constant_j + multiplier_j * <next layer>)
// and the families differ only in how (constant, multiplier, argument)
// depend on j.  Layers are generated lazily from j, never materialized,
// so deep sweeps stay memory-flat.

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "radix/algebra.hpp"
#include "radix/errors.hpp"
#include "radix/numeric.hpp"

namespace radix {

// One level of a nested radical: the non-radical part under the root, the
// coefficient of the inner radical, and the layer's argument value.
struct layer_term {
  rational constant;
  rational multiplier;
  rational argument;
};

// Order-n family: x+1 = root(n, 1 + C(n,1)x + ... + C(n,n-2)x^{n-2}
//                                + x^{n-1} root(n, ...)), arguments
// advancing by n-1 per layer.  Domain: order >= 2, start >= 1.
class general_spec {
 public:
  general_spec(unsigned order, rational start)
      : order_(order), start_(std::move(start)) {
    if (order_ < 2) throw std::domain_error("order must be >= 2");
    if (start_ < 1) throw std::domain_error("start must be >= 1");
  }

  unsigned order() const { return order_; }
  const rational& start() const { return start_; }

 private:
  unsigned order_;
  rational start_;
};

// Entry-4 family: x + n' + a = sqrt(a x + (n'+a)^2 + x sqrt(a(x+n') +
// (n'+a)^2 + (x+n') sqrt(...))), square roots throughout, arguments
// advancing by n' per layer.  The parameters are arbitrary rationals;
// radicand signs are checked during evaluation.
struct entry4_spec {
  rational x;
  rational nprime;
  rational a;
};

inline unsigned root_order(const general_spec& s) { return s.order(); }
inline unsigned root_order(const entry4_spec&) { return 2; }

inline layer_term layer_at(const general_spec& s, std::int64_t j) {
  if (j < 0) throw std::invalid_argument("layer index must be >= 0");
  const unsigned n = s.order();
  rational y = s.start() + rational(bigint(j) * (n - 1));
  rational constant = 0;
  rational ypow = 1;
  for (unsigned k = 0; k + 2 <= n; ++k) {
    constant += rational(binomial(n, k)) * ypow;
    ypow *= y;
  }
  // ypow is now y^{n-1}
  return layer_term{constant, ypow, y};
}

inline layer_term layer_at(const entry4_spec& s, std::int64_t j) {
  if (j < 0) throw std::invalid_argument("layer index must be >= 0");
  rational y = s.x + rational(bigint(j)) * s.nprime;
  rational shift = s.nprime + s.a;
  return layer_term{s.a * y + shift * shift, y, y};
}

// Value of the infinite tail starting at argument y, from the exact
// functional equation of each family.
inline rational fixed_point_value(const general_spec&, const rational& y) {
  return y + 1;
}
inline rational fixed_point_value(const entry4_spec& s, const rational& y) {
  return y + s.nprime + s.a;
}

template <class F>
concept radical_family = requires(const F& f, std::int64_t j, const rational& y) {
  { root_order(f) } -> std::convertible_to<unsigned>;
  { layer_at(f, j) } -> std::same_as<layer_term>;
  { fixed_point_value(f, y) } -> std::same_as<rational>;
};

// The closed-form value of the full infinite radical.
template <radical_family F>
rational limit_value(const F& fam) {
  return fixed_point_value(fam, layer_at(fam, 0).argument);
}

// What replaces the infinite tail when truncating at some depth:
//   zero             -> 0 (monotone lower bound)
//   exact_fixed_point-> the functional-equation value (reproduces the limit)
//   scaled_bound(q)  -> 2^q times the fixed-point value (q > 0 for upper
//                       bounds, q < 0 for lower bounds)
class tail_policy {
 public:
  enum class kind { zero, exact_fixed_point, scaled_bound };

  static tail_policy zero() { return tail_policy(kind::zero, 0); }
  static tail_policy fixed_point() {
    return tail_policy(kind::exact_fixed_point, 0);
  }
  static tail_policy scaled(rational exponent) {
    return tail_policy(kind::scaled_bound, std::move(exponent));
  }

  kind which() const { return kind_; }
  const rational& exponent() const { return exponent_; }

  std::string name() const {
    switch (kind_) {
      case kind::zero:
        return "zero";
      case kind::exact_fixed_point:
        return "fixed";
      case kind::scaled_bound: {
        std::string e = exponent_.str();
        return "scaled(2^" + e + ")";
      }
    }
    return "?";
  }

 private:
  tail_policy(kind k, rational e) : kind_(k), exponent_(std::move(e)) {}

  kind kind_;
  rational exponent_;
};

struct truncation_result {
  std::int64_t depth;
  tail_policy tail;
  interval value;
  unsigned precision;
};

// Evaluate the depth-layer truncation innermost-out in interval arithmetic.
// The tail value is inserted at argument y_depth, then each layer applies
//   v_j = root(order, constant_j + multiplier_j * v_{j+1}).
template <radical_family Family>
truncation_result truncated_eval(const Family& fam, std::int64_t depth,
                                 const tail_policy& tail, unsigned precision) {
  if (depth < 1) throw depth_error("truncation depth must be >= 1");
  const unsigned order = root_order(fam);
  const rational y_tail = layer_at(fam, depth).argument;

  interval v = interval::point(dyadic(), precision);
  switch (tail.which()) {
    case tail_policy::kind::zero:
      break;
    case tail_policy::kind::exact_fixed_point:
      v = interval::from_rational(fixed_point_value(fam, y_tail), precision);
      break;
    case tail_policy::kind::scaled_bound:
      v = pow2_interval(tail.exponent(), precision) *
          interval::from_rational(fixed_point_value(fam, y_tail), precision);
      break;
  }

  for (std::int64_t j = depth - 1; j >= 0; --j) {
    layer_term t = layer_at(fam, j);
    interval radicand = interval::from_rational(t.constant, precision) +
                        interval::from_rational(t.multiplier, precision) * v;
    if (radicand.lo().sign() < 0)
      throw negative_radicand_error(
          "negative radicand at layer " + std::to_string(j) +
          " (argument " + t.argument.str() + ")");
    v = nth_root(radicand, order);
  }
  return truncation_result{depth, tail, v, precision};
}

// Certified enclosure of the limit x+1: lower endpoint from the zero tail,
// upper endpoint from the scaled-bound tail 2^{q0}(y+1).  Rigorous for
// order 3 with the default q0 = 3/2; for other orders the enclosure is
// conditional on the assumed initial bound and callers must label it so.
inline interval enclose(const general_spec& spec, std::int64_t depth,
                        unsigned precision, const rational& q0 = rational(3, 2)) {
  truncation_result lower =
      truncated_eval(spec, depth, tail_policy::zero(), precision);
  truncation_result upper =
      truncated_eval(spec, depth, tail_policy::scaled(q0), precision);
  return interval(lower.value.lo(), upper.value.hi(), precision);
}

// Exponent pair of the bracket 2^{lo} (x+1) <= f(x) <= 2^{hi} (x+1) after
// k refinement passes: one pass through the functional equation divides the
// exponent by the root order.
struct bracket_exponents {
  unsigned order;
  std::int64_t iteration;
  rational lo_exponent;
  rational hi_exponent;
};

inline bracket_exponents refine_bracket(unsigned order, std::int64_t k,
                                        const rational& q0 = rational(3, 2)) {
  if (order < 2) throw std::domain_error("order must be >= 2");
  if (k < 0) throw std::invalid_argument("iteration must be >= 0");
  rational hi = q0 / rational(pow_int(order, static_cast<std::uint64_t>(k)));
  return bracket_exponents{order, k, -hi, hi};
}

// Enclosures of the bracket constants 2^{q0 / order^k} for k = 0..k_max,
// evaluated by iterated interval roots (each step takes one order-th root),
// which stays exact-rational in the exponent for any k.
inline std::vector<interval> bracket_constants(unsigned order,
                                               std::int64_t k_max,
                                               unsigned precision,
                                               const rational& q0 = rational(3,
                                                                             2)) {
  if (order < 2) throw std::domain_error("order must be >= 2");
  if (k_max < 0) throw std::invalid_argument("iteration must be >= 0");
  std::vector<interval> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  out.push_back(pow2_interval(q0, precision));
  for (std::int64_t k = 1; k <= k_max; ++k)
    out.push_back(nth_root(out.back(), order));
  return out;
}

// Truncations for every depth 1..max_depth under one tail policy.
template <radical_family Family>
std::vector<truncation_result> depth_sweep(const Family& fam,
                                           std::int64_t max_depth,
                                           const tail_policy& tail,
                                           unsigned precision) {
  if (max_depth < 1) throw depth_error("sweep depth must be >= 1");
  std::vector<truncation_result> out;
  out.reserve(static_cast<std::size_t>(max_depth));
  for (std::int64_t d = 1; d <= max_depth; ++d)
    out.push_back(truncated_eval(fam, d, tail, precision));
  return out;
}

}  // namespace radix
