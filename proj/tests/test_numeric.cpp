#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "radix/numeric.hpp"

using namespace radix;

namespace {

dyadic abs_dyadic(const dyadic& d) { return d.sign() < 0 ? dyadic() - d : d; }

rational random_rational(std::mt19937_64& rng, int num_range, int den_range) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("dyadic values are canonical and arithmetic is exact") {
  dyadic a(bigint(12), 0);  // 12 = 3 * 2^2
  REQUIRE(a.mantissa() == 3);
  REQUIRE(a.exponent() == 2);
  REQUIRE(a.to_rational() == 12);

  dyadic half(bigint(1), -1);
  REQUIRE((a + half).to_rational() == rational(25, 2));
  REQUIRE((a - half).to_rational() == rational(23, 2));
  REQUIRE((a * half).to_rational() == 6);
  REQUIRE(half.pow(3).to_rational() == rational(1, 8));
  REQUIRE(dyadic().is_zero());
  REQUIRE(compare(half, a) < 0);
  REQUIRE(compare(a, rational(12)) == 0);
  REQUIRE(compare(a, rational(121, 10)) < 0);
}

TEST_CASE("directed rounding moves endpoints outward only") {
  dyadic v(bigint(1048577), 0);  // 2^20 + 1 needs 21 bits
  dyadic down = round_to(v, 8, round_dir::down);
  dyadic up = round_to(v, 8, round_dir::up);
  REQUIRE(compare(down, v) <= 0);
  REQUIRE(compare(v, up) <= 0);
  REQUIRE(compare(up - down, ulp_at(v, 8)) <= 0);

  dyadic neg(bigint(-1048577), 0);
  REQUIRE(compare(round_to(neg, 8, round_dir::down), neg) <= 0);
  REQUIRE(compare(neg, round_to(neg, 8, round_dir::up)) <= 0);
}

TEST_CASE("interval addition encloses sums") {
  interval zero = interval::from_rational(0, 64);
  interval one = interval::from_rational(1, 64);
  interval s = zero + one;
  REQUIRE(s.contains(rational(1)));
  REQUIRE(s.width().is_zero());

  interval a(dyadic(bigint(1), 0), dyadic(bigint(2), 0), 64);
  interval b(dyadic(bigint(3), 0), dyadic(bigint(4), 0), 64);
  interval c = a + b;
  REQUIRE(compare(c.lo(), rational(4)) <= 0);
  REQUIRE(compare(c.hi(), rational(6)) >= 0);

  interval tenth = interval::from_rational(rational(1, 10), 53);
  interval fifth = interval::from_rational(rational(2, 10), 53);
  interval sum = tenth + fifth;
  REQUIRE(sum.contains(rational(3, 10)));
  dyadic u = ulp_at(sum.hi(), 53);
  REQUIRE(compare(sum.width(), u + u) <= 0);
}

TEST_CASE("interval multiplication handles signs") {
  interval two = interval::from_rational(2, 64);
  interval three = interval::from_rational(3, 64);
  interval p = two * three;
  REQUIRE(p.contains(rational(6)));
  REQUIRE(p.width().is_zero());

  interval pm(dyadic(bigint(-1), 0), dyadic(bigint(1), 0), 64);
  interval sq = pm * pm;
  REQUIRE(compare(sq.lo(), rational(-1)) <= 0);
  REQUIRE(compare(sq.hi(), rational(1)) >= 0);

  interval one_two(dyadic(bigint(1), 0), dyadic(bigint(2), 0), 64);
  interval prod = one_two * one_two;
  REQUIRE(compare(prod.lo(), rational(1)) <= 0);
  REQUIRE(compare(prod.hi(), rational(4)) >= 0);

  interval neg = interval::from_rational(-3, 64) * interval::from_rational(5, 64);
  REQUIRE(neg.contains(rational(-15)));
}

TEST_CASE("interval power covers even, odd and straddling cases") {
  interval pm(dyadic(bigint(-2), 0), dyadic(bigint(3), 0), 64);
  interval even = pm.pow(2);
  REQUIRE(compare(even.lo(), rational(0)) <= 0);
  REQUIRE(compare(even.hi(), rational(9)) >= 0);
  interval odd = pm.pow(3);
  REQUIRE(compare(odd.lo(), rational(-8)) <= 0);
  REQUIRE(compare(odd.hi(), rational(27)) >= 0);
  REQUIRE(pm.pow(0).contains(rational(1)));

  interval negonly(dyadic(bigint(-3), 0), dyadic(bigint(-2), 0), 64);
  interval nsq = negonly.pow(2);
  REQUIRE(compare(nsq.lo(), rational(4)) <= 0);
  REQUIRE(compare(nsq.hi(), rational(9)) >= 0);
}

TEST_CASE("integer nth root floor") {
  REQUIRE(iroot_floor(bigint(0), 3) == 0);
  REQUIRE(iroot_floor(bigint(1), 7) == 1);
  REQUIRE(iroot_floor(bigint(26), 3) == 2);
  REQUIRE(iroot_floor(bigint(27), 3) == 3);
  REQUIRE(iroot_floor(bigint(28), 3) == 3);
  bigint big = pow_int(bigint(10), 60);
  REQUIRE(iroot_floor(big, 3) == pow_int(bigint(10), 20));
  REQUIRE(iroot_floor(big - 1, 3) == pow_int(bigint(10), 20) - 1);
  REQUIRE_THROWS_AS(iroot_floor(bigint(-8), 3), negative_radicand_error);
}

TEST_CASE("certified nth root of intervals") {
  interval eight = interval::from_rational(8, 96);
  interval two = nth_root(eight, 3);
  REQUIRE(two.contains(rational(2)));
  REQUIRE(compare(two.width(), ulp_at(two.lo(), 96)) <= 0);

  interval one = interval::from_rational(1, 64);
  interval r7 = nth_root(one, 7);
  REQUIRE(r7.contains(rational(1)));
  REQUIRE(r7.width().is_zero());

  interval sqrt2 = nth_root(interval::from_rational(2, 128), 2);
  REQUIRE(sqrt2.lo().pow(2).to_rational() <= 2);
  REQUIRE(sqrt2.hi().pow(2).to_rational() >= 2);
  REQUIRE(compare(sqrt2.width(), ulp_at(sqrt2.lo(), 128)) <= 0);

  interval neg = interval::from_rational(-1, 64);
  REQUIRE_THROWS_AS(nth_root(neg, 2), negative_radicand_error);
}

TEST_CASE("rational to interval conversion") {
  interval three = interval::from_rational(3, 64);
  REQUIRE(three.contains(rational(3)));
  REQUIRE(three.width().is_zero());

  interval third = interval::from_rational(rational(1, 3), 34);
  REQUIRE(third.contains(rational(1, 3)));
  REQUIRE(third.width().to_rational() <= rational(1, 1000000000));

  interval mhalf7 = interval::from_rational(rational(-7, 2), 64);
  REQUIRE(mhalf7.contains(rational(-7, 2)));
  REQUIRE(mhalf7.width().is_zero());
}

TEST_CASE("power-of-two interval for rational exponents") {
  interval t = pow2_interval(rational(3, 2), 128);
  // 2^(3/2) = 2.82842712474619...
  REQUIRE(to_decimal_string(t.lo(), 15, round_dir::down) ==
          "2.82842712474619");
  interval sq = t.pow(2);
  REQUIRE(sq.contains(rational(8)));
  REQUIRE(pow2_interval(rational(0), 64).contains(rational(1)));
  REQUIRE(pow2_interval(rational(-1), 64).contains(rational(1, 2)));
}

TEST_CASE("decimal rendering is directed and parseable") {
  interval c4 = nth_root(interval::from_rational(4, 128), 3);
  REQUIRE(to_decimal_string(c4.lo(), 12, round_dir::down) == "1.58740105196");
  REQUIRE(to_decimal_string(c4.hi(), 12, round_dir::up) == "1.58740105197");

  dyadic v(bigint(3), -1);  // 1.5 exactly
  REQUIRE(to_decimal_string(v, 12, round_dir::down) == "1.5");
  REQUIRE(to_decimal_string(v, 12, round_dir::up) == "1.5");
  REQUIRE(parse_decimal("1.5") == rational(3, 2));
  REQUIRE(parse_decimal("-0.25") == rational(-1, 4));
  REQUIRE(parse_decimal("5.87747175412e-39") ==
          rational(bigint(587747175412LL),
                   pow_int(bigint(10), 50)));

  // outward at coarse digits: rendered strings straddle the exact value
  rational exact = c4.lo().to_rational();
  REQUIRE(parse_decimal(to_decimal_string(c4.lo(), 6, round_dir::down)) <=
          exact);
  REQUIRE(parse_decimal(to_decimal_string(c4.lo(), 6, round_dir::up)) >=
          exact);
}

TEST_CASE("rational parsing accepts p/q and rejects decimals") {
  REQUIRE(parse_rational("3/2") == rational(3, 2));
  REQUIRE(parse_rational("-7") == rational(-7));
  REQUIRE(parse_rational(" 10/4 ") == rational(5, 2));
  REQUIRE_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("containment soundness under random pipelines") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    rational exact = random_rational(rng, 50, 20);
    interval box = interval::from_rational(exact, 80);
    for (int step = 0; step < 6; ++step) {
      rational operand = random_rational(rng, 12, 9);
      interval other = interval::from_rational(operand, 80);
      if (rng() % 2 == 0) {
        exact += operand;
        box = box + other;
      } else {
        exact *= operand;
        box = box * other;
      }
      REQUIRE(box.contains(exact));
    }
  }
}

TEST_CASE("raising an nth root back to the nth power contains the input") {
  std::mt19937_64 rng(7031);
  for (int trial = 0; trial < 200; ++trial) {
    rational v = random_rational(rng, 1000, 40);
    if (v < 0) v = -v;
    unsigned n = 2 + unsigned(rng() % 5);
    interval root = nth_root(interval::from_rational(v, 96), n);
    REQUIRE(root.pow(n).contains(v));
  }
}

TEST_CASE("nth root is monotone in the operand up to one ulp") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    rational mid = random_rational(rng, 500, 20);
    if (mid < 0) mid = -mid;
    rational margin(1 + int(rng() % 7), 3);
    interval inner = interval::from_rational(mid + 1, 64);
    interval outer(dyadic_from_rational(mid + 1 - margin, 64, round_dir::down),
                   dyadic_from_rational(mid + 1 + margin, 64, round_dir::up),
                   64);
    unsigned n = 2 + unsigned(rng() % 3);
    interval ri = nth_root(inner, n);
    interval ro = nth_root(outer, n);
    dyadic slack = ulp_at(ro.hi(), 64);
    REQUIRE(compare(ro.lo() - slack, ri.lo()) <= 0);
    REQUIRE(compare(ri.hi(), ro.hi() + slack) <= 0);
  }
}

TEST_CASE("doubling precision refines results") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    rational v = random_rational(rng, 900, 30);
    if (v <= 0) v = 1 - v;
    unsigned n = 2 + unsigned(rng() % 4);
    interval coarse = nth_root(interval::from_rational(v, 48), n);
    interval fine = nth_root(interval::from_rational(v, 96), n);
    dyadic coarse_ulp = ulp_at(coarse.hi(), 48);
    REQUIRE(compare(coarse.lo() - coarse_ulp, fine.lo()) <= 0);
    REQUIRE(compare(fine.hi(), coarse.hi() + coarse_ulp) <= 0);
    REQUIRE(compare(fine.width(), coarse.width() + coarse_ulp) <= 0);
  }
}

TEST_CASE("interval width and ulp bookkeeping") {
  interval v = interval::from_rational(rational(1, 3), 64);
  REQUIRE(compare(v.width(), ulp_at(v.lo(), 64)) <= 0);
  REQUIRE(abs_dyadic(v.width()).sign() >= 0);
  dyadic u = ulp_at(dyadic(bigint(1), 0), 53);
  REQUIRE(u.to_rational() == rational(bigint(1), bigint(1) << 52));
}
