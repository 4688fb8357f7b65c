#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "radix/algebra.hpp"

using namespace radix;

namespace {

// Pascal-triangle binomials, independent of the multiplicative formula the
// library uses.
bigint pascal(unsigned n, unsigned k) {
  std::vector<bigint> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<bigint> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return k < row.size() ? row[k] : bigint(0);
}

int_polynomial x_plus_1() {
  return int_polynomial({bigint(1), bigint(1)});
}

}  // namespace

TEST_CASE("polynomial powers expand exactly") {
  int_polynomial sq = x_plus_1().pow(2);
  REQUIRE(sq == int_polynomial({bigint(1), bigint(2), bigint(1)}));

  int_polynomial quart = x_plus_1().pow(4);
  REQUIRE(quart ==
          int_polynomial({bigint(1), bigint(4), bigint(6), bigint(4),
                          bigint(1)}));

  int_polynomial p({bigint(5), bigint(-2), bigint(7)});
  REQUIRE(p.pow(0) == int_polynomial({bigint(1)}));
  REQUIRE(p.pow(1) == p);
}

TEST_CASE("polynomial arithmetic basics") {
  int_polynomial zero;
  REQUIRE(zero.degree() == -1);
  REQUIRE(zero.is_zero());
  int_polynomial p({bigint(1), bigint(0), bigint(3)});
  REQUIRE(p.degree() == 2);
  REQUIRE((p - p).is_zero());
  REQUIRE((p + zero) == p);
  REQUIRE((p * zero).is_zero());
  REQUIRE(p.eval(bigint(2)) == 13);
  // trailing zeros are trimmed away
  int_polynomial q({bigint(4), bigint(0), bigint(0)});
  REQUIRE(q.degree() == 0);
}

TEST_CASE("layer constant polynomial holds the first n-1 binomials") {
  REQUIRE(layer_constant_poly(2) == int_polynomial({bigint(1)}));
  REQUIRE(layer_constant_poly(3) == int_polynomial({bigint(1), bigint(3)}));
  REQUIRE(layer_constant_poly(4) ==
          int_polynomial({bigint(1), bigint(4), bigint(6)}));
}

TEST_CASE("binomial coefficients match Pascal's triangle and its symmetry") {
  for (unsigned n = 2; n <= 16; ++n) {
    int_polynomial c = layer_constant_poly(n);
    REQUIRE(c.degree() == int(n) - 2);
    for (unsigned k = 0; k + 2 <= n; ++k) {
      REQUIRE(c.coeff(k) == pascal(n, k));
      REQUIRE(c.coeff(k) == pascal(n, n - k));
      REQUIRE(binomial(n, k) == pascal(n, k));
    }
  }
}

TEST_CASE("layer identity holds for every order up to 64") {
  REQUIRE(functional_identity_check(2));
  REQUIRE(functional_identity_check(3));
  REQUIRE(functional_identity_check(64));
  for (unsigned n = 2; n <= 64; ++n) REQUIRE(functional_identity_check(n));
}

TEST_CASE("the linear degree balance pins d = 1") {
  REQUIRE(infer_degree(2) == 1);
  REQUIRE(infer_degree(3) == 1);
  REQUIRE(infer_degree(10) == 1);
  for (unsigned n = 2; n <= 10; ++n) REQUIRE(infer_degree(n) == 1);
}

TEST_CASE("ansatz candidates: one winner, specific rejections") {
  auto candidates = solve_linear_ansatz();
  REQUIRE(candidates.size() == 3);

  int winners = 0;
  for (const auto& c : candidates) {
    if (c.all_satisfied()) {
      ++winners;
      REQUIRE(c.a == 1);
      REQUIRE(c.b == 1);
    }
    if (c.a == 0 && c.b == 1) {
      // 3a^2 b = 2a + b fails: 0 != 1
      REQUIRE_FALSE(c.satisfied[1]);
      REQUIRE_FALSE(c.all_satisfied());
    }
    if (c.a == -1 && c.b == 1) {
      // 3ab^2 = 3 fails: -3 != 3
      REQUIRE_FALSE(c.satisfied[2]);
      REQUIRE_FALSE(c.all_satisfied());
    }
    // the univariate constraints themselves always hold by construction
    REQUIRE(c.satisfied[0]);
    REQUIRE(c.satisfied[3]);
  }
  REQUIRE(winners == 1);
}

TEST_CASE("cubed linear form versus the unrolled right-hand side") {
  rat_polynomial expected({rational(1), rational(3), rational(3), rational(1)});
  REQUIRE(expand_rhs_order3(rational(1), rational(1)) == expected);
  REQUIRE(expand_lhs_order3(rational(1), rational(1)) == expected);

  REQUIRE(expand_rhs_order3(rational(0), rational(0)) ==
          rat_polynomial({rational(1), rational(3)}));
  REQUIRE(expand_rhs_order3(rational(2), rational(0)) ==
          rat_polynomial({rational(1), rational(3), rational(4), rational(2)}));

  // among the enumerated candidates only (1,1) balances both sides
  for (const auto& c : solve_linear_ansatz()) {
    bool match = expand_lhs_order3(c.a, c.b) == expand_rhs_order3(c.a, c.b);
    REQUIRE(match == c.all_satisfied());
  }
}

TEST_CASE("pow agrees with repeated multiplication on random polynomials") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, 8);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<bigint> cs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
    int_polynomial p(cs);
    unsigned e = unsigned(rng() % 6);
    int_polynomial by_pow = p.pow(e);
    int_polynomial by_mul({bigint(1)});
    for (unsigned i = 0; i < e; ++i) by_mul = by_mul * p;
    REQUIRE(by_pow == by_mul);
  }
}
