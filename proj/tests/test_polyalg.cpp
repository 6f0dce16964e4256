#include <doctest.h>

#include "linprobe/polynomial.hpp"
#include "linprobe/series.hpp"
#include "linprobe/simulate.hpp"

using namespace linprobe;

namespace {

RationalSeries rat_series(std::vector<long> nums, std::vector<long> dens,
                          std::size_t order) {
  RationalSeries s(order);
  for (std::size_t i = 0; i < nums.size(); ++i)
    s.set_coeff(i, ExactRational(nums[i]) / ExactRational(dens[i]));
  return s;
}

// deterministic random series with small rational coefficients
RationalSeries random_series(SplitMix64& rng, std::size_t order,
                             bool zero_constant) {
  RationalSeries s(order);
  for (std::size_t i = zero_constant ? 1 : 0; i <= order; ++i) {
    long num = static_cast<long>(rng.next_below(19)) - 9;
    long den = static_cast<long>(rng.next_below(6)) + 1;
    s.set_coeff(i, ExactRational(num) / ExactRational(den));
  }
  return s;
}

RatPolynomial random_poly(SplitMix64& rng, std::size_t max_deg) {
  std::vector<ExactRational> c(rng.next_below(max_deg + 1) + 1);
  for (auto& v : c) {
    long num = static_cast<long>(rng.next_below(19)) - 9;
    long den = static_cast<long>(rng.next_below(6)) + 1;
    v = ExactRational(num) / ExactRational(den);
  }
  return RatPolynomial::from_coefficients(std::move(c));
}

}  // namespace

TEST_CASE("series multiplication") {
  // (1 + z)(1 - z) = 1 - z^2
  auto a = rat_series({1, 1}, {1, 1}, 2);
  auto b = rat_series({1, -1}, {1, 1}, 2);
  CHECK(a * b == rat_series({1, 0, -1}, {1, 1, 1}, 2));

  // exp(z)^2 = exp(2z): plain coefficients 1, 2, 2, 4/3
  RationalSeries ez(3);
  ez.set_coeff(1, ExactRational(1));
  ez = ez.exp();
  CHECK(ez * ez == rat_series({1, 2, 2, 4}, {1, 1, 1, 3}, 3));

  SUBCASE("one is the multiplicative identity") {
    SplitMix64 rng(11);
    for (int i = 0; i < 20; ++i) {
      auto s = random_series(rng, 8, false);
      CHECK(s * RationalSeries::one(8) == s);
    }
  }

  SUBCASE("mixed orders truncate to the smaller operand") {
    auto s = rat_series({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, 4);
    CHECK((s * RationalSeries::one(2)).order() == 2);
  }
}

TEST_CASE("series exponential") {
  // exp(0) = 1
  CHECK(RationalSeries(5).exp() == RationalSeries::one(5));

  // exp(z) through order 4
  RationalSeries z(4);
  z.set_coeff(1, ExactRational(1));
  CHECK(z.exp() == rat_series({1, 1, 1, 1, 1}, {1, 1, 2, 6, 24}, 4));

  // nonzero constant term is rejected
  CHECK_THROWS_AS(RationalSeries::one(3).exp(), std::invalid_argument);
}

TEST_CASE("series logarithm") {
  CHECK(RationalSeries::one(5).log() == RationalSeries(5));

  // log(exp(z + z^2)) = z + z^2
  RationalSeries a(5);
  a.set_coeff(1, ExactRational(1));
  a.set_coeff(2, ExactRational(1));
  CHECK(a.exp().log() == a);

  CHECK_THROWS_AS(RationalSeries(3).log(), std::invalid_argument);
}

TEST_CASE("exp/log round trip on random series") {
  SplitMix64 rng(23);
  for (std::size_t order = 1; order <= 30; ++order) {
    auto a = random_series(rng, order, true);
    CHECK(a.exp().log() == a);
  }
  // log then exp, constant term one
  for (int i = 0; i < 10; ++i) {
    auto a = random_series(rng, 12, true);
    a.set_coeff(0, ExactRational(1));
    CHECK(a.log().exp() == a);
  }
}

TEST_CASE("series power") {
  auto a = rat_series({2, 1, -1}, {1, 3, 2}, 6);
  CHECK(a.pow(0) == RationalSeries::one(6));

  // (1 + z)^3 = 1 + 3z + 3z^2 + z^3
  auto one_plus_z = rat_series({1, 1}, {1, 1}, 3);
  CHECK(one_plus_z.pow(3) == rat_series({1, 3, 3, 1}, {1, 1, 1, 1}, 3));

  SUBCASE("agrees with iterated multiplication") {
    SplitMix64 rng(37);
    for (int i = 0; i < 10; ++i) {
      auto s = random_series(rng, 10, false);
      RationalSeries iterated = RationalSeries::one(10);
      for (unsigned long e = 0; e <= 8; ++e) {
        CHECK(s.pow(e) == iterated);
        iterated = iterated * s;
      }
    }
  }
}

TEST_CASE("bivariate series: parking EGF squared gives the m=4, n=2 row") {
  // the confined displacement polynomial for m=4, n=2 is 2!·[z^2] F(x,z)^2;
  // cross-check its histogram against exhaustive simulation
  PolySeries egf(2);
  egf.set_coeff(0, RatPolynomial(1));                        // no cars
  egf.set_coeff(1, RatPolynomial(1));                        // one car
  egf.set_coeff(2, RatPolynomial::from_coefficients(
                       {ExactRational(2) / 2, ExactRational(1) / 2}));
  RatPolynomial coeff = egf.pow(2).egf_coeff(2);
  CHECK(coeff ==
        RatPolynomial::from_coefficients({ExactRational(6), ExactRational(2)}));

  auto oracle = exhaustive_distribution(4, 2, true);
  CHECK(oracle.histogram.at(0) == 6);
  CHECK(oracle.histogram.at(1) == 2);
}

TEST_CASE("lattice sum exp/log identities") {
  // exp of the log-series built from the rescaled parking polynomials
  // must reproduce sum_n x^(n(n-1)/2) z^n/n!; here we check the log side:
  // its fourth EGF coefficient is (x-1)^2 (2+x) = x^3 - 3x + 2
  const std::size_t order = 4;
  PolySeries lattice(order);
  for (std::size_t k = 0; k <= order; ++k) {
    lattice.set_coeff(
        k, RatPolynomial::monomial(
               ExactRational(1) / ExactRational(factorial(k)), k * (k - 1) / 2));
  }
  RatPolynomial third = lattice.log().egf_coeff(3);
  CHECK(third == RatPolynomial::from_coefficients(
                     {ExactRational(2), ExactRational(-3), ExactRational(0),
                      ExactRational(1)}));
}

TEST_CASE("polynomial ring properties") {
  SplitMix64 rng(101);
  for (int i = 0; i < 40; ++i) {
    auto p = random_poly(rng, 6);
    auto q = random_poly(rng, 6);
    auto r = random_poly(rng, 6);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("taylor shift to 1 + w") {
  // 2 + x -> 3 + w
  auto f2 = IntPolynomial::from_coefficients({ExactInteger(2), ExactInteger(1)});
  CHECK(taylor_shift_one(f2) ==
        IntPolynomial::from_coefficients({ExactInteger(3), ExactInteger(1)}));

  CHECK(taylor_shift_one(IntPolynomial(1)) == IntPolynomial(1));

  // 6 + 6x + 3x^2 + x^3 -> 16 + 15w + 6w^2 + w^3 (constant term 4^2)
  auto f3 = IntPolynomial::from_coefficients(
      {ExactInteger(6), ExactInteger(6), ExactInteger(3), ExactInteger(1)});
  CHECK(taylor_shift_one(f3) ==
        IntPolynomial::from_coefficients({ExactInteger(16), ExactInteger(15),
                                          ExactInteger(6), ExactInteger(1)}));

  SUBCASE("shift is a ring homomorphism") {
    SplitMix64 rng(211);
    for (int i = 0; i < 25; ++i) {
      auto p = random_poly(rng, 7);
      auto q = random_poly(rng, 7);
      CHECK(taylor_shift_one(p * q) ==
            taylor_shift_one(p) * taylor_shift_one(q));
      CHECK(taylor_shift_one(p + q) ==
            taylor_shift_one(p) + taylor_shift_one(q));
    }
  }
}

TEST_CASE("rationals stay canonical through arithmetic") {
  SplitMix64 rng(307);
  for (int i = 0; i < 50; ++i) {
    long a = static_cast<long>(rng.next_below(200)) - 100;
    long b = static_cast<long>(rng.next_below(99)) + 1;
    ExactRational q = ExactRational(a) / ExactRational(b);
    ExactRational sum = q + q;
    ExactInteger g;
    mpz_gcd(g.get_mpz_t(), sum.get_num().get_mpz_t(),
            sum.get_den().get_mpz_t());
    CHECK(g == 1);
    CHECK(sum.get_den() > 0);
  }
}

TEST_CASE("division by x minus one") {
  // (x-1)^2 (2+x) / (x-1)^2 = 2 + x
  auto a2 = IntPolynomial::from_coefficients(
      {ExactInteger(2), ExactInteger(-3), ExactInteger(0), ExactInteger(1)});
  auto once = divide_by_x_minus_one(a2);
  auto twice = divide_by_x_minus_one(once);
  CHECK(twice ==
        IntPolynomial::from_coefficients({ExactInteger(2), ExactInteger(1)}));

  // non-exact division is an internal error
  CHECK_THROWS_AS(divide_by_x_minus_one(IntPolynomial(1)), internal_error);
}

TEST_CASE("series inverse and reversion") {
  // geometric: 1/(1-z)
  RationalSeries one_minus(6);
  one_minus.set_coeff(0, ExactRational(1));
  one_minus.set_coeff(1, ExactRational(-1));
  auto geo = one_minus.inverse();
  for (std::size_t i = 0; i <= 6; ++i) CHECK(geo.coeff(i) == 1);

  SUBCASE("reversion composes to the identity") {
    SplitMix64 rng(401);
    for (int i = 0; i < 10; ++i) {
      auto a = random_series(rng, 9, true);
      a.set_coeff(1, ExactRational(1) + a.coeff(1) * a.coeff(1));  // nonzero
      auto u = a.reversion();
      RationalSeries identity(9);
      identity.set_coeff(1, ExactRational(1));
      CHECK(a.compose(u) == identity);
    }
  }
}
