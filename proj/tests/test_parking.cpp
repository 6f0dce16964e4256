#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "linprobe/parking.hpp"
#include "linprobe/simulate.hpp"

using namespace linprobe;

namespace {

IntPolynomial int_poly(std::vector<long> coeffs) {
  std::vector<ExactInteger> c(coeffs.begin(), coeffs.end());
  return IntPolynomial::from_coefficients(std::move(c));
}

// histogram of an empirical distribution as a displacement polynomial
IntPolynomial histogram_poly(const EmpiricalDistribution& dist) {
  std::vector<ExactInteger> c;
  for (const auto& [d, count] : dist.histogram) {
    if (d >= c.size()) c.resize(d + 1, ExactInteger(0));
    c[d] = ExactInteger(static_cast<unsigned long>(count));
  }
  return IntPolynomial::from_coefficients(std::move(c));
}

// independent oracle: count permutations of 1..n alternating rise, fall, ...
unsigned long count_updown_permutations(unsigned n) {
  if (n <= 1) return 1;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 1);
  unsigned long count = 0;
  do {
    bool ok = true;
    for (unsigned i = 0; i + 1 < n && ok; ++i) {
      if (i % 2 == 0 ? p[i] >= p[i + 1] : p[i] <= p[i + 1]) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("parking polynomials: known small values") {
  CHECK(parking_poly(0).poly == IntPolynomial(1));
  CHECK(parking_poly(1).poly == IntPolynomial(1));
  CHECK(parking_poly(2).poly == int_poly({2, 1}));
  CHECK(parking_poly(3).poly == int_poly({6, 6, 3, 1}));

  // n=4: total count 125, cross-checked against the confined histogram of
  // the m=5 exhaustive enumeration (625 sequences)
  auto f4 = parking_poly(4);
  CHECK(f4.poly.eval(ExactInteger(1)) == 125);
  CHECK(f4.poly == histogram_poly(exhaustive_distribution(5, 4, true)));
}

TEST_CASE("parking polynomial counts, degree, positivity") {
  ParkingTable table(12);
  for (unsigned n = 1; n <= 12; ++n) {
    const IntPolynomial& f = table.poly(n);
    CHECK(f.eval(ExactInteger(1)) == int_pow(ExactInteger(n + 1), n - 1));
    CHECK(f.degree() == static_cast<long>(n * (n - 1) / 2));
    CHECK(f.coeff(n * (n - 1) / 2) == 1);
    for (std::size_t d = 0; d < f.size(); ++d) CHECK(f.coeff(d) > 0);
  }
}

TEST_CASE("log route reproduces the recurrence route") {
  CHECK(parking_poly_via_log(0).poly == IntPolynomial(1));
  CHECK(parking_poly_via_log(2).poly == int_poly({2, 1}));

  ParkingTable table(20);
  for (unsigned n = 0; n <= 20; ++n) {
    CHECK(parking_poly_via_log(n).poly == table.poly(n));
  }
}

TEST_CASE("inversion transform rows") {
  auto rows = inversion_rows(20);
  CHECK(rows[0].scaled == IntPolynomial(1));
  CHECK(rows[1].scaled == int_poly({-1, 1}));
  CHECK(rows[2].scaled == int_poly({2, -3, 0, 1}));  // (x-1)^2 (2+x)

  ParkingTable table(20);
  const IntPolynomial x_minus_one = int_poly({-1, 1});
  IntPolynomial power(1);
  for (unsigned n = 0; n <= 20; ++n) {
    // scaled row = (x-1)^n · parking polynomial, via the independent table
    CHECK(rows[n].scaled == power * table.poly(n));
    if (n >= 1) {
      IntPolynomial factor = IntPolynomial::monomial(ExactInteger(1), n);
      factor -= IntPolynomial(1);
      CHECK(rows[n].exp_argument == factor * rows[n - 1].scaled);
      CHECK(rows[n].log_term == rows[n - 1].scaled);
    }
    power *= x_minus_one;
  }
}

TEST_CASE("exp of the log-term EGF gives the lattice sum") {
  // build the EGF from the log_term rows, exponentiate, and compare the
  // plain coefficients against x^(n(n-1)/2)/n!
  const unsigned order = 20;
  auto rows = inversion_rows(order);
  PolySeries log_series(order);
  for (unsigned n = 1; n <= order; ++n) {
    log_series.set_coeff(
        n, to_rational_poly(rows[n].log_term)
               .scaled(ExactRational(1) / ExactRational(factorial(n))));
  }
  PolySeries expd = log_series.exp();
  for (unsigned n = 0; n <= order; ++n) {
    CHECK(expd.coeff(n) ==
          RatPolynomial::monomial(ExactRational(1) / ExactRational(factorial(n)),
                                  n * (n - 1) / 2));
  }
}

TEST_CASE("confined distributions") {
  // m = n+1 is the parking case
  ParkingTable table(6);
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(confined_poly(table, n + 1, n).poly == table.poly(n));
  }

  CHECK(confined_poly(4, 2).poly == int_poly({6, 2}));
  CHECK(confined_poly(5, 0).poly == IntPolynomial(1));
  CHECK_THROWS_AS(confined_poly(3, 3), std::invalid_argument);

  SUBCASE("multinomial composition over blocks agrees") {
    // F_{n+r,n} = sum over compositions n1+...+nr = n of the multinomial
    // times the product of parking polynomials; check r=2, n=3 by hand
    ParkingTable t(3);
    IntPolynomial direct;
    for (unsigned n1 = 0; n1 <= 3; ++n1) {
      unsigned n2 = 3 - n1;
      IntPolynomial term = t.poly(n1) * t.poly(n2);
      direct += term.scaled(binomial(3, n1));
    }
    CHECK(direct == confined_poly(5, 3).poly);
  }
}

TEST_CASE("displacement distributions") {
  CHECK(displacement_poly(2, 1).poly == IntPolynomial(2));
  CHECK(displacement_poly(3, 2).poly == int_poly({6, 3}));
  CHECK(displacement_poly(4, 2).poly == int_poly({12, 4}));

  ParkingTable table(11);
  for (unsigned m = 2; m <= 12; ++m) {
    for (unsigned n = 2; n < m; ++n) {
      auto confined = confined_poly(table, m, n);
      auto全 = displacement_poly(table, m, n);
      CHECK(confined.poly.eval(ExactInteger(1)) ==
            ExactInteger(m - n) * int_pow(ExactInteger(m), n - 1));
      CHECK(全.poly.eval(ExactInteger(1)) == int_pow(ExactInteger(m), n));
      CHECK(全.normalization == int_pow(ExactInteger(m), n));
    }
  }
}

TEST_CASE("polynomials match exhaustive enumeration") {
  ParkingTable table(6);
  for (unsigned m = 2; m <= 7; ++m) {
    for (unsigned n = 1; n < m; ++n) {
      CHECK(displacement_poly(table, m, n).poly ==
            histogram_poly(exhaustive_distribution(m, n, false)));
      CHECK(confined_poly(table, m, n).poly ==
            histogram_poly(exhaustive_distribution(m, n, true)));
    }
  }
}

TEST_CASE("up-down permutation counts") {
  const unsigned long expected[] = {1, 1, 1, 2, 5, 16, 61, 272};
  for (unsigned n = 0; n <= 7; ++n) {
    CHECK(updown_value(n) == expected[n]);
    CHECK(count_updown_permutations(n) == expected[n]);
  }
}
