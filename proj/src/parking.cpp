#include "linprobe/parking.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace linprobe {

ParkingTable::ParkingTable(unsigned n_max) {
  f_.reserve(n_max + 1);
  f_.push_back(IntPolynomial(1));  // no cars: one empty sequence
  for (unsigned n = 1; n <= n_max; ++n) {
    // Split on k, the cell taken by the last car: a geometric factor for
    // that car's displacement, a binomial for interleaving the two
    // subsequences, and the two smaller parking polynomials.
    // The product for k and for n+1−k is the same, so cache it.
    std::map<std::pair<unsigned, unsigned>, IntPolynomial> products;
    IntPolynomial sum;
    for (unsigned k = 1; k <= n; ++k) {
      auto key = std::minmax(k - 1, n - k);
      auto it = products.find(key);
      if (it == products.end()) {
        it = products.emplace(key, f_[key.first] * f_[key.second]).first;
      }
      IntPolynomial term = it->second.times_geometric(k);
      sum += term.scaled(binomial(n - 1, k - 1));
    }
    f_.push_back(std::move(sum));
  }
}

const IntPolynomial& ParkingTable::poly(unsigned n) const {
  if (n >= f_.size())
    throw std::invalid_argument("ParkingTable: index beyond table size");
  return f_[n];
}

ParkingPolynomial parking_poly(unsigned n) {
  return parking_poly(ParkingTable(n), n);
}

ParkingPolynomial parking_poly(const ParkingTable& table, unsigned n) {
  return {n, table.poly(n)};
}

ParkingPolynomial parking_poly_via_log(unsigned n) {
  const std::size_t order = n + 1;
  // sum_k x^(k(k-1)/2) z^k/k!, whose log generates the rescaled polynomials
  PolySeries lattice(order);
  for (std::size_t k = 0; k <= order; ++k) {
    lattice.set_coeff(
        k, RatPolynomial::monomial(
               ExactRational(1) / ExactRational(factorial(k)), k * (k - 1) / 2));
  }
  RatPolynomial log_term = lattice.log().egf_coeff(n + 1);
  IntPolynomial quotient = to_integer_poly(log_term);
  for (unsigned i = 0; i < n; ++i) quotient = divide_by_x_minus_one(quotient);
  return {n, quotient};
}

std::vector<InversionTransformRow> inversion_rows(unsigned n_max) {
  std::vector<IntPolynomial> scaled;
  scaled.reserve(n_max + 1);
  scaled.push_back(IntPolynomial(1));
  for (unsigned n = 1; n <= n_max; ++n) {
    IntPolynomial sum;
    for (unsigned k = 1; k <= n; ++k) {
      // (x^k − 1) · scaled[k−1] · scaled[n−k], interleaved binomially
      IntPolynomial factor = IntPolynomial::monomial(ExactInteger(1), k);
      factor -= IntPolynomial(1);
      IntPolynomial term = factor * scaled[k - 1] * scaled[n - k];
      sum += term.scaled(binomial(n - 1, k - 1));
    }
    scaled.push_back(std::move(sum));
  }

  std::vector<InversionTransformRow> rows;
  rows.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    InversionTransformRow row;
    row.n = n;
    row.scaled = scaled[n];
    if (n >= 1) {
      IntPolynomial factor = IntPolynomial::monomial(ExactInteger(1), n);
      factor -= IntPolynomial(1);
      row.exp_argument = factor * scaled[n - 1];
      row.log_term = scaled[n - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ConfinedDistribution confined_poly(unsigned m, unsigned n) {
  return confined_poly(ParkingTable(n), m, n);
}

ConfinedDistribution confined_poly(const ParkingTable& table, unsigned m,
                                   unsigned n) {
  if (n >= m)
    throw std::invalid_argument("confined_poly: requires n < m");
  // n! · [z^n] (parking EGF)^(m−n)
  PolySeries egf(n);
  for (unsigned k = 0; k <= n; ++k) {
    egf.set_coeff(k, to_rational_poly(table.poly(k))
                         .scaled(ExactRational(1) / ExactRational(factorial(k))));
  }
  RatPolynomial coeff = egf.pow(m - n).egf_coeff(n);
  return {m, n, to_integer_poly(coeff)};
}

DisplacementDistribution displacement_poly(unsigned m, unsigned n) {
  return displacement_poly(ParkingTable(n), m, n);
}

DisplacementDistribution displacement_poly(const ParkingTable& table,
                                           unsigned m, unsigned n) {
  ConfinedDistribution confined = confined_poly(table, m, n);
  // m/(m−n) · confined: exact in integers, coefficient by coefficient
  const ExactInteger divisor(m - n);
  std::vector<ExactInteger> coeffs(confined.poly.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    ExactInteger scaled = confined.poly.coeff(i) * m;
    ExactInteger quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
                scaled.get_mpz_t(), divisor.get_mpz_t());
    if (remainder != 0)
      throw internal_error("displacement_poly: non-integer coefficient");
    coeffs[i] = quotient;
  }
  DisplacementDistribution d;
  d.m = m;
  d.n = n;
  d.poly = IntPolynomial::from_coefficients(std::move(coeffs));
  d.normalization = int_pow(ExactInteger(m), n);
  return d;
}

ExactInteger updown_value(unsigned n) {
  return parking_poly(n).poly.eval(ExactInteger(-1));
}

}  // namespace linprobe
