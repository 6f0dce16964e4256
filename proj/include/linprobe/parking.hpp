#ifndef LINPROBE_PARKING_HPP
#define LINPROBE_PARKING_HPP

#include <vector>

#include "linprobe/polynomial.hpp"
#include "linprobe/series.hpp"

namespace linprobe {

/// Generating polynomial of total displacement over the parking sequences
/// of n cars: the coefficient of x^d counts sequences with displacement d.
/// Evaluates to (n+1)^(n−1) at x = 1; degree is n(n−1)/2 with leading
/// coefficient 1 for n ≥ 1.
struct ParkingPolynomial {
  unsigned n = 0;
  IntPolynomial poly;
};

/// Displacement polynomial over the confined hash sequences (cell 0 left
/// empty) for n items in m cells; sums to (m−n)·m^(n−1) at x = 1.
struct ConfinedDistribution {
  unsigned m = 0;
  unsigned n = 0;
  IntPolynomial poly;
};

/// Displacement polynomial over all m^n hash sequences, with the
/// normalization m^n carried alongside.
struct DisplacementDistribution {
  unsigned m = 0;
  unsigned n = 0;
  IntPolynomial poly;
  ExactInteger normalization;
};

/// One row of the (x−1)-rescaled transform of the parking polynomials:
///   scaled       = (x−1)^n · parking polynomial of n cars
///   exp_argument = (x^n − 1) · previous row's scaled polynomial; the EGF
///                  built from these is the log of the one built from
///                  `scaled`
///   log_term     = previous row's scaled polynomial; shifting x to 1+w
///                  turns it into the connected-graph count polynomial
struct InversionTransformRow {
  unsigned n = 0;
  IntPolynomial scaled;
  IntPolynomial exp_argument;
  IntPolynomial log_term;
};

/// Memo table of parking polynomials for 0..n_max cars. The table is an
/// explicit value: callers that need many polynomials build it once and
/// pass it around; there is no hidden global cache.
class ParkingTable {
 public:
  explicit ParkingTable(unsigned n_max);

  unsigned max_n() const { return static_cast<unsigned>(f_.size()) - 1; }
  const IntPolynomial& poly(unsigned n) const;

 private:
  std::vector<IntPolynomial> f_;
};

/// Parking polynomial by the splitting recurrence: condition on the cell
/// k where the last car ends up, which cuts the other n−1 cars into two
/// independent parking subproblems mixed by a binomial coefficient.
ParkingPolynomial parking_poly(unsigned n);
ParkingPolynomial parking_poly(const ParkingTable& table, unsigned n);

/// Same polynomial by the independent log route: take the series log of
/// sum_k x^(k(k−1)/2) z^k/k!, read off the (n+1)st EGF coefficient, and
/// divide by (x−1)^n exactly. A non-exact division is an internal error.
ParkingPolynomial parking_poly_via_log(unsigned n);

/// Rows 0..n_max of the rescaled transform, with `scaled` computed by its
/// own recurrence (independent of parking_poly).
std::vector<InversionTransformRow> inversion_rows(unsigned n_max);

/// Displacement polynomial over confined sequences, via the (m−n)-th
/// truncated power of the bivariate parking EGF. Requires 0 <= n < m.
ConfinedDistribution confined_poly(unsigned m, unsigned n);
ConfinedDistribution confined_poly(const ParkingTable& table, unsigned m,
                                   unsigned n);

/// Displacement polynomial over all m^n sequences: m/(m−n) times the
/// confined polynomial, which is exact in integers.
DisplacementDistribution displacement_poly(unsigned m, unsigned n);
DisplacementDistribution displacement_poly(const ParkingTable& table,
                                           unsigned m, unsigned n);

/// Parking polynomial evaluated at −1: the number of up-down permutations
/// of n elements.
ExactInteger updown_value(unsigned n);

}  // namespace linprobe

#endif
