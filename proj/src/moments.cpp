#include "linprobe/moments.hpp"

#include <stdexcept>

#include "linprobe/graphs.hpp"
#include "linprobe/series.hpp"

namespace linprobe {

ExactRational q_function(unsigned r, unsigned m, unsigned n) {
  if (m < 1) throw std::invalid_argument("q_function: m must be positive");
  ExactRational sum(0);
  ExactInteger m_power(1);
  ExactInteger falling(1);
  for (unsigned k = 0; k <= n; ++k) {
    sum += make_rational(binomial(r + k, k) * falling, m_power);
    falling *= ExactInteger(n - k);
    m_power *= m;
  }
  return sum;
}

bool q_generating_check(unsigned r, unsigned m, unsigned order,
                        unsigned* first_mismatch) {
  // e^t / (1 − t/m)^(r+1)
  RationalSeries exp_t(order);
  exp_t.set_coeff(1, ExactRational(1));
  exp_t = exp_t.exp();
  RationalSeries denom(order);
  denom.set_coeff(0, ExactRational(1));
  denom.set_coeff(1, ExactRational(-1) / ExactRational(m));
  RationalSeries rhs = exp_t * denom.inverse().pow(r + 1);

  for (unsigned n = 0; n <= order; ++n) {
    ExactRational lhs =
        q_function(r, m, n) / ExactRational(factorial(n));
    if (lhs != rhs.coeff(n)) {
      if (first_mismatch) *first_mismatch = n;
      return false;
    }
  }
  return true;
}

QIdentityReport q_identities_check(unsigned r, unsigned m, unsigned n) {
  if (r < 1)
    throw std::invalid_argument("q_identities_check: requires r >= 1");

  QIdentityReport report;
  const ExactRational q_r = q_function(r, m, n);
  const ExactRational q_r1 = q_function(r - 1, m, n);
  const ExactRational rq = ExactRational(r) * q_r;
  const ExactRational m_rat{ExactInteger(m)};

  if (r >= 2) {
    report.lower_two_checked = true;
    ExactRational rhs = m_rat * q_function(r - 2, m, n) -
                        (m_rat - ExactRational(n) - ExactRational(r)) * q_r1;
    report.lower_two_ok = (rq == rhs);
  }

  report.shift_n_ok =
      (rq == m_rat * q_function(r - 1, m, n + 1) - m_rat * q_r1);

  if (n >= 1) {
    report.step_down_ok = (ExactRational(n) * q_function(r, m, n - 1) ==
                           m_rat * q_r - m_rat * q_r1);
  }
  return report;
}

ExactRational mean_displacement(unsigned m, unsigned n) {
  if (n < 1 || n >= m)
    throw std::invalid_argument("mean_displacement: requires 1 <= n < m");
  return ExactRational(n) / 2 * (q_function(0, m, n - 1) - 1);
}

ExactRational second_factorial_moment(unsigned m, unsigned n) {
  if (n < 1 || n >= m)
    throw std::invalid_argument(
        "second_factorial_moment: requires 1 <= n < m");
  if (n < 3) return ExactRational(0);  // C(d,2) = 0 when d <= 1
  const ExactInteger mz(m), nz(n);
  ExactRational prefactor =
      make_rational(nz * (nz - 1) * (nz - 2), 24 * mz * mz);
  ExactRational bracket =
      ExactRational(15) * q_function(3, m, n - 3) +
      ExactRational(ExactInteger(4 + 3 * mz - 3 * nz)) * q_function(2, m, n - 3) +
      ExactRational(ExactInteger(5 - 3 * mz + 3 * nz)) * q_function(1, m, n - 3);
  return prefactor * bracket;
}

namespace {

// [w^j] of f(w,t)^p for the truncated cube f = 1 + w f1 + w^2 f2 + w^3 f3:
// expanding (1 + g)^p = sum_k C(p,k) g^k, only k <= j contributes.
RationalSeries f_power_row(unsigned j, unsigned long p, unsigned order) {
  const RationalSeries f1 = f_closed_form(1, order).series;
  switch (j) {
    case 0:
      return RationalSeries::one(order);
    case 1:
      return f1.scaled(ExactRational(p));
    case 2: {
      const RationalSeries f2 = f_closed_form(2, order).series;
      return f2.scaled(ExactRational(p)) +
             (f1 * f1).scaled(ExactRational(binomial(p, 2)));
    }
    case 3: {
      const RationalSeries f2 = f_closed_form(2, order).series;
      const RationalSeries f3 = f_closed_form(3, order).series;
      return f3.scaled(ExactRational(p)) +
             (f1 * f2).scaled(ExactRational(p) * ExactRational(p - 1)) +
             (f1 * f1 * f1).scaled(ExactRational(binomial(p, 3)));
    }
    default:
      throw std::invalid_argument(
          "factorial_moment_lagrange: rows beyond w^3 are unavailable");
  }
}

}  // namespace

ExactRational factorial_moment_lagrange(unsigned j, unsigned m, unsigned n) {
  if (n < 1 || n >= m)
    throw std::invalid_argument(
        "factorial_moment_lagrange: requires 1 <= n < m");
  if (j > 3)
    throw std::invalid_argument(
        "factorial_moment_lagrange: rows beyond w^3 are unavailable");

  const unsigned order = n;
  // e^(mt) (1 − t)
  RationalSeries exp_mt(order);
  exp_mt.set_coeff(1, ExactRational(m));
  exp_mt = exp_mt.exp();
  RationalSeries one_minus_t(order);
  one_minus_t.set_coeff(0, ExactRational(1));
  one_minus_t.set_coeff(1, ExactRational(-1));

  RationalSeries integrand = exp_mt * one_minus_t * f_power_row(j, m - n, order);

  // normalize by the confined count (m−n)·m^(n−1)/n!
  ExactRational coefficient = integrand.coeff(n);
  ExactRational normalization =
      make_rational(ExactInteger(m - n) * int_pow(ExactInteger(m), n - 1),
                    factorial(n));
  return coefficient / normalization;
}

ExactRational moments_from_poly(unsigned m, unsigned n, unsigned j) {
  return moments_from_poly(ParkingTable(n), m, n, j);
}

ExactRational moments_from_poly(const ParkingTable& table, unsigned m,
                                unsigned n, unsigned j) {
  DisplacementDistribution dist = displacement_poly(table, m, n);
  // E[C(d,j)] = sum_d count_d · C(d,j) / m^n  (equals the j-th derivative
  // at 1 over j!·m^n)
  ExactInteger weighted(0);
  for (std::size_t d = 0; d < dist.poly.size(); ++d) {
    weighted += dist.poly.coeff(d) * binomial(d, j);
  }
  return make_rational(weighted, dist.normalization);
}

MomentReport moment_report(unsigned m, unsigned n) {
  if (n < 1 || n >= m)
    throw std::invalid_argument("moment_report: requires 1 <= n < m");

  MomentReport report;
  report.m = m;
  report.n = n;
  report.mean_displacement = mean_displacement(m, n);
  report.second_factorial = second_factorial_moment(m, n);
  report.third_factorial = factorial_moment_lagrange(3, m, n);

  // E[d^2] = 2·E[C(d,2)] + E[d]
  ExactRational second_raw =
      2 * report.second_factorial + report.mean_displacement;
  report.variance =
      second_raw - report.mean_displacement * report.mean_displacement;
  if (report.variance < 0)
    throw internal_error("moment_report: negative variance");

  report.mean_probes = 1 + report.mean_displacement / ExactRational(n);
  ExactRational probes_closed =
      (q_function(0, m, n - 1) + 1) / 2;
  if (report.mean_probes != probes_closed)
    throw internal_error("moment_report: probe-count formulas disagree");
  return report;
}

}  // namespace linprobe
