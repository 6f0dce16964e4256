#ifndef LINPROBE_MOMENTS_HPP
#define LINPROBE_MOMENTS_HPP

#include "linprobe/exact.hpp"
#include "linprobe/parking.hpp"

namespace linprobe {

/// Q_r(m, n) = sum_{k >= 0} C(r+k, k) · n(n−1)...(n−k+1) / m^k. The sum is
/// finite: falling powers vanish once k exceeds n.
ExactRational q_function(unsigned r, unsigned m, unsigned n);

/// Verifies sum_n Q_r(m,n) t^n/n! = e^t / (1 − t/m)^(r+1) coefficient-wise
/// through `order`. On mismatch returns false and stores the first failing
/// index if requested.
bool q_generating_check(unsigned r, unsigned m, unsigned order,
                        unsigned* first_mismatch = nullptr);

/// Outcome of the three-term Q recurrences at one (r, m, n) point. The
/// recurrence stepping r down by two is only defined from r >= 2; below
/// that it is reported as skipped rather than inventing a Q_{−1}.
struct QIdentityReport {
  bool lower_two_checked = false;
  bool lower_two_ok = true;   // r·Q_r = m·Q_{r−2} − (m−n−r)·Q_{r−1}
  bool shift_n_ok = true;     // r·Q_r = m·Q_{r−1}(n+1) − m·Q_{r−1}(n)
  bool step_down_ok = true;   // n·Q_r(n−1) = m·Q_r(n) − m·Q_{r−1}(n)

  bool ok() const { return lower_two_ok && shift_n_ok && step_down_ok; }
};

/// Requires r >= 1 (every identity involves Q_{r−1}).
QIdentityReport q_identities_check(unsigned r, unsigned m, unsigned n);

/// E[d] = (n/2)(Q_0(m, n−1) − 1), exact.
ExactRational mean_displacement(unsigned m, unsigned n);

/// E[d(d−1)/2] in closed form over three Q values, exact.
ExactRational second_factorial_moment(unsigned m, unsigned n);

/// E[C(d, j)] for j <= 3 by the tree-function route: extract the
/// (w^j, t^n) coefficient of e^(mt)(1−t)·f(w,t)^(m−n) with the closed-form
/// f rows and normalize by the confined sequence count.
ExactRational factorial_moment_lagrange(unsigned j, unsigned m, unsigned n);

/// Derivative oracle: E[C(d, j)] read directly off the exact displacement
/// polynomial, with no closed-form input.
ExactRational moments_from_poly(unsigned m, unsigned n, unsigned j);
ExactRational moments_from_poly(const ParkingTable& table, unsigned m,
                                unsigned n, unsigned j);

/// Exact displacement moments for one (m, n) instance, cross-checked
/// internally: the two probe-count formulas must agree and the variance
/// must be nonnegative, else an internal_error is raised.
struct MomentReport {
  unsigned m = 0;
  unsigned n = 0;
  ExactRational mean_displacement;
  ExactRational second_factorial;   // E[d(d−1)/2]
  ExactRational third_factorial;    // E[C(d,3)], via the tree-function route
  ExactRational variance;
  ExactRational mean_probes;        // successful search, 1 + E[d]/n
};

MomentReport moment_report(unsigned m, unsigned n);

}  // namespace linprobe

#endif
