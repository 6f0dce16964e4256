#ifndef LINPROBE_SERIES_HPP
#define LINPROBE_SERIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "linprobe/exact.hpp"
#include "linprobe/polynomial.hpp"

namespace linprobe {

/// Coefficient-domain hooks used by TruncatedSeries. Only exact domains
/// with the operations a series algorithm needs are admitted: rationals,
/// and polynomials over rationals (the bivariate case).
template <typename T>
struct SeriesCoeffOps;

template <>
struct SeriesCoeffOps<ExactRational> {
  static ExactRational zero() { return ExactRational(0); }
  static ExactRational one() { return ExactRational(1); }
  static bool is_zero(const ExactRational& v) { return v == 0; }
  static ExactRational mul_ui(const ExactRational& v, unsigned long k) {
    return v * ExactRational(k);
  }
  static ExactRational div_ui(const ExactRational& v, unsigned long k) {
    return v / ExactRational(k);
  }
  static ExactRational scale(const ExactRational& v, const ExactRational& s) {
    return v * s;
  }
  static ExactRational div(const ExactRational& a, const ExactRational& b) {
    if (b == 0) throw std::invalid_argument("series: division by zero");
    return a / b;
  }
};

template <>
struct SeriesCoeffOps<RatPolynomial> {
  static RatPolynomial zero() { return RatPolynomial(); }
  static RatPolynomial one() { return RatPolynomial(1); }
  static bool is_zero(const RatPolynomial& v) { return v.is_zero(); }
  static RatPolynomial mul_ui(const RatPolynomial& v, unsigned long k) {
    return v.scaled(ExactRational(k));
  }
  static RatPolynomial div_ui(const RatPolynomial& v, unsigned long k) {
    return v.scaled(ExactRational(1) / ExactRational(k));
  }
  static RatPolynomial scale(const RatPolynomial& v, const ExactRational& s) {
    return v.scaled(s);
  }
};

/// Power series truncated at an explicit order N: coefficients c_0..c_N.
///
/// Coefficients are stored plain: c_n is the EGF coefficient divided by n!.
/// Factorial normalization happens only at the construction/extraction
/// boundary (from_egf / egf_coeff). Binary operations truncate to the
/// smaller operand order.
template <typename T>
class TruncatedSeries {
  using Ops = SeriesCoeffOps<T>;

 public:
  explicit TruncatedSeries(std::size_t order)
      : c_(order + 1, Ops::zero()) {}

  static TruncatedSeries from_plain(std::vector<T> coeffs, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i)
      s.c_[i] = std::move(coeffs[i]);
    return s;
  }

  /// Interprets coeffs[n] as the coefficient of z^n/n!.
  static TruncatedSeries from_egf(std::vector<T> coeffs, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i)
      s.c_[i] = Ops::scale(coeffs[i],
                           ExactRational(1) / ExactRational(factorial(i)));
    return s;
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = Ops::one();
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }

  const T& coeff(std::size_t n) const { return c_.at(n); }

  void set_coeff(std::size_t n, T v) { c_.at(n) = std::move(v); }

  /// n! · c_n, the coefficient of z^n/n!.
  T egf_coeff(std::size_t n) const {
    return Ops::scale(c_.at(n), ExactRational(factorial(n)));
  }

  bool is_zero() const {
    for (const T& c : c_)
      if (!Ops::is_zero(c)) return false;
    return true;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

  TruncatedSeries truncated(std::size_t new_order) const {
    if (new_order > order())
      throw std::invalid_argument("truncated: cannot raise series order");
    TruncatedSeries s(new_order);
    for (std::size_t i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  /// Cauchy product truncated at min(order(a), order(b)).
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (Ops::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < r.c_.size(); ++j) {
        if (Ops::is_zero(b.c_[j])) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  TruncatedSeries scaled(const ExactRational& s) const {
    TruncatedSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = Ops::scale(c_[i], s);
    return r;
  }

  /// a^e by binary exponentiation, truncating after every product.
  /// The exponent may be large (thousands); cost is log2(e) products.
  TruncatedSeries pow(unsigned long e) const {
    TruncatedSeries result = one(order());
    TruncatedSeries base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// exp(a) for a with zero constant term, by the classical recurrence
  /// n·e_n = sum_{k=1..n} k·a_k·e_{n−k}.
  TruncatedSeries exp() const {
    if (!Ops::is_zero(c_[0]))
      throw std::invalid_argument("series exp: nonzero constant term");
    TruncatedSeries e(order());
    e.c_[0] = Ops::one();
    for (std::size_t n = 1; n <= order(); ++n) {
      T acc = Ops::zero();
      for (std::size_t k = 1; k <= n; ++k) {
        if (Ops::is_zero(c_[k])) continue;
        acc = acc + Ops::mul_ui(c_[k], k) * e.c_[n - k];
      }
      e.c_[n] = Ops::div_ui(acc, n);
    }
    return e;
  }

  /// log(a) for a with constant term one; exact inverse of exp() on the
  /// retained coefficients.
  TruncatedSeries log() const {
    if (!(c_[0] == Ops::one()))
      throw std::invalid_argument("series log: constant term must be one");
    TruncatedSeries l(order());
    for (std::size_t n = 1; n <= order(); ++n) {
      T acc = Ops::zero();
      for (std::size_t k = 1; k < n; ++k) {
        if (Ops::is_zero(l.c_[k])) continue;
        acc = acc + Ops::mul_ui(l.c_[k], k) * c_[n - k];
      }
      l.c_[n] = c_[n] - Ops::div_ui(acc, n);
    }
    return l;
  }

  /// Formal derivative; drops the order by one.
  TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries(0);
    TruncatedSeries d(order() - 1);
    for (std::size_t i = 0; i + 1 <= order(); ++i)
      d.c_[i] = Ops::mul_ui(c_[i + 1], i + 1);
    return d;
  }

  /// Multiplication by z^k at fixed order (the top k coefficients fall off).
  TruncatedSeries multiplied_by_power(std::size_t k) const {
    TruncatedSeries r(order());
    for (std::size_t i = k; i <= order(); ++i) r.c_[i] = c_[i - k];
    return r;
  }

  /// Division by z^k; requires the low k coefficients to vanish.
  TruncatedSeries divided_by_power(std::size_t k) const {
    if (k > order())
      throw std::invalid_argument("divided_by_power: order too small");
    for (std::size_t i = 0; i < k; ++i)
      if (!Ops::is_zero(c_[i]))
        throw internal_error("divided_by_power: nonzero low coefficient");
    TruncatedSeries r(order() - k);
    for (std::size_t i = 0; i + k <= order(); ++i) r.c_[i] = c_[i + k];
    return r;
  }

  /// Multiplicative inverse; requires an invertible constant term.
  /// Only available over field coefficient domains.
  TruncatedSeries inverse() const {
    TruncatedSeries r(order());
    r.c_[0] = Ops::div(Ops::one(), c_[0]);
    for (std::size_t n = 1; n <= order(); ++n) {
      T acc = Ops::zero();
      for (std::size_t k = 1; k <= n; ++k)
        acc = acc + c_[k] * r.c_[n - k];
      r.c_[n] = Ops::div(-acc, c_[0]);
    }
    return r;
  }

  /// Substitution a(g(z)) for g with zero constant term (Horner form).
  TruncatedSeries compose(const TruncatedSeries& g) const {
    if (!Ops::is_zero(g.c_[0]))
      throw std::invalid_argument("compose: inner constant term must be zero");
    const std::size_t n = std::min(order(), g.order());
    TruncatedSeries gt = g.truncated(n);
    TruncatedSeries acc(n);
    // terms c_i g^i with i > n have valuation > n and cannot contribute
    for (std::size_t i = n + 1; i-- > 0;) {
      acc = acc * gt;
      acc.c_[0] = acc.c_[0] + c_[i];
    }
    return acc;
  }

  /// Compositional inverse u with a(u(t)) = t, for a = a_1 z + ... with
  /// invertible a_1. Coefficients come from Lagrange inversion:
  /// u_n = (1/n) [z^(n−1)] (z / a(z))^n.
  TruncatedSeries reversion() const {
    if (!Ops::is_zero(c_[0]))
      throw std::invalid_argument("reversion: constant term must be zero");
    if (order() == 0) return TruncatedSeries(0);
    // p = z/a(z), inverted at order N−1
    TruncatedSeries p(order() - 1);
    for (std::size_t i = 0; i + 1 <= order(); ++i) p.c_[i] = c_[i + 1];
    p = p.inverse();
    TruncatedSeries u(order());
    TruncatedSeries acc = one(order() - 1);
    for (std::size_t n = 1; n <= order(); ++n) {
      acc = acc * p;
      u.c_[n] = Ops::div_ui(acc.c_[n - 1], n);
    }
    return u;
  }

 private:
  std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<ExactRational>;
using PolySeries = TruncatedSeries<RatPolynomial>;

}  // namespace linprobe

#endif
