#ifndef LINPROBE_POLYNOMIAL_HPP
#define LINPROBE_POLYNOMIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "linprobe/exact.hpp"

namespace linprobe {

/// Dense univariate polynomial over an exact coefficient ring (ExactInteger
/// or ExactRational). Coefficients are indexed by exponent; trailing zeros
/// are trimmed so the leading stored coefficient of a nonzero polynomial is
/// nonzero. The zero polynomial stores nothing and reports degree −1.
template <typename T>
class DensePolynomial {
 public:
  DensePolynomial() = default;

  explicit DensePolynomial(long constant) {
    if (constant != 0) c_.emplace_back(constant);
  }

  explicit DensePolynomial(T constant) {
    if (!(constant == 0)) c_.push_back(std::move(constant));
  }

  static DensePolynomial from_coefficients(std::vector<T> coeffs) {
    DensePolynomial p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static DensePolynomial monomial(T coeff, std::size_t exponent) {
    DensePolynomial p;
    if (!(coeff == 0)) {
      p.c_.assign(exponent + 1, T());
      p.c_[exponent] = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  /// Degree of the polynomial; −1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i (zero beyond the stored degree).
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }

  const std::vector<T>& coefficients() const { return c_; }

  DensePolynomial& operator+=(const DensePolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  DensePolynomial& operator-=(const DensePolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) {
    a += b;
    return a;
  }

  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) {
    a -= b;
    return a;
  }

  DensePolynomial operator-() const {
    DensePolynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend DensePolynomial operator*(const DensePolynomial& a,
                                   const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return DensePolynomial();
    DensePolynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, T());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }

  DensePolynomial& operator*=(const DensePolynomial& o) {
    *this = *this * o;
    return *this;
  }

  /// Scalar multiple (same coefficient ring).
  DensePolynomial scaled(const T& s) const {
    if (s == 0) return DensePolynomial();
    DensePolynomial r(*this);
    for (auto& c : r.c_) c = c * s;
    return r;
  }

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
    return a.c_ == b.c_;
  }

  T eval(const T& x) const {
    T acc = T();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  DensePolynomial derivative() const {
    if (c_.size() <= 1) return DensePolynomial();
    DensePolynomial r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * T(long(i));
    r.trim();
    return r;
  }

  /// Multiplication by 1 + x + ... + x^(k−1) via sliding window sums,
  /// O(k + deg) instead of a full convolution.
  DensePolynomial times_geometric(std::size_t k) const {
    if (k == 0 || is_zero()) return DensePolynomial();
    DensePolynomial r;
    r.c_.assign(c_.size() + k - 1, T());
    T window = T();
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (i < c_.size()) window += c_[i];
      if (i >= k) window -= c_[i - k];
      r.c_[i] = window;
    }
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = DensePolynomial<ExactInteger>;
using RatPolynomial = DensePolynomial<ExactRational>;

/// p(1 + w): exact binomial re-expansion around 1 (Taylor shift), by Horner.
template <typename T>
DensePolynomial<T> taylor_shift_one(const DensePolynomial<T>& p) {
  DensePolynomial<T> one_plus_w =
      DensePolynomial<T>::from_coefficients({T(1), T(1)});
  DensePolynomial<T> acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * one_plus_w + DensePolynomial<T>(p.coeff(i));
  }
  return acc;
}

/// Exact quotient p / (x − 1). The divisor is monic, so synthetic division
/// stays in the coefficient ring; a nonzero remainder is an internal_error.
template <typename T>
DensePolynomial<T> divide_by_x_minus_one(const DensePolynomial<T>& p) {
  if (p.is_zero()) return DensePolynomial<T>();
  const std::size_t n = p.size();
  if (n == 1) throw internal_error("divide_by_x_minus_one: nonzero remainder");
  std::vector<T> q(n - 1);
  T carry = p.coeff(n - 1);
  for (std::size_t i = n - 1; i-- > 0;) {
    q[i] = carry;
    carry = carry + p.coeff(i);
  }
  if (!(carry == 0))
    throw internal_error("divide_by_x_minus_one: nonzero remainder");
  return DensePolynomial<T>::from_coefficients(std::move(q));
}

inline RatPolynomial to_rational_poly(const IntPolynomial& p) {
  std::vector<ExactRational> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = ExactRational(p.coeff(i));
  return RatPolynomial::from_coefficients(std::move(c));
}

/// Fails with internal_error if any coefficient has a denominator ≠ 1.
inline IntPolynomial to_integer_poly(const RatPolynomial& p) {
  std::vector<ExactInteger> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    ExactRational q = p.coeff(i);
    if (q.get_den() != 1)
      throw internal_error("to_integer_poly: non-integer coefficient");
    c[i] = q.get_num();
  }
  return IntPolynomial::from_coefficients(std::move(c));
}

}  // namespace linprobe

#endif
