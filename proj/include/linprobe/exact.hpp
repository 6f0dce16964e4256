#ifndef LINPROBE_EXACT_HPP
#define LINPROBE_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace linprobe {

// All core computation is exact. GMP supplies the arbitrary-precision
// integer and rational scalars; everything built on top of them keeps
// rationals canonical (lowest terms, positive denominator).
using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/// Raised when an exact identity that must hold by construction fails.
/// Reaching this always indicates a bug, never bad user input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// num/den reduced to lowest terms with positive denominator.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

ExactInteger int_pow(const ExactInteger& base, unsigned long exp);
ExactInteger factorial(unsigned long n);
ExactInteger binomial(unsigned long n, unsigned long k);

/// n · (n−1) · ... · (n−k+1); returns 1 for k = 0.
ExactInteger falling_factorial(const ExactInteger& n, unsigned long k);

/// Fixed-point decimal rendering with `digits` places after the point,
/// rounded half away from zero. Locale-independent.
std::string to_decimal_string(const ExactRational& value, unsigned digits);

}  // namespace linprobe

#endif
