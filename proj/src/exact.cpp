#include "linprobe/exact.hpp"

namespace linprobe {

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactInteger int_pow(const ExactInteger& base, unsigned long exp) {
  ExactInteger r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

ExactInteger factorial(unsigned long n) {
  ExactInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactInteger binomial(unsigned long n, unsigned long k) {
  if (k > n) return ExactInteger(0);
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ExactInteger falling_factorial(const ExactInteger& n, unsigned long k) {
  ExactInteger r(1);
  ExactInteger term(n);
  for (unsigned long i = 0; i < k; ++i) {
    r *= term;
    term -= 1;
  }
  return r;
}

std::string to_decimal_string(const ExactRational& value, unsigned digits) {
  const bool negative = value < 0;
  ExactRational mag = negative ? ExactRational(-value) : value;

  // round(|v| * 10^digits) with ties away from zero
  ExactInteger scale = int_pow(ExactInteger(10), digits);
  ExactInteger num = mag.get_num() * scale;
  ExactInteger quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              mag.get_den().get_mpz_t());
  if (2 * rem >= mag.get_den()) quot += 1;

  std::string s = quot.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && quot != 0) s.insert(0, "-");
  return s;
}

}  // namespace linprobe
