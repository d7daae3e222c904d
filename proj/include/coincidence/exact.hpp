#pragma once

// Exact integer and rational arithmetic shared by every closed-form
// computation in the library. Big numbers are GMP values; probabilities are
// carried as lowest-terms rationals and only turned into decimals on output.

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace coincidence {

using BigInt = mpz_class;
using Rational = mpq_class;

/// A problem instance: n people, each born uniformly on one of d days.
///
/// Library routines accept n = 0 or d = 0 because the chaining recursions
/// reduce to such instances; validate() enforces n, d >= 1 for user input.
struct Params {
  std::uint32_t n = 100;
  std::uint32_t d = 365;

  void validate() const;
  friend bool operator==(const Params&, const Params&) = default;
};

/// A rational probability in [0, 1], kept in lowest terms.
class ExactProb {
 public:
  ExactProb() = default;
  /// Throws std::domain_error if value lies outside [0, 1].
  explicit ExactProb(Rational value);

  static ExactProb zero() { return ExactProb(); }
  static ExactProb one() { return ExactProb(Rational(1)); }
  /// Clamps into [0, 1] instead of throwing.
  static ExactProb clamped(const Rational& value);

  const Rational& value() const { return value_; }
  double to_double() const { return value_.get_d(); }
  ExactProb complement() const { return ExactProb(Rational(1 - value_)); }

  friend ExactProb operator*(const ExactProb& a, const ExactProb& b) {
    return ExactProb(Rational(a.value_ * b.value_));
  }
  friend bool operator==(const ExactProb& a, const ExactProb& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactProb& a,
                                          const ExactProb& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
};

/// d (d-1) ... (d-k+1); 1 for k = 0 and 0 for k > d.
BigInt falling_factorial(std::uint64_t d, std::uint64_t k);

BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt factorial(std::uint64_t n);

/// base^exp for a possibly negative base, with 0^0 = 1.
BigInt power(const BigInt& base, std::uint64_t exp);

/// Builds num/den in lowest terms. den must be nonzero.
Rational ratio(const BigInt& num, const BigInt& den);

/// Exact rational value of a finite double.
Rational from_double(double x);

/// Correctly rounded (round-half-even) decimal with sig_digits significant
/// digits. Fixed notation is used for decimal exponents in [-4, sig_digits);
/// otherwise scientific with a bare exponent ("3.072e-7"). Trailing zeros
/// are kept, so 1 at three digits renders as "1.00".
std::string to_decimal(const Rational& x, int sig_digits = 6);
std::string to_decimal(const ExactProb& x, int sig_digits = 6);

/// Parses the plain decimal or scientific strings produced by to_decimal
/// back into an exact rational.
Rational parse_decimal(const std::string& text);

}  // namespace coincidence
