#include "coincidence/exact.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace coincidence {

void Params::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
}

ExactProb::ExactProb(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1) {
    throw std::domain_error("probability outside [0, 1]: " +
                            value_.get_str());
  }
}

ExactProb ExactProb::clamped(const Rational& value) {
  if (value < 0) return zero();
  if (value > 1) return one();
  return ExactProb(value);
}

BigInt falling_factorial(std::uint64_t d, std::uint64_t k) {
  if (k > d) return 0;
  BigInt out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= static_cast<unsigned long>(d - i);
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt power(const BigInt& base, std::uint64_t exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value");
  return Rational(x);
}

namespace {

BigInt pow10(std::uint64_t e) { return power(BigInt(10), e); }

Rational pow10_signed(long e) {
  if (e >= 0) return Rational(pow10(static_cast<std::uint64_t>(e)));
  return ratio(1, pow10(static_cast<std::uint64_t>(-e)));
}

BigInt floor_of(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt round_half_even(const Rational& x) {
  BigInt q = floor_of(x);
  const Rational rem = x - Rational(q);
  const int c = cmp(rem, Rational(1, 2));
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

// floor(log10(x)) for x > 0.
long decimal_exponent(const Rational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  while (pow10_signed(e) > x) --e;
  while (pow10_signed(e + 1) <= x) ++e;
  return e;
}

}  // namespace

std::string to_decimal(const Rational& x, int sig_digits) {
  if (sig_digits < 1) throw std::invalid_argument("sig_digits must be >= 1");
  const auto sig = static_cast<long>(sig_digits);
  if (x == 0) {
    return sig == 1 ? std::string("0") : "0." + std::string(sig - 1, '0');
  }
  Rational mag = abs(x);
  long e = decimal_exponent(mag);
  BigInt m = round_half_even(mag * pow10_signed(sig - 1 - e));
  if (m == pow10(static_cast<std::uint64_t>(sig))) {
    m /= 10;
    ++e;
  }
  const std::string digits = m.get_str();

  std::string out = x < 0 ? "-" : "";
  if (e >= -4 && e < sig) {
    if (e >= 0) {
      out += digits.substr(0, static_cast<std::size_t>(e + 1));
      if (e + 1 < sig) out += "." + digits.substr(static_cast<std::size_t>(e + 1));
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (sig > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  }
  return out;
}

std::string to_decimal(const ExactProb& x, int sig_digits) {
  return to_decimal(x.value(), sig_digits);
}

Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a decimal: " + text);
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') {
      throw std::invalid_argument("not a decimal: " + text);
    }
    const std::string exponent = text.substr(i + 1);
    std::size_t used = 0;
    const long e = std::stol(exponent, &used);
    if (used != exponent.size()) {
      throw std::invalid_argument("not a decimal: " + text);
    }
    scale += e;
  }
  Rational out = Rational(BigInt(digits, 10)) * pow10_signed(scale);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace coincidence
