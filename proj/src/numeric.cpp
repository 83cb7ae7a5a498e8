#include "ietlab/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace ietlab {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer: " + std::string(text));
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt l1_norm(const IntVector& v) {
  BigInt total = 0;
  for (const auto& x : v) total += abs(x);
  return total;
}

Rational l1_distance(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("l1_distance: size mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += abs(a[i] - b[i]);
  return total;
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

long double ln(const BigInt& value) {
  if (value <= 0) throw std::domain_error("ln of non-positive integer");
  const std::size_t bits = bit_length(value);
  if (bits <= 64) {
    std::uint64_t small = 0;
    mpz_export(&small, nullptr, -1, sizeof(small), 0, 0, value.get_mpz_t());
    return std::log(static_cast<long double>(small));
  }
  BigInt top = value >> static_cast<mp_bitcnt_t>(bits - 64);
  std::uint64_t mantissa = 0;
  mpz_export(&mantissa, nullptr, -1, sizeof(mantissa), 0, 0, top.get_mpz_t());
  return std::log(static_cast<long double>(mantissa)) +
         static_cast<long double>(bits - 64) * std::numbers::ln2_v<long double>;
}

long double ln(const Rational& value) {
  if (value <= 0) throw std::domain_error("ln of non-positive rational");
  return ln(BigInt(value.get_num())) - ln(BigInt(value.get_den()));
}

std::string format_decimal(long double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", static_cast<double>(value));
  return buf;
}

}  // namespace ietlab
