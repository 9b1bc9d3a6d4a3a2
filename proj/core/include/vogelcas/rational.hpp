#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vogelcas {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const mpz_class& value) : value_(value) {}  // NOLINT
  explicit Rational(const mpq_class& value);
  /// Throws std::domain_error on a zero denominator.
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den);

  /// Parses "p", "-p", "p/q" (q nonzero). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Integer power; negative exponents invert (zero base then throws).
Rational pow(const Rational& base, int exponent);
Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace vogelcas
