#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vogelcas/poly.hpp"
#include "vogelcas/rational.hpp"

namespace vogelcas {

/// Ratio of two polynomials kept in canonical form: numerator and
/// denominator share no non-constant factor and the denominator is monic.
/// Two RatFuns are equal as functions iff they are structurally equal.
class RatFun {
 public:
  /// The zero function.
  RatFun() : den_(1) {}
  RatFun(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(int c) : RatFun(Rational(c)) {}               // NOLINT
  RatFun(Poly p) : num_(std::move(p)), den_(1) {}      // NOLINT
  /// Cancels the gcd and makes the denominator monic. Throws
  /// std::domain_error when den is zero.
  RatFun(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Value at a point. Throws std::domain_error at a pole.
  Rational eval(const Rational& x) const;
  RatFun derivative() const;
  /// f(c·z).
  RatFun rescale(const Rational& c) const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  /// Throws std::domain_error when o is the zero function.
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;

  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  /// "(num)/(den)", or just the numerator when the denominator is 1.
  std::string str(std::string_view var = "z") const;

 private:
  Poly num_;
  Poly den_;
};

/// Builds the canonical form of num/den.
RatFun normalize(const Poly& num, const Poly& den);

/// Cross-multiplication equality; agrees with operator== on canonical inputs.
bool equal(const RatFun& a, const RatFun& b);

/// Maclaurin coefficients of f for z^0..z^order. Throws std::domain_error
/// when f has a pole at the origin.
std::vector<Rational> series_expand(const RatFun& f, std::size_t order);

/// Limit as z -> infinity. Throws std::domain_error when the numerator
/// degree exceeds the denominator degree.
Rational limit_at_infinity(const RatFun& f);

/// -2z d/dz ln f, as a rational function.
RatFun log_derivative_series(const RatFun& f);

}  // namespace vogelcas
