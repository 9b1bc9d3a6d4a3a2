#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vogelcas/rational.hpp"

namespace vogelcas {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of z^i; the highest stored coefficient is never zero, so the
/// zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  /// The monomial c·z^k.
  static Poly monomial(Rational c, std::size_t k);
  /// The variable z.
  static Poly z() { return monomial(Rational(1), 1); }

  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^i (zero beyond the degree).
  Rational operator[](std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational lead() const;
  Rational eval(const Rational& x) const;

  /// Divides every coefficient by the leading one. Throws on zero.
  Poly monic() const;
  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Renders as a sum of terms in the given variable, highest degree first,
  /// e.g. "64*z^2 - 20*z + 1".
  std::string str(std::string_view var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division over Q. Throws
/// std::domain_error when the divisor is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor. The zero polynomial is never returned;
/// throws std::domain_error when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Product of all polynomials in the list (1 for an empty list).
Poly product(std::span<const Poly> factors);

}  // namespace vogelcas
