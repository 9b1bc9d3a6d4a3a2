#include "vogelcas/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace vogelcas {

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  const mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace vogelcas
