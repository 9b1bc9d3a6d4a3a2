#include "vogelcas/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vogelcas {

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Poly::lead() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("monic: zero polynomial");
  Poly out = *this;
  const Rational inv = Rational(1) / lead();
  out *= inv;
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) {
      os << mag.str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly{}, rem};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lead = Rational(1) / b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Rational c = rem.lead() * inv_lead;
    quot[shift] = c;
    rem -= Poly::monomial(c, shift) * b;
  }
  return {Poly(std::move(quot)), rem};
}

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim(p);
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Scales by the lcm of the denominators and removes the content.
IntPoly to_primitive_integer(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
  make_primitive(out);
  return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[z].
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both polynomials are zero");
  IntPoly x = to_primitive_integer(a);
  IntPoly y = to_primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(x.size());
  for (const auto& c : x) coeffs.emplace_back(c);
  return Poly(std::move(coeffs)).monic();
}

Poly product(std::span<const Poly> factors) {
  Poly out(1);
  for (const auto& f : factors) out *= f;
  return out;
}

}  // namespace vogelcas
