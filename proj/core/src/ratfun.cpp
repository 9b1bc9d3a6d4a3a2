#include "vogelcas/ratfun.hpp"

#include <stdexcept>

namespace vogelcas {

RatFun::RatFun(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  const Rational inv = Rational(1) / den_.lead();
  num_ *= inv;
  den_ *= inv;
}

RatFun normalize(const Poly& num, const Poly& den) { return RatFun(num, den); }

bool equal(const RatFun& a, const RatFun& b) { return a.num() * b.den() == b.num() * a.den(); }

Rational RatFun::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFun: evaluation at a pole");
  return num_.eval(x) / d;
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::rescale(const Rational& c) const {
  auto subst = [&c](const Poly& p) {
    std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
    Rational power(1);
    for (auto& x : out) {
      x *= power;
      power *= c;
    }
    return Poly(std::move(out));
  };
  return RatFun(subst(num_), subst(den_));
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) return *this = RatFun(num_ + o.num_, den_);
  return *this = RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun& RatFun::operator-=(const RatFun& o) {
  if (den_ == o.den_) return *this = RatFun(num_ - o.num_, den_);
  return *this = RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun& RatFun::operator*=(const RatFun& o) {
  return *this = RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("RatFun: division by the zero function");
  return *this = RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RatFun::str(std::string_view var) const {
  if (den_ == Poly(1)) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::vector<Rational> series_expand(const RatFun& f, std::size_t order) {
  const Poly& num = f.num();
  const Poly& den = f.den();
  const Rational d0 = den[0];
  if (d0.is_zero()) throw std::domain_error("series_expand: pole at z = 0");
  // den * out = num, solved term by term.
  std::vector<Rational> out(order + 1);
  const auto dlen = den.coeffs().size();
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = num[k];
    for (std::size_t j = 1; j < dlen && j <= k; ++j) acc -= den.coeffs()[j] * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

Rational limit_at_infinity(const RatFun& f) {
  if (f.num().degree() > f.den().degree())
    throw std::domain_error("limit_at_infinity: rational function diverges");
  if (f.num().degree() < f.den().degree()) return Rational(0);
  return f.num().lead() / f.den().lead();
}

RatFun log_derivative_series(const RatFun& f) {
  if (f.is_zero()) throw std::domain_error("log_derivative_series: log of zero");
  // f'/f = (num'·den - num·den') / (num·den)
  const RatFun ratio(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
                     f.num() * f.den());
  return RatFun(Poly::monomial(Rational(-2), 1)) * ratio;
}

}  // namespace vogelcas
