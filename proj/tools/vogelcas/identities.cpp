#include "vogelcas/identities.hpp"

#include <string>

namespace vogelcas::cli {

OrthogonalLine orthogonal_line() {
  const Poly alpha(-2), beta(4), gamma{Rational(-4), Rational(1)};
  const auto cube = [](const Poly& p) { return p * p * p; };
  return {alpha + beta + gamma, alpha * alpha + beta * beta + gamma * gamma,
          cube(alpha) + cube(beta) + cube(gamma)};
}

namespace {

Check poly_check(std::string name, const Poly& lhs, const Poly& rhs) {
  return {std::move(name), lhs == rhs, lhs.str("n"), rhs.str("n")};
}

Check pointwise_check(std::string name, const Poly& lhs, const Poly& rhs) {
  std::string l, r;
  bool ok = true;
  for (long n = 5; n <= 12; ++n) {
    const Rational a = lhs.eval(Rational(n)), b = rhs.eval(Rational(n));
    ok = ok && a == b;
    l += (l.empty() ? "" : " ") + a.str();
    r += (r.empty() ? "" : " ") + b.str();
  }
  return {std::move(name), ok, l, r};
}

}  // namespace

std::vector<Check> so_n_identities() {
  const auto [t, t2, t3] = orthogonal_line();
  const Poly n = Poly::z();
  const Poly t2_expected{Rational(36), Rational(-8), Rational(1)};
  const Poly t3_expected{Rational(-8), Rational(48), Rational(-12), Rational(1)};
  // (3 t t2 - t3) / 2, the quartic numerator up to the 8 vs 16t^3 normalization.
  const Poly quartic = (Rational(3) * t * t2 - t3) * Rational(1, 2);
  const Poly quartic_expected{Rational(-104), Rational(54), Rational(-9), Rational(1)};
  const Poly symmetric = Rational(9) * t * t2 - Rational(3) * t3 - Rational(4) * t * t * t;
  const Poly symmetric_expected =
      Rational(2) * Poly{Rational(-296), Rational(138), Rational(-15), Rational(1)};

  std::vector<Check> out;
  out.push_back(poly_check("so_n_t", t, n - Poly(2)));
  out.push_back(poly_check("so_n_t2", t2, t2_expected));
  out.push_back(poly_check("so_n_t3", t3, t3_expected));
  out.push_back(poly_check("so_n_quartic", quartic, quartic_expected));
  out.push_back(poly_check("so_n_symmetric_quartic", symmetric, symmetric_expected));
  out.push_back(pointwise_check("so_n_quartic_points", quartic, quartic_expected));
  out.push_back(pointwise_check("so_n_symmetric_quartic_points", symmetric, symmetric_expected));
  return out;
}

}  // namespace vogelcas::cli
