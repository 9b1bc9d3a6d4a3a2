#include "vogelcas/universal.hpp"

#include <stdexcept>

namespace vogelcas {

namespace {

void require_nonzero_t(const VogelPoint& v, const char* where) {
  if (v.t().is_zero()) throw std::domain_error(std::string(where) + ": t = 0 at " + v.str());
}

// c / (1 - a z)
RatFun geometric(const Rational& c, const Rational& a) {
  return RatFun(Poly(c), Poly{Rational(1), -a});
}

// (2t + x z)
Poly linear_factor(const Rational& two_t, const Rational& x) { return Poly{two_t, x}; }

RatFun c_tail(const VogelPoint& v, const Poly& numerator_cubic) {
  const Rational two_t = Rational(2) * v.t();
  const Poly den = linear_factor(two_t, v.alpha()) * linear_factor(two_t, v.beta()) *
                   linear_factor(two_t, v.gamma()) * Poly{2, 1} * Poly{1, 1};
  return RatFun(Poly::monomial(Rational(1), 2) * numerator_cubic, den);
}

}  // namespace

RatFun c_genfun(const VogelPoint& v, const Rational& dim) {
  require_nonzero_t(v, "c_genfun");
  const VogelInvariants inv = v.invariants();
  const Rational t3 = pow(inv.t, 3);
  const Poly cubic{Rational(96) * t3, Rational(168) * t3,
                   Rational(6) * (Rational(14) * t3 + inv.t * inv.t2 - inv.t3),
                   Rational(13) * t3 + Rational(3) * inv.t * inv.t2 - Rational(4) * inv.t3};
  return RatFun(dim) + c_tail(v, cubic) * RatFun(Rational(1, 6));
}

RatFun c_genfun(const VogelPoint& v) {
  require_nonzero_t(v, "c_genfun");
  return c_genfun(v, dim_g(v));
}

RatFun c_genfun(const AlgebraId& id) { return c_genfun(lookup(id), dimension(id)); }

RatFun c_genfun_symmetric(const VogelPoint& v) {
  require_nonzero_t(v, "c_genfun_symmetric");
  const VogelInvariants inv = v.invariants();
  const Rational t3 = pow(inv.t, 3);
  const Rational ts = inv.t * inv.s;
  const Poly cubic{Rational(16) * t3, Rational(28) * t3,
                   Rational(14) * t3 + ts - Rational(3) * inv.p,
                   Rational(2) * t3 + ts - Rational(2) * inv.p};
  return RatFun(dim_g(v)) + c_tail(v, cubic);
}

RatFun c_hat_genfun(const VogelPoint& v) {
  require_nonzero_t(v, "c_hat_genfun");
  const Rational t = v.t();
  const Rational scale = Rational(16) * t * t;
  // -2z d/dz ln(scale - a z) = 2a z / (scale - a z)
  auto term = [&scale](const Rational& a) {
    return RatFun(Poly::monomial(Rational(2) * a, 1), Poly{scale, -a});
  };
  RatFun sum;
  for (const Rational& x : v.params()) {
    const Rational shifted = Rational(2) * t - x;
    sum += term(shifted * shifted) - term(x * x);
  }
  return sum;
}

Rational c_eigen(const VogelPoint& v, std::size_t p) { return series_expand(c_genfun(v), p)[p]; }

Rational c_hat_eigen(const VogelPoint& v, std::size_t k) {
  return series_expand(c_hat_genfun(v), k)[k];
}

ClosedForms closed_forms(const VogelPoint& v) {
  require_nonzero_t(v, "closed_forms");
  const VogelInvariants inv = v.invariants();
  const Rational t3 = pow(inv.t, 3);
  const Rational tt2 = inv.t * inv.t2;
  return {(Rational(3) * tt2 - inv.t3) / (Rational(16) * t3),
          (Rational(2) * t3 + Rational(3) * tt2 - inv.t3) / (Rational(16) * t3),
          (Rational(-4) * t3 + Rational(9) * tt2 - Rational(3) * inv.t3) / (Rational(48) * t3)};
}

std::vector<Constituent> DecompositionData::constituents() const {
  return {{Rational(1), c2_singlet}, {dim_y2_alpha, c2_y2_alpha}, {dim_y2_beta, c2_y2_beta},
          {dim_y2_gamma, c2_y2_gamma}, {dim, c2_adjoint},        {dim_x2, c2_x2}};
}

namespace {

// dim Y2(x), with y and w the other two parameters.
Rational y2_dimension(const Rational& x, const Rational& y, const Rational& w, const Rational& t) {
  const Rational two_t = Rational(2) * t;
  return -((Rational(3) * x - two_t) * (y - two_t) * (w - two_t) * t * (y + t) * (w + t)) /
         (x * x * (x - y) * y * (x - w) * w);
}

}  // namespace

DecompositionData decomposition(const VogelPoint& v) {
  require_nonzero_t(v, "decomposition");
  if (v.has_zero()) throw std::domain_error("decomposition: zero parameter at " + v.str());
  if (v.has_repeated())
    throw std::domain_error("decomposition: repeated parameters at " + v.str() +
                            " (use special_genfun)");
  const Rational t = v.t();
  const auto& [a, b, c] = v.params();
  DecompositionData d;
  d.dim = dim_g(v);
  if (d.dim.is_zero()) throw std::domain_error("decomposition: dim g = 0 at " + v.str());
  d.dim_y2_alpha = y2_dimension(a, b, c, t);
  d.dim_y2_beta = y2_dimension(b, c, a, t);
  d.dim_y2_gamma = y2_dimension(c, a, b, t);
  d.dim_x2 = d.dim * (d.dim - Rational(3)) / Rational(2);
  d.c2_singlet = Rational(0);
  d.c2_y2_alpha = Rational(2) - a / t;
  d.c2_y2_beta = Rational(2) - b / t;
  d.c2_y2_gamma = Rational(2) - c / t;
  d.c2_x2 = Rational(2);
  d.c2_adjoint = Rational(1);
  return d;
}

RatFun okubo_genfun(const VogelPoint& v) {
  const DecompositionData d = decomposition(v);
  RatFun sum;
  for (const auto& part : d.constituents()) {
    if (part.dim.is_zero()) continue;
    const Rational shift = (part.c2 - Rational(2) * d.c2_adjoint) / Rational(2);
    sum += geometric(part.dim / d.dim, shift);
  }
  return sum;
}

RatFun special_genfun(SpecialAlgebra which) {
  switch (which) {
    case SpecialAlgebra::SL2:
      return geometric(Rational(5, 3), Rational(1, 2)) + geometric(1, Rational(-1, 2)) +
             geometric(Rational(1, 3), -1);
    case SpecialAlgebra::SO8:
      return RatFun(Rational(1, 28)) * (geometric(300, Rational(1, 6)) +
                                        geometric(105, Rational(-1, 3)) + geometric(1, -1)) +
             geometric(1, Rational(-1, 2)) + RatFun(Rational(25, 2));
  }
  throw std::logic_error("special_genfun: unknown case");
}

std::optional<SpecialAlgebra> special_case_of(const VogelPoint& v) {
  const VogelPoint c = canonicalize(v);
  if (c == VogelPoint(-1, 1, 1)) return SpecialAlgebra::SL2;
  if (c == VogelPoint(-1, 2, 2)) return SpecialAlgebra::SO8;
  return std::nullopt;
}

RatFun adjoint_square_genfun(const VogelPoint& v) {
  if (!v.has_repeated()) return okubo_genfun(v);
  if (auto special = special_case_of(v)) return special_genfun(*special);
  throw std::domain_error("no ad x ad decomposition for repeated parameters at " + v.str());
}

}  // namespace vogelcas
