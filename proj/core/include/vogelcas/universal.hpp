#pragma once

#include <optional>
#include <vector>

#include "vogelcas/ratfun.hpp"
#include "vogelcas/rational.hpp"
#include "vogelcas/vogel.hpp"

namespace vogelcas {

/// Generating function C(z) = sum_p C_p z^p of the trace-tensor Casimir
/// eigenvalues in the adjoint representation. The constant term is the
/// dimension. Throws std::domain_error when t = 0 or a parameter is zero.
RatFun c_genfun(const VogelPoint& v);
/// Same, with the constant term supplied by the caller. Only t != 0 is
/// required.
RatFun c_genfun(const VogelPoint& v, const Rational& dim);
/// Same, with the dimension taken along the algebra's family line.
RatFun c_genfun(const AlgebraId& id);

/// C(z) written through s and p instead of the power sums t2 and t3.
RatFun c_genfun_symmetric(const VogelPoint& v);

/// Generating function sum_k Ĉ_{2k} z^k of the Killing-form Casimir
/// eigenvalues: the logarithmic derivative -2z d/dz ln of
///   prod_x (16t^2 - (2t-x)^2 z) / (16t^2 - x^2 z),
/// assembled term by term. Throws std::domain_error when t = 0.
RatFun c_hat_genfun(const VogelPoint& v);

/// Coefficient of z^p in c_genfun(v).
Rational c_eigen(const VogelPoint& v, std::size_t p);
/// Coefficient of z^k in c_hat_genfun(v), i.e. Ĉ_{2k}.
Rational c_hat_eigen(const VogelPoint& v, std::size_t k);

struct ClosedForms {
  Rational c4;      // (3 t t2 - t3) / 16t^3
  Rational c_hat4;  // (2t^3 + 3 t t2 - t3) / 16t^3
  Rational c4_sym;  // (-4t^3 + 9 t t2 - 3 t3) / 48t^3
};

/// Quartic eigenvalues in closed form. Throws std::domain_error when t = 0.
ClosedForms closed_forms(const VogelPoint& v);

/// An irreducible constituent of ad ⊗ ad with its quadratic Casimir value
/// (adjoint normalized to 1).
struct Constituent {
  Rational dim;
  Rational c2;
};

/// Symmetric and antisymmetric squares of the adjoint representation.
struct DecompositionData {
  Rational dim;  // dim g
  Rational dim_y2_alpha, dim_y2_beta, dim_y2_gamma;
  Rational dim_x2;
  Rational c2_singlet, c2_y2_alpha, c2_y2_beta, c2_y2_gamma, c2_x2, c2_adjoint;

  /// singlet, Y2(alpha), Y2(beta), Y2(gamma), adjoint, X2.
  std::vector<Constituent> constituents() const;
};

/// Throws std::domain_error when parameters repeat or vanish, t = 0, or dim g = 0.
DecompositionData decomposition(const VogelPoint& v);

/// C(z) assembled from the decomposition of ad ⊗ ad:
///   sum_V (dim V / dim g) / (1 - (C2(V) - 2)/2 · z).
/// Throws std::domain_error under the same conditions as decomposition.
RatFun okubo_genfun(const VogelPoint& v);

enum class SpecialAlgebra { SL2, SO8 };

/// The explicit ad ⊗ ad assemblies for sl2 and so8, where two parameters
/// coincide and the generic decomposition degenerates.
RatFun special_genfun(SpecialAlgebra which);

/// sl2 or so8 when v is projectively equivalent to their points.
std::optional<SpecialAlgebra> special_case_of(const VogelPoint& v);

/// okubo_genfun for pairwise-distinct points, special_genfun for the sl2 and
/// so8 points; throws std::domain_error for any other repeated point.
RatFun adjoint_square_genfun(const VogelPoint& v);

}  // namespace vogelcas
