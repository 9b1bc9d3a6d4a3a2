#pragma once

#include <span>
#include <vector>

#include "vogelcas/rational.hpp"
#include "vogelcas/vogel.hpp"

namespace vogelcas {

using Vec = std::vector<Rational>;

/// A reduced root system in explicit ambient coordinates, with the
/// Bourbaki positive system, highest root theta, Weyl vector rho, and the
/// minimal invariant form B(x, y) = scale · (x · y), normalized so that
/// B(theta, theta) = 2.
class RootSystem {
 public:
  /// Standard realization of a simple type (super ids are rejected with
  /// std::invalid_argument).
  static RootSystem build(const AlgebraId& id);

  const AlgebraId& id() const { return id_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return simple_roots_.size(); }

  std::span<const Vec> roots() const { return roots_; }
  std::span<const Vec> positive_roots() const { return positive_; }
  std::span<const Vec> simple_roots() const { return simple_roots_; }
  const Vec& theta() const { return theta_; }
  const Vec& rho() const { return rho_; }
  const Rational& scale() const { return scale_; }

  /// Coefficients of a root in the basis of simple roots.
  Vec simple_coordinates(const Vec& x) const;

  /// Minimal form. Throws std::invalid_argument on a dimension mismatch.
  Rational b_form(const Vec& x, const Vec& y) const;

  /// 1 + B(rho, theta).
  Rational dual_coxeter() const;

  /// Weyl dimension formula at the adjoint highest weight:
  /// prod over positive mu of B(theta + rho, mu) / B(rho, mu).
  Rational weyl_adjoint_dim() const;

 private:
  RootSystem(AlgebraId id, std::size_t ambient_dim, std::vector<Vec> roots,
             std::vector<Vec> simple_roots);

  AlgebraId id_;
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> roots_;
  std::vector<Vec> positive_;
  std::vector<Vec> simple_roots_;
  std::vector<Vec> gram_inverse_;
  Vec theta_;
  Vec rho_;
  Rational scale_;
};

Rational dot(const Vec& x, const Vec& y);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x);

}  // namespace vogelcas
