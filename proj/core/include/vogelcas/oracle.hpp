#pragma once

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "vogelcas/ratfun.hpp"
#include "vogelcas/rational.hpp"
#include "vogelcas/rootsys.hpp"
#include "vogelcas/vogel.hpp"

namespace vogelcas {

/// sum over all roots mu of <theta+rho, mu>^power - <rho, mu>^power, with
/// the Killing-induced form <x, y> = B(x, y) / (2 h_dual).
Rational root_power_sum(const RootSystem& rs, int power);

/// Ĉ_{2k} from root data.
Rational c_hat_root(const RootSystem& rs, int k);

/// prod over positive mu of (1 - B(theta+rho, mu)^2 z) / (1 - B(rho, mu)^2 z),
/// with equal linear factors cancelled before multiplying.
RatFun f_b_product(const RootSystem& rs);

/// prod over x in (alpha, beta, gamma) of (4 - (2t-x)^2 z) / (4 - x^2 z).
RatFun f_b_universal(const VogelPoint& v);

bool check_prop1(const RootSystem& rs, const VogelPoint& v);

struct LemmaSides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of the product identity for phi(x) = x^m:
///   prod over positive mu of phi(B(mu, theta+rho)) / phi(B(mu, rho))
///   = prod over x of phi((x - 2t)/2) / phi(x/2).
/// Throws std::domain_error if a parameter of v vanishes.
LemmaSides lemma_ratio(const RootSystem& rs, const VogelPoint& v, int m);

/// c_hat_root(rs, k) == c_hat_eigen(v, k) for k = 1..max_k.
bool check_thm2(const RootSystem& rs, const VogelPoint& v, int max_k);

/// c_genfun(v) == adjoint_square_genfun(v). Throws std::domain_error for
/// repeated points other than sl2 and so8.
bool check_thm1(const VogelPoint& v);

struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  AlgebraId algebra;
  VogelPoint vogel;
  std::vector<Check> checks;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const;
  /// nullptr when no check has that name.
  const Check* find(std::string_view name) const;
};

/// Runs every applicable check for id against its catalog point.
VerificationReport verify_algebra(const AlgebraId& id, int max_k = 6);
/// Same, against an arbitrary Vogel point (used for negative controls).
VerificationReport verify_algebra(const AlgebraId& id, const VogelPoint& v, int max_k);

/// Reports in suite order; work is spread over up to `workers` threads
/// (0 picks the hardware concurrency).
std::vector<VerificationReport> verify_all(std::span<const AlgebraId> suite, int max_k = 6,
                                           unsigned workers = 0);

}  // namespace vogelcas
