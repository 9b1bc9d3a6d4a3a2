#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vogelcas/poly.hpp"
#include "vogelcas/ratfun.hpp"
#include "vogelcas/rational.hpp"

namespace vogelcas {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8, SLSuper, OSPSuper };

/// Names a simple Lie algebra (family + rank) or a basic classical Lie
/// superalgebra sl(m|n) / osp(p|q).
struct AlgebraId {
  Family family = Family::A;
  int rank = 1;
  // (m, n) for sl(m|n), (p, q) for osp(p|q); unused otherwise.
  int first = 0;
  int second = 0;

  static AlgebraId simple(Family f, int rank);
  static AlgebraId sl_super(int m, int n);
  static AlgebraId osp_super(int p, int q);

  /// Accepts "A3", "e8", "G2", "sl(4|2)", "osp(7,2)". Throws
  /// std::invalid_argument on anything else, including invalid ranks.
  static AlgebraId parse(std::string_view text);

  bool is_super() const { return family == Family::SLSuper || family == Family::OSPSuper; }
  bool is_exceptional() const;
  /// Throws std::invalid_argument when the rank or super pair is outside
  /// the admissible range.
  void validate() const;
  std::string label() const;

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

/// Symmetric functions of a Vogel triple.
struct VogelInvariants {
  Rational t;   // alpha + beta + gamma
  Rational t2;  // power sum of squares
  Rational t3;  // power sum of cubes
  Rational s;   // second elementary symmetric function
  Rational p;   // product
};

/// A point (alpha, beta, gamma) of the projective plane; not all zero.
class VogelPoint {
 public:
  /// Throws std::invalid_argument when all three are zero.
  VogelPoint(Rational alpha, Rational beta, Rational gamma);

  /// Parses "a,b,c" with rational entries such as "-2,10/3,8/3".
  static VogelPoint parse(std::string_view text);

  const Rational& alpha() const { return params_[0]; }
  const Rational& beta() const { return params_[1]; }
  const Rational& gamma() const { return params_[2]; }
  const std::array<Rational, 3>& params() const { return params_; }

  Rational t() const { return params_[0] + params_[1] + params_[2]; }
  VogelInvariants invariants() const;
  bool has_repeated() const;
  bool has_zero() const;

  VogelPoint scaled(const Rational& lambda) const;
  /// Reorders the parameters; perm must be a permutation of {0, 1, 2}.
  VogelPoint permuted(const std::array<int, 3>& perm) const;

  /// "(a, b, c)".
  std::string str() const;

  friend bool operator==(const VogelPoint&, const VogelPoint&) = default;

 private:
  std::array<Rational, 3> params_;
};

/// Table row for the given algebra. Throws std::invalid_argument for
/// excluded or malformed ids.
VogelPoint lookup(const AlgebraId& id);

/// Primitive integer representative, sign-fixed (t > 0; for t = 0 the
/// lexicographically larger of the two sorted sign choices), sorted
/// ascending. Throws on the all-zero triple.
VogelPoint canonicalize(const VogelPoint& v);

bool equivalent(const VogelPoint& a, const VogelPoint& b);

/// (alpha-2t)(beta-2t)(gamma-2t) / (alpha beta gamma). Throws
/// std::domain_error when a parameter is zero.
Rational dim_g(const VogelPoint& v);

/// A family of Vogel points linear in one integer parameter, e.g. A_n is
/// (-2, 2, n+1) in the variable n.
struct FamilyLine {
  std::string variable;
  Poly alpha, beta, gamma;

  VogelPoint at(const Rational& x) const;
  /// The dimension formula as a rational function of the family variable.
  RatFun dimension() const;
};

FamilyLine family_line(Family f);
/// Value of the family variable for id: the rank, m-n, or p-q.
Rational family_parameter(const AlgebraId& id);

/// Dimension of the algebra (superdimension for super ids). Evaluates the
/// dimension formula along the family line, so it stays finite where a
/// single parameter vanishes but the family formula cancels, e.g. osp(p|q)
/// with p-q = 4.
Rational dimension(const AlgebraId& id);

enum class RowStatus { Ok, Alias, Excluded };

/// One row of a rendered parameter table. Entries are exact strings: either
/// rationals or polynomials in the family variable.
struct CatalogRow {
  std::string family;
  std::string alpha, beta, gamma, t;
  std::optional<std::string> dim;
  RowStatus status = RowStatus::Ok;
  std::string note;
};

/// Rows of the simple Lie algebra table, one per family.
std::vector<CatalogRow> simple_catalog();
/// Rows of the basic classical Lie superalgebra table.
std::vector<CatalogRow> super_catalog();

/// A1-A8, B2-B8, C2-C8, D4-D8, G2, F4, E6, E7, E8.
std::vector<AlgebraId> default_suite();

}  // namespace vogelcas
