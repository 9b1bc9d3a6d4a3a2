#pragma once

#include <vector>

#include "vogelcas/oracle.hpp"
#include "vogelcas/poly.hpp"

namespace vogelcas::cli {

/// Power sums of the so(n) line alpha = -2, beta = 4, gamma = n - 4 as
/// polynomials in n.
struct OrthogonalLine {
  Poly t, t2, t3;
};
OrthogonalLine orthogonal_line();

/// Quartic Casimir identities along so(n), checked both as polynomial
/// identities in n and by evaluation at n = 5..12.
std::vector<Check> so_n_identities();

}  // namespace vogelcas::cli
