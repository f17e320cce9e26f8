#pragma once

// Picard lattice of a conic bundle with n degenerate fibres.  Coordinates are
// ordered (l_{-1}, l_0, l_1, ..., l_n); matrices act on coordinate columns.
// The block formulas make sense for any n >= 1, though the geometric reading
// needs n >= 4.

#include <vector>

#include "conic/intlinalg.hpp"
#include "conic/signed_perm.hpp"

namespace conic {

struct PicLattice {
  int n = 0;
  IntMatrix gram;
  IntVector K;
  IntVector l0;
};

PicLattice pic_lattice(int n);

// Column j holds ±e_{τ(j)}; the lower-right block of phi().
IntMatrix psi(const SignedPerm& a);

// Throws std::domain_error for elements outside W(D_n).
IntMatrix phi(const SignedPerm& a);

// Saturated basis of the vectors fixed by every matrix; mats must share a size.
LatticeBasis<BigInt> fixed_sublattice(const std::vector<IntMatrix>& mats, int n);

bool verify_aut0(const IntMatrix& M);

// ℤ l_0 ⊕ ℤ K
LatticeBasis<BigInt> l0_k_lattice(int n);

}  // namespace conic
