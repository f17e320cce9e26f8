#include "conic/picard.hpp"

#include <cstdlib>
#include <stdexcept>

namespace conic {

PicLattice pic_lattice(int n) {
  if (n < 1) throw std::invalid_argument("pic_lattice: n must be positive");
  const Index d = n + 2;
  PicLattice L;
  L.n = n;
  L.gram = IntMatrix::Zero(d, d);
  L.gram(0, 1) = 1;
  L.gram(1, 0) = 1;
  for (Index i = 2; i < d; ++i) L.gram(i, i) = -1;
  L.K = IntVector::Ones(d);
  L.K[0] = -2;
  L.K[1] = -2;
  L.l0 = IntVector::Zero(d);
  L.l0[1] = 1;
  return L;
}

IntMatrix psi(const SignedPerm& a) {
  const int n = a.rank();
  IntMatrix P = IntMatrix::Zero(n, n);
  for (int i = 1; i <= n; ++i) {
    int x = a.signed_image(i);
    P(std::abs(x) - 1, i - 1) = x < 0 ? -1 : 1;
  }
  return P;
}

// l_i ↦ l_j when i goes to j^+, l_i ↦ l_0 - l_j when i goes to j^-;
// l_{-1} ↦ l_{-1} + (t/2) l_0 - Σ_{j flipped} l_j keeps K fixed.
IntMatrix phi(const SignedPerm& a) {
  if (sigma(a) != 1) throw std::domain_error("phi: element is not in W(D_n)");
  const int n = a.rank();
  const Index d = n + 2;
  IntMatrix M = IntMatrix::Zero(d, d);
  M(0, 0) = 1;
  M(1, 1) = 1;
  M(1, 0) = a.minus_count() / 2;
  for (int i = 1; i <= n; ++i) {
    int x = a.signed_image(i);
    Index j = std::abs(x) + 1;
    if (x > 0) {
      M(j, i + 1) = 1;
    } else {
      M(j, i + 1) = -1;
      M(1, i + 1) = 1;
      M(j, 0) = -1;
    }
  }
  return M;
}

LatticeBasis<BigInt> fixed_sublattice(const std::vector<IntMatrix>& mats, int n) {
  const Index d = n + 2;
  IntMatrix A(0, d);
  for (const auto& M : mats) {
    if (M.rows() != d || M.cols() != d) throw std::invalid_argument("fixed_sublattice: rank mismatch");
    IntMatrix D = M - IntMatrix::Identity(d, d);
    IntMatrix B(A.rows() + d, d);
    B << A, D;
    A = hermite_normal_form(B);
  }
  if (A.rows() == 0) return LatticeBasis<BigInt>::full(d);
  return integer_kernel(A);
}

bool verify_aut0(const IntMatrix& M) {
  if (M.rows() != M.cols() || M.rows() < 3) return false;
  const PicLattice L = pic_lattice(static_cast<int>(M.rows()) - 2);
  return IntMatrix(M.transpose() * L.gram * M) == L.gram && IntVector(M * L.K) == L.K;
}

LatticeBasis<BigInt> l0_k_lattice(int n) {
  const PicLattice L = pic_lattice(n);
  return LatticeBasis<BigInt>::from_vectors(n + 2, {L.l0, L.K});
}

}  // namespace conic
