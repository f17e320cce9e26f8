#include <doctest.h>

#include "conic/picard.hpp"
#include "support.hpp"

using namespace conic;
using testing_support::random_element;

namespace {

// Geometric model: l_0 is fixed, l_i goes to l_{tau(i)} or l_0 - l_{tau(i)},
// and l_{-1} is recovered from K = -2(l_{-1} + l_0) + sum l_i being fixed.
// Coordinates (l_{-1}, l_0, l_1..l_n); columns are images.
std::vector<std::vector<long long>> geometric_matrix(const SignedPerm& g) {
  const int n = g.rank(), d = n + 2;
  std::vector<std::vector<long long>> M(d, std::vector<long long>(d, 0));
  auto col = [&](int j) { return j + 1; };  // l_j, j >= -1
  M[col(0)][col(0)] = 1;
  std::vector<long long> sum(d, 0);  // image of sum l_i
  for (int i = 1; i <= n; ++i) {
    int s = g.signed_image(i), t = std::abs(s);
    if (s > 0) {
      M[col(t)][col(i)] = 1;
    } else {
      M[col(0)][col(i)] = 1;
      M[col(t)][col(i)] = -1;
    }
    for (int r = 0; r < d; ++r) sum[r] += M[r][col(i)];
  }
  // g(l_{-1}) = (g(sum) - K)/2 - l_0 with K = -2 l_{-1} - 2 l_0 + sum l_i
  std::vector<long long> K(d, 0);
  K[col(-1)] = -2;
  K[col(0)] = -2;
  for (int i = 1; i <= n; ++i) K[col(i)] = 1;
  for (int r = 0; r < d; ++r) {
    long long v = sum[r] - K[r];
    REQUIRE(v % 2 == 0);
    M[r][col(-1)] = v / 2 - (r == col(0) ? 1 : 0);
  }
  return M;
}

}  // namespace

TEST_CASE("lattice data") {
  PicLattice L = pic_lattice(4);
  CHECK(L.gram(0, 1) == 1);
  CHECK(L.gram(0, 0) == 0);
  CHECK(L.gram(2, 2) == -1);
  CHECK(L.K(0) == -2);
  CHECK(L.K(1) == -2);
  CHECK(L.K(2) == 1);
  // K^2 = 8 - n
  CHECK((L.K.transpose() * L.gram * L.K)(0, 0) == 4);
}

TEST_CASE("phi agrees with the geometric action") {
  for (int t = 0; t < 400; ++t) {
    int n = 1 + t % 9;
    SignedPerm g = random_element(n);
    IntMatrix M = phi(g);
    auto G = geometric_matrix(g);
    for (int r = 0; r < n + 2; ++r)
      for (int c = 0; c < n + 2; ++c) CHECK(M(r, c) == G[r][c]);
  }
}

TEST_CASE("phi is a homomorphism into Aut0") {
  for (int t = 0; t < 300; ++t) {
    int n = 2 + t % 8;
    SignedPerm a = random_element(n), b = random_element(n);
    CHECK(phi(a * b) == phi(a) * phi(b));
    CHECK(verify_aut0(phi(a)));
  }
  CHECK_THROWS_AS(phi(parse("c1", 3)), std::domain_error);
}

TEST_CASE("fixed lattice of the trivial and the full group") {
  for (int n = 4; n <= 6; ++n) {
    IntMatrix I = IntMatrix::Identity(n + 2, n + 2);
    CHECK(fixed_sublattice({I}, n).rank() == n + 2);
    std::vector<IntMatrix> mats{phi(parse("(1,2)", n)), phi(parse("(1,2,3,4)", n)), phi(parse("c1 c2", n))};
    for (int j = 5; j <= n; ++j) mats.push_back(phi(parse("(1," + std::to_string(j) + ")", n)));
    CHECK(fixed_sublattice(mats, n) == l0_k_lattice(n));
  }
}
