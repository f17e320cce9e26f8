#include <doctest.h>

#include <numeric>
#include <random>

#include "conic/intlinalg.hpp"

using namespace conic;

namespace {

long long det(std::vector<std::vector<long long>> a) {
  // fraction-free (Bareiss)
  const std::size_t k = a.size();
  long long prev = 1;
  int sign = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i][i] == 0) {
      std::size_t r = i + 1;
      while (r < k && a[r][i] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[i], a[r]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r)
      for (std::size_t c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
    prev = a[i][i];
  }
  return sign * a[k - 1][k - 1];
}

// gcd of all k x k minors
long long determinantal_divisor(const std::vector<std::vector<long long>>& A, std::size_t k) {
  const std::size_t r = A.size(), c = A[0].size();
  long long g = 0;
  std::vector<int> rs(r), cs(c);
  auto choose = [](std::size_t n, std::size_t k, auto&& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      f(idx);
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) return;
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  choose(r, k, [&](const std::vector<std::size_t>& ri) {
    choose(c, k, [&](const std::vector<std::size_t>& ci) {
      std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) m[a][b] = A[ri[a]][ci[b]];
      g = std::gcd(g, det(m));
    });
  });
  return g;
}

IntMatrix to_int(const std::vector<std::vector<long long>>& A) {
  IntMatrix M(A.size(), A[0].size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[0].size(); ++j) M(i, j) = A[i][j];
  return M;
}

}  // namespace

TEST_CASE("smith form of a fixed matrix") {
  IntMatrix A = to_int({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto F = smith_normal_form(A);
  auto d = F.diagonal();
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
  CHECK(F.U * A * F.V == F.S);
}

TEST_CASE("smith diagonal matches determinantal divisors") {
  std::mt19937_64 g(7);
  std::uniform_int_distribution<int> e(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = dim(g), c = dim(g);
    std::vector<std::vector<long long>> A(r, std::vector<long long>(c));
    for (auto& row : A)
      for (auto& x : row) x = e(g);
    auto F = smith_normal_form(to_int(A));
    REQUIRE(F.U * to_int(A) * F.V == F.S);
    long long prev = 1;
    auto d = F.diagonal();
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      long long dk = determinantal_divisor(A, k);
      if (dk == 0) {
        CHECK(d[k - 1] == 0);
        continue;
      }
      CHECK(abs_value(d[k - 1]) == BigInt(dk / prev));
      prev = dk;
    }
  }
}

TEST_CASE("hermite rank and kernel") {
  IntMatrix A = to_int({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  CHECK(integer_rank(A) == 2);
  auto K = integer_kernel(A);
  CHECK(K.rank() == 2);
  CHECK((A * K.basis().transpose()).isZero());
  // saturated: the kernel of 2x = 0 in Z is 0, of (2, 4) is (2,-1)
  auto K2 = integer_kernel(to_int({{2, 4}}));
  REQUIRE(K2.rank() == 1);
  CHECK(abs_value(K2.basis()(0, 0)) == 2);
  CHECK(abs_value(K2.basis()(0, 1)) == 1);
}

TEST_CASE("lattice membership and quotient") {
  IntVector a(2), b(2), v(2), w(2);
  a << 2, 0;
  b << 0, 3;
  v << 4, 9;
  w << 1, 0;
  auto B = LatticeBasis<BigInt>::from_vectors(2, {a, b});
  CHECK(lattice_member(B, v).has_value());
  CHECK_FALSE(lattice_member(B, w).has_value());
  auto Q = quotient_invariants(LatticeBasis<BigInt>::full(2), B);
  CHECK(Q.free_rank == 0);
  REQUIRE(Q.torsion.size() == 1);
  CHECK(Q.torsion[0] == 6);
}
