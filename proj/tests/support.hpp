#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "conic/groups.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0xC0C1C2C3ULL);
  return g;
}

// Uniform element of W(B_n), or of W(D_n) when even is set.
inline conic::SignedPerm random_element(int n, bool even = true, std::mt19937_64& g = rng()) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), g);
  int minus = 0;
  for (int i = 0; i < n; ++i)
    if (g() & 1) {
      p[i] = -p[i];
      ++minus;
    }
  if (even && minus % 2) p[0] = -p[0];
  return conic::SignedPerm::from_signed_images(n, p);
}

inline conic::SignedPerm random_member(const conic::FiniteGroup& G, std::mt19937_64& g = rng()) {
  std::uniform_int_distribution<std::size_t> d(0, G.order() - 1);
  return G.elements()[d(g)];
}

}  // namespace testing_support
