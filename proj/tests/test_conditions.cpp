#include <doctest.h>

#include "conic/cohomology.hpp"
#include "conic/conditions.hpp"
#include "support.hpp"

using namespace conic;
using testing_support::random_element;

namespace {

FiniteGroup gen(int n, std::initializer_list<const char*> gs) {
  std::vector<SignedPerm> v;
  for (auto s : gs) v.push_back(parse(s, n));
  return closure(n, v);
}

}  // namespace

TEST_CASE("orbits and the fibre-pair condition") {
  FiniteGroup G = gen(4, {"c1 c2 (1,2)", "(3,4)"});
  auto o = orbits(G);
  CHECK(o.orbits == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(o.pair_orbits.size() == 4);  // {1+,2-} {1-,2+} {3+,4+} {3-,4-}
  CHECK_FALSE(fiber_pair_condition(G));
  CHECK(fiber_pair_condition(gen(4, {"c1 c2", "c3 c4"})));
  CHECK_FALSE(fiber_pair_condition(gen(4, {"(1,2)(3,4)"})));
}

TEST_CASE("relative minimality matches the fibre-pair condition") {
  for (int t = 0; t < 300; ++t) {
    int n = 4 + t % 4;
    std::vector<SignedPerm> g{random_element(n)};
    if (t % 2) g.push_back(random_element(n));
    try {
      FiniteGroup G = closure(n, g, 5000);
      CHECK(relative_minimality(G) == fiber_pair_condition(G));
    } catch (const BoundExceeded&) {
    }
  }
}

TEST_CASE("projection onto an orbit") {
  // S_3 on {1,2,3} and {4,5,6}; one generator is odd on each block
  FiniteGroup G = gen(6, {"(1,2,3)(4,5,6)", "c1 c2 c3 c4 c5 c6 (2,3)(5,6)"});
  auto o = orbits(G);
  REQUIRE(o.orbits.size() == 2);
  ProjectedGroup P = project(G, o.orbits[0]);
  CHECK(P.orbit == std::vector<int>{1, 2, 3});
  CHECK(P.appended_flag);
  CHECK(P.target_rank == 4);
  CHECK(P.group.order() == 6);
  CHECK_THROWS(project(G, {1, 2}));
}

TEST_CASE("projection is a surjective image") {
  for (int t = 0; t < 60; ++t) {
    int n = 4 + t % 3;
    FiniteGroup G;
    try {
      G = closure(n, {random_element(n), random_element(n)}, 3000);
    } catch (const BoundExceeded&) {
      continue;
    }
    for (const auto& orb : orbits(G).orbits) {
      ProjectedGroup P = project(G, orb);
      CHECK(G.order() % P.group.order() == 0);
      CHECK(P.target_rank == static_cast<int>(orb.size()) + (P.appended_flag ? 1 : 0));
      // restriction of each element, checked on symbols
      for (const auto& g : G.generators()) {
        bool found = false;
        for (const auto& h : P.group.elements()) {
          bool same = true;
          for (std::size_t k = 0; k < orb.size() && same; ++k) {
            int s = g.signed_image(orb[k]);
            auto pos = std::find(orb.begin(), orb.end(), std::abs(s)) - orb.begin();
            int want = (s < 0 ? -1 : 1) * static_cast<int>(pos + 1);
            same = h.signed_image(static_cast<int>(k) + 1) == want;
          }
          found |= same;
        }
        CHECK(found);
      }
    }
  }
}
