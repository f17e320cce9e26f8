#pragma once

// Orbit structure, the fibre-pair and relative minimality conditions, and the
// projection of a group onto one of its orbits.

#include <vector>

#include "conic/groups.hpp"

namespace conic {

struct OrbitDecomposition {
  std::vector<std::vector<int>> orbits;       // pr(G)-orbits on 1..n
  std::vector<std::vector<int>> pair_orbits;  // orbits on the 2n symbols
};

OrbitDecomposition orbits(const FiniteGroup& G);

// j+ and j- share an orbit for every j.
bool fiber_pair_condition(const FiniteGroup& G);

// Fixed part of Pic equals Z l_0 + Z K.
bool relative_minimality(const FiniteGroup& G);

bool orbit_count_filter(const FiniteGroup& G);

struct ProjectedGroup {
  std::vector<int> orbit;
  int target_rank = 0;
  FiniteGroup group;
  bool appended_flag = false;
};

// Restriction to a pr(G)-orbit, relabelled in increasing order; elements whose
// restriction is odd pick up c_{n'+1}.
ProjectedGroup project(const FiniteGroup& G, const std::vector<int>& orbit);

}  // namespace conic
