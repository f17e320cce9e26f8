#pragma once

// The 24 families of subgroups of W(D_N) built from dihedral and Frobenius
// blocks, with a verifier for (H1), relative minimality and orbit profile.

#include <string>
#include <vector>

#include "conic/cohomology.hpp"
#include "conic/groups.hpp"

namespace conic {

struct FieldLabeling {
  int p = 0, r = 0;
  std::vector<int> modulus;  // h, constant term first, monic of degree r
  int q = 0;                 // p^r
  int gamma = 0;             // label of the chosen generator of the unit group
  // mul[a][b], add_one[a] on labels 1..q (label q is 0)
  std::vector<std::vector<int>> mul;
  std::vector<int> add_one;
};

// Smallest monic irreducible h (constant term first), smallest-label Γ.
FieldLabeling field_labeling(int p, int r);

struct ClassSpec {
  int id = 0;
  int n = 0, n1 = 0, n2 = 0, n3 = 0;
  int p = 0, r = 1;
};

std::string to_string(const ClassSpec& s);

// Which of n, n1..n3, p/r a class takes.
std::vector<std::string> class_parameters(int id);

struct ClassInstance {
  ClassSpec spec;
  int N = 0;
  std::vector<SignedPerm> gens;
  std::vector<int> expected_orbits;  // lengths, descending
  std::string name;
};

// Throws std::invalid_argument for bad parameters.
ClassInstance class_generators(const ClassSpec& spec);

struct ClassReport {
  ClassInstance instance;
  std::size_t order = 0;
  Verdict h1 = Verdict::unknown;
  bool relmin_ok = false;
  bool orbit_profile_ok = false;
  std::vector<int> orbit_lengths;
  std::size_t sylow2_order = 0;
  bool ok() const { return h1 == Verdict::holds && relmin_ok && orbit_profile_ok; }
};

ClassReport verify_class(const ClassSpec& spec);

// Two smallest admissible parameter tuples (p^r <= 9), plus p^r = 9 for the
// Frobenius families.
std::vector<ClassSpec> small_specs(int id);

}  // namespace conic
