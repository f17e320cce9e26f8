#pragma once

// H^1(G, Pic) for G inside W(D_n), by three routes: a cocycle solver, the
// closed formula for cyclic groups and the half-sum criterion on orbit unions.

#include <optional>
#include <string>
#include <vector>

#include "conic/groups.hpp"
#include "conic/intlinalg.hpp"

namespace conic {

enum class H1Method { oracle, cyclic_formula, halfsum };
std::string to_string(H1Method m);

// Thrown when a computed H^1 has a factor other than 2 or a free part.
struct TorsionViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct H1Report {
  std::vector<BigInt> invariant_factors;
  int f2_rank = 0;
  H1Method method = H1Method::oracle;
  std::vector<std::vector<int>> witnesses;  // halfsum only, 1-based indices
  int z1_mod_f_rank = -1;                   // -1 when not computed
  std::optional<bool> f_minus1_in_span;
};

struct CoboundaryColumns {
  int n = 0;
  std::vector<SignedPerm> gens;
  IntVector f_minus1;
  std::vector<IntVector> f;  // f[i-1] stacks (g_k - I) e_i over the generators
};

CoboundaryColumns coboundary_columns(int n, const std::vector<SignedPerm>& gens);

// Cocycles are solved for on the generators; each Cayley-graph edge off a
// spanning tree contributes n+2 linear constraints.
H1Report h1_oracle(const FiniteGroup& G, std::size_t bound = 512);

// Unknowns f(g) for every element, constraints for every pair.  Quadratic in
// |G|; kept as a cross-check for small groups.
H1Report h1_oracle_full(const FiniteGroup& G, std::size_t bound = 64);

H1Report h1_cyclic(const SignedPerm& g);

struct CyclicCondition {
  bool holds = false;
  int type = 0;             // 1, 2 or 3 when holds; 0 otherwise
  long long failing_power = 0;  // smallest i with Λ(g^i) ∉ {0,2}
};

CyclicCondition h1_condition_cyclic(const SignedPerm& g);

// Generating set defaults to G.generators().
H1Report h1_halfsum(const FiniteGroup& G);
H1Report h1_halfsum(const FiniteGroup& G, const std::vector<SignedPerm>& gens);

enum class Verdict { holds, fails, unknown };
std::string to_string(Verdict v);

struct H1Condition {
  Verdict verdict = Verdict::unknown;
  std::optional<FiniteGroup> witness;  // a subgroup with nonzero H^1
  std::string note;
};

enum class H1Route { sylow2, all_subgroups };

H1Condition h1_condition(const FiniteGroup& G, H1Route route = H1Route::sylow2, std::size_t bound = 2000);

}  // namespace conic
