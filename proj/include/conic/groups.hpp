#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "conic/signed_perm.hpp"

namespace conic {

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A subgroup of W(D_n).  Elements are kept sorted under the element order.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  // elements must be closed and sorted; used by closure() and the subgroup code
  FiniteGroup(int n, std::vector<SignedPerm> generators, std::vector<SignedPerm> elements);

  int rank() const { return n_; }
  const std::vector<SignedPerm>& generators() const { return gens_; }
  const std::vector<SignedPerm>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }

  std::optional<std::uint32_t> index_of(const SignedPerm& g) const;
  bool contains(const SignedPerm& g) const { return index_.count(g) != 0; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }

 private:
  int n_ = 0;
  std::vector<SignedPerm> gens_;
  std::vector<SignedPerm> elems_;
  std::unordered_map<SignedPerm, std::uint32_t> index_;
};

FiniteGroup closure(int n, const std::vector<SignedPerm>& gens, std::size_t cap = 1u << 20);
FiniteGroup trivial_group(int n);
FiniteGroup weyl_group_d(int n);
const std::vector<SignedPerm>& weyl_group_d_elements(int n);

// table[a * |G| + b] = index of elements[a] * elements[b]
std::vector<std::uint32_t> multiplication_table(const FiniteGroup& G);

bool is_abelian(const FiniteGroup& G);

enum class SubgroupMode { all, up_to_parent_conjugacy, up_to_WDn_conjugacy };

struct SubgroupList {
  FiniteGroup parent;
  std::vector<FiniteGroup> subgroups;
  SubgroupMode mode = SubgroupMode::all;
};

// Cyclic extension, layer by layer from the trivial group.
SubgroupList all_subgroups(const FiniteGroup& G, std::size_t bound = 2000,
                           SubgroupMode mode = SubgroupMode::all);

FiniteGroup sylow2(const FiniteGroup& G);

// Pair-orbit partition of the 2n symbols, each orbit sorted, orbits sorted by
// their smallest symbol.
std::vector<std::vector<int>> symbol_orbits(int n, const std::vector<SignedPerm>& gens);

// Invariant under W(B_n)-conjugation: order, multiset of signed cycle types,
// orbit shapes.
std::uint64_t fingerprint(const FiniteGroup& G);

struct CanonicalKey {
  int n = 0;
  std::vector<std::uint64_t> codes;  // sorted element codes of the minimal conjugate
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// Minimal image over all conjugators in W(D_n); needs n <= 7 and |G| <= bound.
CanonicalKey canonical_form(const FiniteGroup& G, std::size_t bound = 512);

// Backtrack search for t in W(D_n) with t A t^-1 = B.
std::optional<SignedPerm> conjugator(const FiniteGroup& A, const FiniteGroup& B);
inline bool are_conjugate(const FiniteGroup& A, const FiniteGroup& B) { return conjugator(A, B).has_value(); }

FiniteGroup conjugate_group(const FiniteGroup& G, const SignedPerm& t);

struct GroupDescription {
  std::size_t order = 0;
  std::vector<std::uint64_t> abelian_invariants;  // of G/[G,G]
  std::vector<std::size_t> derived_series;        // orders down to the perfect core
  bool abelian = false;
};

GroupDescription describe(const FiniteGroup& G);

}  // namespace conic
