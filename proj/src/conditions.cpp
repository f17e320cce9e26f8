#include "conic/conditions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "conic/picard.hpp"

namespace conic {

OrbitDecomposition orbits(const FiniteGroup& G) {
  OrbitDecomposition d;
  d.pair_orbits = symbol_orbits(G.rank(), G.generators());
  std::vector<int> owner(G.rank() + 1, -1);
  for (const auto& o : d.pair_orbits) {
    std::vector<int> idx;
    for (int s : o) idx.push_back(symbol_index(s));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (owner[idx[0]] >= 0) continue;  // the mirror image of an orbit already seen
    for (int i : idx) owner[i] = static_cast<int>(d.orbits.size());
    d.orbits.push_back(std::move(idx));
  }
  std::sort(d.orbits.begin(), d.orbits.end());
  return d;
}

bool fiber_pair_condition(const FiniteGroup& G) {
  for (const auto& o : symbol_orbits(G.rank(), G.generators()))
    if (!std::binary_search(o.begin(), o.end(), o[0] ^ 1)) return false;
  return true;
}

bool relative_minimality(const FiniteGroup& G) {
  std::vector<IntMatrix> mats;
  for (const auto& g : G.generators()) mats.push_back(phi(g));
  return fixed_sublattice(mats, G.rank()) == l0_k_lattice(G.rank());
}

bool orbit_count_filter(const FiniteGroup& G) { return symbol_orbits(G.rank(), G.generators()).size() <= 3; }

namespace {

struct Restriction {
  std::vector<int> images;  // signed, relabelled
  bool odd = false;
};

Restriction restrict_to(const SignedPerm& g, const std::vector<int>& orbit, const std::vector<int>& label) {
  Restriction r;
  int minus = 0;
  for (int i : orbit) {
    int x = g.signed_image(i);
    int j = x < 0 ? -x : x;
    if (label[j] == 0) throw std::invalid_argument("project: not an orbit");
    r.images.push_back(x < 0 ? -label[j] : label[j]);
    minus += x < 0;
  }
  r.odd = minus % 2;
  return r;
}

}  // namespace

ProjectedGroup project(const FiniteGroup& G, const std::vector<int>& orbit) {
  const int n = G.rank();
  std::vector<int> O = orbit;
  std::sort(O.begin(), O.end());
  O.erase(std::unique(O.begin(), O.end()), O.end());
  if (O.empty() || O.front() < 1 || O.back() > n) throw std::invalid_argument("project: bad orbit");
  const auto dec = orbits(G);
  if (std::find(dec.orbits.begin(), dec.orbits.end(), O) == dec.orbits.end())
    throw std::invalid_argument("project: not a pr(G)-orbit");
  std::vector<int> label(n + 1, 0);
  for (std::size_t k = 0; k < O.size(); ++k) label[O[k]] = static_cast<int>(k) + 1;
  const int m = static_cast<int>(O.size());

  std::vector<Restriction> res;
  bool any_odd = false;
  for (const auto& g : G.elements()) {
    res.push_back(restrict_to(g, O, label));
    any_odd |= res.back().odd;
  }
  const int N = any_odd ? m + 1 : m;
  auto lift = [&](const Restriction& r) {
    std::vector<int> img = r.images;
    if (any_odd) img.push_back(r.odd ? -(m + 1) : m + 1);
    return SignedPerm::from_signed_images(N, img);
  };
  std::vector<SignedPerm> image;
  image.reserve(res.size());
  for (const auto& r : res) image.push_back(lift(r));

  // P_O is a homomorphism
  const auto T = multiplication_table(G);
  const std::size_t sz = G.order();
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b)
      if (!(image[T[a * sz + b]] == image[a] * image[b]))
        throw std::logic_error("project: P_O is not multiplicative");

  std::vector<SignedPerm> gens;
  for (const auto& g : G.generators()) gens.push_back(lift(restrict_to(g, O, label)));
  FiniteGroup H = closure(N, gens);
  std::vector<SignedPerm> set = image;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set != H.elements()) throw std::logic_error("project: image is not the generated group");

  ProjectedGroup p;
  p.orbit = O;
  p.target_rank = N;
  p.group = std::move(H);
  p.appended_flag = any_odd;
  return p;
}

}  // namespace conic
