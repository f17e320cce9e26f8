#include "conic/groups.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace conic {

FiniteGroup::FiniteGroup(int n, std::vector<SignedPerm> generators, std::vector<SignedPerm> elements)
    : n_(n), gens_(std::move(generators)), elems_(std::move(elements)) {
  index_.reserve(elems_.size());
  for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
}

std::optional<std::uint32_t> FiniteGroup::index_of(const SignedPerm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup closure(int n, const std::vector<SignedPerm>& gens, std::size_t cap) {
  for (const auto& g : gens) {
    if (g.rank() != n) throw std::invalid_argument("closure: rank mismatch");
    if (sigma(g) != 1) throw std::domain_error("closure: generator " + format(g) + " is not in W(D_n)");
  }
  std::vector<SignedPerm> elems{SignedPerm::identity(n)};
  std::unordered_set<SignedPerm> seen{elems[0]};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gens) {
      SignedPerm y = elems[k] * g;
      if (seen.insert(y).second) {
        if (elems.size() >= cap) throw BoundExceeded("closure: order exceeds cap " + std::to_string(cap));
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return FiniteGroup(n, gens, std::move(elems));
}

FiniteGroup trivial_group(int n) { return closure(n, {}); }

namespace {

std::vector<SignedPerm> weyl_generators(int n) {
  std::vector<SignedPerm> gens;
  for (int i = 1; i < n; ++i) {
    std::array<int, 2> t{i, i + 1};
    gens.push_back(SignedPerm::cycle(n, t));
  }
  if (n >= 2) gens.push_back(SignedPerm::sign_change(n, 1) * SignedPerm::sign_change(n, 2));
  return gens;
}

}  // namespace

FiniteGroup weyl_group_d(int n) { return closure(n, weyl_generators(n), 1u << 24); }

const std::vector<SignedPerm>& weyl_group_d_elements(int n) {
  static std::array<std::once_flag, 8> once;
  static std::array<std::vector<SignedPerm>, 8> cache;
  if (n < 1 || n > 7) throw BoundExceeded("weyl_group_d_elements: rank must be in 1..7");
  std::call_once(once[n], [n] { cache[n] = weyl_group_d(n).elements(); });
  return cache[n];
}

std::vector<std::uint32_t> multiplication_table(const FiniteGroup& G) {
  const std::size_t N = G.order();
  std::vector<std::uint32_t> T(N * N);
  const auto& e = G.elements();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) T[a * N + b] = *G.index_of(e[a] * e[b]);
  return T;
}

bool is_abelian(const FiniteGroup& G) {
  const auto& g = G.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!(g[i] * g[j] == g[j] * g[i])) return false;
  return true;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

inline bool test(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void set(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

struct Sub {
  Bits bits;
  std::vector<std::uint32_t> gens;
  std::size_t order;
};

// Subgroup generated by gens inside a group with table T.
Bits generate(const std::vector<std::uint32_t>& T, std::size_t N, const std::vector<std::uint32_t>& gens,
              std::size_t* order) {
  Bits b((N + 63) / 64);
  std::vector<std::uint32_t> list{0};
  set(b, 0);
  for (std::size_t k = 0; k < list.size(); ++k)
    for (auto g : gens) {
      std::uint32_t y = T[list[k] * N + g];
      if (!test(b, y)) {
        set(b, y);
        list.push_back(y);
      }
    }
  *order = list.size();
  return b;
}

FiniteGroup to_group(const FiniteGroup& G, const Sub& s) {
  std::vector<SignedPerm> elems, gens;
  for (std::uint32_t i = 0; i < G.order(); ++i)
    if (test(s.bits, i)) elems.push_back(G.elements()[i]);
  for (auto g : s.gens) gens.push_back(G.elements()[g]);
  return FiniteGroup(G.rank(), std::move(gens), std::move(elems));
}

}  // namespace

SubgroupList all_subgroups(const FiniteGroup& G, std::size_t bound, SubgroupMode mode) {
  if (G.order() > bound) throw BoundExceeded("all_subgroups: |G| = " + std::to_string(G.order()) + " exceeds bound");
  if (mode == SubgroupMode::up_to_WDn_conjugacy && G.order() != weyl_group_d_elements(G.rank()).size())
    throw std::invalid_argument("all_subgroups: W(D_n) conjugacy needs W(D_n) as the parent");
  const bool conj = mode != SubgroupMode::all;
  const std::size_t N = G.order();
  const std::size_t words = (N + 63) / 64;
  const auto T = multiplication_table(G);
  std::vector<std::uint32_t> inv(N);
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b)
      if (T[a * N + b] == 0) {
        inv[a] = b;
        break;
      }

  // every subgroup is reached by adjoining cyclic subgroups of prime-power order
  std::vector<Sub> cyclics;
  std::vector<std::int32_t> cyc_of(N, -1);
  {
    std::unordered_map<Bits, std::int32_t, BitsHash> seen;
    for (std::uint32_t x = 1; x < N; ++x) {
      int o = G.elements()[x].order();
      int q = o;
      for (int p = 2; p <= q; ++p)
        if (q % p == 0) {
          while (q % p == 0) q /= p;
          break;
        }
      if (q != 1) continue;
      std::size_t ord;
      Bits b = generate(T, N, {x}, &ord);
      auto [it, fresh] = seen.emplace(b, static_cast<std::int32_t>(cyclics.size()));
      if (fresh) cyclics.push_back({std::move(b), {x}, ord});
      cyc_of[x] = it->second;
    }
  }

  std::vector<Sub> found;
  std::unordered_map<Bits, std::size_t, BitsHash> where;
  auto add = [&](Bits b, std::vector<std::uint32_t> gens, std::size_t ord) {
    if (where.count(b)) return;
    const std::size_t id = found.size();
    if (conj) {
      std::vector<std::uint32_t> members;
      for (std::uint32_t i = 0; i < N; ++i)
        if (test(b, i)) members.push_back(i);
      for (std::uint32_t t = 0; t < N; ++t) {
        Bits img(words);
        for (auto x : members) set(img, T[T[t * N + x] * N + inv[t]]);
        where.emplace(std::move(img), id);
      }
    } else {
      where.emplace(b, id);
    }
    found.push_back({std::move(b), std::move(gens), ord});
  };
  {
    Bits triv(words);
    set(triv, 0);
    add(std::move(triv), {}, 1);
  }
  for (std::size_t h = 0; h < found.size(); ++h) {
    const Bits hb = found[h].bits;
    const std::vector<std::uint32_t> hg = found[h].gens;
    std::vector<std::uint32_t> normalizer;
    if (conj)
      for (std::uint32_t t = 0; t < N; ++t) {
        bool ok = true;
        for (auto x : hg)
          if (!test(hb, T[T[t * N + x] * N + inv[t]])) {
            ok = false;
            break;
          }
        if (ok) normalizer.push_back(t);
      }
    std::vector<char> done(cyclics.size(), 0);
    for (std::size_t c = 0; c < cyclics.size(); ++c) {
      if (done[c]) continue;
      const std::uint32_t x = cyclics[c].gens[0];
      if (test(hb, x)) continue;
      done[c] = 1;
      // adjoining N_G(H)-conjugate cyclics gives conjugate groups
      for (auto t : normalizer) done[cyc_of[T[T[t * N + x] * N + inv[t]]]] = 1;
      std::vector<std::uint32_t> gens = hg;
      gens.push_back(x);
      std::size_t ord;
      Bits b = generate(T, N, gens, &ord);
      add(std::move(b), std::move(gens), ord);
    }
  }

  SubgroupList out;
  out.parent = G;
  out.mode = mode;
  for (const auto& s : found) out.subgroups.push_back(to_group(G, s));
  std::sort(out.subgroups.begin(), out.subgroups.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

FiniteGroup conjugate_group(const FiniteGroup& G, const SignedPerm& t) {
  const SignedPerm ti = t.inverse();
  std::vector<SignedPerm> gens, elems;
  for (const auto& g : G.generators()) gens.push_back(t * g * ti);
  for (const auto& g : G.elements()) elems.push_back(t * g * ti);
  std::sort(elems.begin(), elems.end());
  return FiniteGroup(G.rank(), std::move(gens), std::move(elems));
}

FiniteGroup sylow2(const FiniteGroup& G) {
  std::size_t target = 1;
  while (G.order() % (target * 2) == 0) target *= 2;
  std::vector<SignedPerm> gens;
  FiniteGroup P = trivial_group(G.rank());
  while (P.order() < target) {
    bool grew = false;
    for (const auto& x : G.elements()) {
      if (P.contains(x)) continue;
      int o = x.order();
      if (o & (o - 1)) continue;
      auto trial = gens;
      trial.push_back(x);
      FiniteGroup Q;
      try {
        Q = closure(G.rank(), trial, target);
      } catch (const BoundExceeded&) {
        continue;
      }
      std::size_t q = Q.order();
      if ((q & (q - 1)) == 0) {
        gens = std::move(trial);
        P = std::move(Q);
        grew = true;
        break;
      }
    }
    if (!grew) throw std::logic_error("sylow2: no 2-element extends the current 2-subgroup");
  }
  // all Sylow 2-subgroups are conjugate; take the least element set
  FiniteGroup best = P;
  for (const auto& t : G.elements()) {
    FiniteGroup Q = conjugate_group(P, t);
    if (Q.elements() < best.elements()) best = std::move(Q);
  }
  return best;
}

std::vector<std::vector<int>> symbol_orbits(int n, const std::vector<SignedPerm>& gens) {
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int s = 0; s < 2 * n; ++s) {
      int a = find(s), b = find(act_symbol(g, s));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> groups;
  for (int s = 0; s < 2 * n; ++s) groups[find(s)].push_back(s);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : groups) out.push_back(std::move(v));
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t type_hash(const SignedPerm& g) {
  std::uint64_t h = 7;
  for (auto [len, odd] : signed_cycle_type(g)) h = mix(h, static_cast<std::uint64_t>(len * 2 + odd));
  return h;
}

}  // namespace

std::uint64_t fingerprint(const FiniteGroup& G) {
  std::uint64_t h = mix(static_cast<std::uint64_t>(G.rank()), G.order());
  std::vector<std::uint64_t> types;
  types.reserve(G.order());
  for (const auto& g : G.elements()) types.push_back(type_hash(g));
  std::sort(types.begin(), types.end());
  for (auto t : types) h = mix(h, t);
  std::vector<std::uint64_t> shapes;
  for (const auto& o : symbol_orbits(G.rank(), G.generators())) {
    bool split = std::none_of(o.begin(), o.end(), [&](int s) { return std::binary_search(o.begin(), o.end(), s ^ 1); });
    shapes.push_back(o.size() * 2 + (split ? 1 : 0));
  }
  std::sort(shapes.begin(), shapes.end());
  for (auto s : shapes) h = mix(h, s);
  return h;
}

CanonicalKey canonical_form(const FiniteGroup& G, std::size_t bound) {
  if (G.order() > bound) throw BoundExceeded("canonical_form: |G| exceeds bound");
  const int n = G.rank();
  const auto& W = weyl_group_d_elements(n);
  CanonicalKey key;
  key.n = n;
  std::vector<std::uint64_t> buf(G.order());
  bool first = true;
  for (const auto& t : W) {
    const SignedPerm ti = t.inverse();
    for (std::size_t i = 0; i < G.order(); ++i) buf[i] = (t * G.elements()[i] * ti).code();
    std::sort(buf.begin(), buf.end());
    if (first || buf < key.codes) {
      key.codes = buf;
      first = false;
    }
  }
  return key;
}

namespace {

class ConjugacySearch {
 public:
  ConjugacySearch(const FiniteGroup& A, const FiniteGroup& B) : n_(A.rank()), A_(A), B_(B) {
    const int m = 2 * n_;
    for (const auto& g : A.generators()) {
      if (g.is_identity()) continue;
      std::vector<int> fwd(m), bwd(m);
      for (int s = 0; s < m; ++s) {
        fwd[s] = act_symbol(g, s);
        bwd[fwd[s]] = s;
      }
      gen_fwd_.push_back(std::move(fwd));
      gen_bwd_.push_back(std::move(bwd));
      const auto type = signed_cycle_type(g);
      std::vector<std::uint32_t> cand;
      for (std::uint32_t h = 0; h < B.order(); ++h)
        if (signed_cycle_type(B.elements()[h]) == type) cand.push_back(h);
      cands_.push_back(std::move(cand));
    }
    bact_.resize(B.order() * m);
    for (std::size_t h = 0; h < B.order(); ++h)
      for (int s = 0; s < m; ++s) bact_[h * m + s] = act_symbol(B.elements()[h], s);
    t_.assign(m, -1);
    used_.assign(m, 0);
    // with a sign change normalizing either side the parity of t is free
    need_even_ = n_ % 2 == 0;
    if (need_even_) {
      for (int j = 1; j <= n_ && need_even_; ++j) {
        SignedPerm c = SignedPerm::sign_change(n_, j);
        if (normalizes(A, c) || normalizes(B, c)) need_even_ = false;
      }
    }
  }

  std::optional<SignedPerm> run() {
    for (const auto& c : cands_)
      if (c.empty()) return std::nullopt;
    if (!search(cands_, 0)) return std::nullopt;
    std::vector<int> img(n_);
    for (int j = 1; j <= n_; ++j) {
      int s = t_[symbol(j, false)];
      img[j - 1] = symbol_minus(s) ? -symbol_index(s) : symbol_index(s);
    }
    SignedPerm t = SignedPerm::from_signed_images(n_, img);
    if (sigma(t) == 1) return t;
    // parity was left free: repair with -1 (n odd) or a normalizing sign change
    if (n_ % 2) {
      std::vector<int> neg(n_);
      for (int j = 1; j <= n_; ++j) neg[j - 1] = -j;
      return t * SignedPerm::from_signed_images(n_, neg);
    }
    for (int j = 1; j <= n_; ++j) {
      SignedPerm c = SignedPerm::sign_change(n_, j);
      if (normalizes(A_, c)) return t * c;
      if (normalizes(B_, c)) return c * t;
    }
    return std::nullopt;
  }

 private:
  static bool normalizes(const FiniteGroup& H, const SignedPerm& c) {
    return std::all_of(H.generators().begin(), H.generators().end(),
                       [&](const SignedPerm& g) { return H.contains(c * g * c); });
  }

  bool search(const std::vector<std::vector<std::uint32_t>>& cands, int assigned) {
    const int m = 2 * n_;
    if (assigned == m) {
      if (!need_even_) return true;
      int minus = 0;
      for (int j = 1; j <= n_; ++j) minus += symbol_minus(t_[symbol(j, false)]);
      return minus % 2 == 0;
    }
    // forced extension along a generator if possible
    int best_i = -1, best_y = -1;
    for (int i = 0; i < static_cast<int>(gen_fwd_.size()); ++i)
      for (int y = 0; y < m; ++y)
        if (t_[y] >= 0 && t_[gen_fwd_[i][y]] < 0 &&
            (best_i < 0 || cands[i].size() < cands[best_i].size())) {
          best_i = i;
          best_y = y;
        }
    int x;
    std::vector<int> images;
    if (best_i >= 0) {
      x = gen_fwd_[best_i][best_y];
      for (auto h : cands[best_i]) {
        int z = bact_[h * m + t_[best_y]];
        if (!used_[z] && std::find(images.begin(), images.end(), z) == images.end()) images.push_back(z);
      }
    } else {
      x = 0;
      while (t_[x] >= 0) ++x;
      for (int z = 0; z < m; ++z)
        if (!used_[z]) images.push_back(z);
    }
    for (int z : images) {
      assign(x, z);
      std::vector<std::vector<std::uint32_t>> next(cands.size());
      bool alive = true;
      for (std::size_t i = 0; i < cands.size() && alive; ++i) {
        for (auto h : cands[i])
          if (consistent(i, h, x) && consistent(i, h, x ^ 1)) next[i].push_back(h);
        alive = !next[i].empty();
      }
      if (alive && search(next, assigned + 2)) return true;
      unassign(x);
    }
    return false;
  }

  bool consistent(std::size_t i, std::uint32_t h, int x) const {
    const int m = 2 * n_;
    int y = gen_fwd_[i][x];
    if (t_[y] >= 0 && bact_[h * m + t_[x]] != t_[y]) return false;
    int w = gen_bwd_[i][x];
    if (t_[w] >= 0 && bact_[h * m + t_[w]] != t_[x]) return false;
    return true;
  }

  void assign(int x, int z) {
    t_[x] = z;
    t_[x ^ 1] = z ^ 1;
    used_[z] = used_[z ^ 1] = 1;
  }
  void unassign(int x) {
    used_[t_[x]] = used_[t_[x] ^ 1] = 0;
    t_[x] = t_[x ^ 1] = -1;
  }

  int n_;
  const FiniteGroup& A_;
  const FiniteGroup& B_;
  std::vector<std::vector<int>> gen_fwd_, gen_bwd_;
  std::vector<std::vector<std::uint32_t>> cands_;
  std::vector<int> bact_;
  std::vector<int> t_;
  std::vector<char> used_;
  bool need_even_ = false;
};

}  // namespace

std::optional<SignedPerm> conjugator(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.rank() != B.rank() || A.order() != B.order()) return std::nullopt;
  if (fingerprint(A) != fingerprint(B)) return std::nullopt;
  return ConjugacySearch(A, B).run();
}

namespace {

FiniteGroup derived_subgroup(const FiniteGroup& G) {
  const int n = G.rank();
  std::vector<SignedPerm> gens;
  const auto& g = G.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      SignedPerm c = g[i] * g[j] * g[i].inverse() * g[j].inverse();
      if (!c.is_identity()) gens.push_back(c);
    }
  FiniteGroup D = closure(n, gens);
  // normal closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& x : g) {
      for (const auto& s : std::vector<SignedPerm>(D.generators())) {
        SignedPerm y = x * s * x.inverse();
        if (!D.contains(y)) {
          gens.push_back(y);
          D = closure(n, gens);
          changed = true;
        }
      }
    }
  }
  return D;
}

}  // namespace

GroupDescription describe(const FiniteGroup& G) {
  GroupDescription d;
  d.order = G.order();
  FiniteGroup cur = G;
  d.derived_series.push_back(cur.order());
  FiniteGroup D = derived_subgroup(G);
  d.abelian = D.order() == 1;
  {
    FiniteGroup step = D;
    while (step.order() < cur.order()) {
      d.derived_series.push_back(step.order());
      cur = step;
      if (cur.order() == 1) break;
      step = derived_subgroup(cur);
    }
  }
  // elementary divisors of G/[G,G] from the sizes of its p^k-torsion
  std::size_t a = G.order() / D.order();
  for (std::uint64_t p = 2; a > 1; ++p) {
    if (a % p) continue;
    while (a % p == 0) a /= p;
    std::vector<int> r{0};
    for (std::uint64_t pk = p;; pk *= p) {
      std::size_t cnt = 0;
      for (const auto& g : G.elements())
        if (D.contains(g.pow(static_cast<long long>(pk)))) ++cnt;
      cnt /= D.order();
      int e = 0;
      while (cnt > 1) {
        cnt /= p;
        ++e;
      }
      if (e == r.back()) break;
      r.push_back(e);
    }
    // number of cyclic factors of exponent >= k is r[k] - r[k-1]
    for (std::size_t k = 1; k < r.size(); ++k) {
      int ge_k = r[k] - r[k - 1];
      int ge_next = k + 1 < r.size() ? r[k + 1] - r[k] : 0;
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk *= p;
      for (int c = 0; c < ge_k - ge_next; ++c) d.abelian_invariants.push_back(pk);
    }
  }
  std::sort(d.abelian_invariants.begin(), d.abelian_invariants.end());
  return d;
}

}  // namespace conic
