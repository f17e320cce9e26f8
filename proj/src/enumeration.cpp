#include "conic/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "conic/cohomology.hpp"
#include "conic/conditions.hpp"

namespace conic {

std::string to_string(EnumMode m) { return m == EnumMode::full ? "full" : "generator_guided"; }

namespace {

// Dense index of W(B_n) elements: Lehmer rank of the underlying permutation
// times 2^n plus the sign mask by position.
class ElementIndex {
 public:
  explicit ElementIndex(int n) : n_(n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    size_ = f << n;
  }
  std::size_t size() const { return size_; }
  std::size_t operator()(const SignedPerm& g) const {
    std::size_t rank = 0, mask = 0;
    std::array<int, kMaxRank> a{};
    for (int i = 0; i < n_; ++i) {
      int x = g.signed_image(i + 1);
      a[i] = x < 0 ? -x : x;
      if (x < 0) mask |= std::size_t{1} << i;
    }
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j) smaller += a[j] < a[i];
      rank = rank * (n_ - i) + smaller;
    }
    return (rank << n_) | mask;
  }

 private:
  int n_;
  std::size_t size_ = 0;
};

// Marks on the element index that reset in O(1).
class Marks {
 public:
  explicit Marks(std::size_t size) : stamp_(size, 0) {}
  void clear() { ++epoch_; }
  bool test(std::size_t i) const { return stamp_[i] == epoch_; }
  void set(std::size_t i) { stamp_[i] = epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

bool prime_power(int o) {
  if (o < 2) return false;
  int p = 2;
  while (o % p) ++p;
  while (o % p == 0) o /= p;
  return o == 1;
}

struct GoodSearch {
  int n;
  ElementIndex idx;
  std::vector<char> good;
  std::vector<SignedPerm> candidates;  // good elements of prime-power order
  Marks in_group, visited, scratch;
  EnumerationStats* stats;

  GoodSearch(int n_, EnumerationStats* st)
      : n(n_), idx(n_), good(idx.size(), 0), in_group(idx.size()), visited(idx.size()), scratch(idx.size()), stats(st) {
    for (const auto& g : weyl_group_d_elements(n)) {
      if (!h1_condition_cyclic(g).holds) continue;
      good[idx(g)] = 1;
      if (prime_power(g.order())) candidates.push_back(g);
    }
  }

  // Closure that gives up as soon as an element fails the cyclic test.
  std::optional<std::vector<SignedPerm>> closure_good(const std::vector<SignedPerm>& gens) {
    ++stats->closures;
    scratch.clear();
    std::vector<SignedPerm> el{SignedPerm::identity(n)};
    scratch.set(idx(el[0]));
    for (std::size_t k = 0; k < el.size(); ++k)
      for (const auto& s : gens) {
        SignedPerm y = el[k] * s;
        std::size_t i = idx(y);
        if (scratch.test(i)) continue;
        if (!good[i]) return std::nullopt;
        scratch.set(i);
        el.push_back(y);
      }
    std::sort(el.begin(), el.end());
    return el;
  }

  // A generating set of the subgroup listed in elems (which contains H).
  std::vector<SignedPerm> generators_of(const std::vector<SignedPerm>& elems, const std::vector<SignedPerm>& start,
                                        std::mt19937& rng) {
    std::vector<SignedPerm> gens = start;
    std::size_t have = 0;
    auto reclose = [&] {
      scratch.clear();
      std::vector<SignedPerm> el{SignedPerm::identity(n)};
      scratch.set(idx(el[0]));
      for (std::size_t k = 0; k < el.size(); ++k)
        for (const auto& s : gens) {
          SignedPerm y = el[k] * s;
          std::size_t i = idx(y);
          if (!scratch.test(i)) {
            scratch.set(i);
            el.push_back(y);
          }
        }
      have = el.size();
    };
    reclose();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    while (have < elems.size()) {
      const SignedPerm& t = elems[pick(rng)];
      if (scratch.test(idx(t))) continue;
      gens.push_back(t);
      reclose();
    }
    return gens;
  }

  std::vector<FiniteGroup> run() {
    const auto& W = weyl_group_d_elements(n);
    std::vector<FiniteGroup> reps;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    auto add = [&](FiniteGroup K) {
      const std::uint64_t fp = fingerprint(K);
      auto& b = buckets[fp];
      for (std::size_t j : b) {
        ++stats->conjugacy_tests;
        if (are_conjugate(reps[j], K)) return;
      }
      b.push_back(reps.size());
      reps.push_back(std::move(K));
    };
    add(trivial_group(n));
    std::mt19937 rng(20240601u);
    std::vector<SignedPerm> weyl_gens;
    for (int i = 1; i < n; ++i) {
      std::array<int, 2> t{i, i + 1};
      weyl_gens.push_back(SignedPerm::cycle(n, t));
    }
    weyl_gens.push_back(SignedPerm::sign_change(n, 1) * SignedPerm::sign_change(n, 2));

    for (std::size_t h = 0; h < reps.size(); ++h) {
      const std::vector<SignedPerm> hgens = reps[h].generators();
      const std::vector<SignedPerm> helems = reps[h].elements();
      in_group.clear();
      for (const auto& x : helems) in_group.set(idx(x));

      std::vector<SignedPerm> ngens;
      if (helems.size() == 1) {
        ngens = weyl_gens;
      } else {
        std::vector<SignedPerm> normalizer;
        for (const auto& t : W) {
          const SignedPerm ti = t.inverse();
          bool ok = true;
          for (const auto& x : hgens)
            if (!in_group.test(idx(t * x * ti))) {
              ok = false;
              break;
            }
          if (ok) normalizer.push_back(t);
        }
        ngens = generators_of(normalizer, hgens, rng);
      }

      visited.clear();
      for (const auto& g : candidates) {
        const std::size_t gi = idx(g);
        if (visited.test(gi) || in_group.test(gi)) continue;
        // adjoining N(H)-conjugates of g gives conjugate groups
        std::vector<SignedPerm> orbit{g};
        visited.set(gi);
        for (std::size_t k = 0; k < orbit.size(); ++k)
          for (const auto& t : ngens) {
            SignedPerm y = t * orbit[k] * t.inverse();
            std::size_t yi = idx(y);
            if (!visited.test(yi)) {
              visited.set(yi);
              orbit.push_back(y);
            }
          }
        std::vector<SignedPerm> gens = hgens;
        gens.push_back(g);
        auto el = closure_good(gens);
        if (el) add(FiniteGroup(n, std::move(gens), std::move(*el)));
      }
    }
    stats->classes_explored = reps.size();
    return reps;
  }
};

bool all_elements_good(const FiniteGroup& G) {
  return std::all_of(G.elements().begin(), G.elements().end(),
                     [](const SignedPerm& g) { return h1_condition_cyclic(g).holds; });
}

}  // namespace

std::vector<FiniteGroup> good_subgroup_classes(int n, EnumerationStats* stats) {
  if (n < 1 || n > 7) throw std::invalid_argument("good_subgroup_classes: n must be in 1..7");
  EnumerationStats local;
  GoodSearch s(n, stats ? stats : &local);
  return s.run();
}

std::string group_name(const FiniteGroup& G, const GroupDescription& d) {
  std::ostringstream os;
  os << "order " << G.order();
  if (d.abelian) {
    os << " abelian";
  } else {
    os << ", derived series";
    for (auto k : d.derived_series) os << ' ' << k;
  }
  os << ", abelianization";
  if (d.abelian_invariants.empty()) os << " 1";
  for (auto k : d.abelian_invariants) os << " C_" << k;
  return os.str();
}

EnumerationResult enumerate(int n, EnumMode mode) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationResult R;
  R.n = n;
  R.mode = mode;
  std::vector<FiniteGroup> classes;
  if (mode == EnumMode::full) {
    if (n < 4 || n > 5) throw std::invalid_argument("enumerate: full mode supports n = 4, 5");
    auto subs = all_subgroups(weyl_group_d(n), 2000, SubgroupMode::up_to_WDn_conjugacy);
    R.stats.classes_explored = subs.subgroups.size();
    for (auto& H : subs.subgroups)
      if (all_elements_good(H)) classes.push_back(std::move(H));
  } else {
    if (n < 4 || n > 7) throw std::invalid_argument("enumerate: generator-guided mode supports n = 4..7");
    classes = good_subgroup_classes(n, &R.stats);
  }
  for (auto& G : classes) {
    if (!fiber_pair_condition(G)) continue;
    if (h1_condition(G).verdict != Verdict::holds) continue;
    if (!orbit_count_filter(G)) throw std::logic_error("enumerate: an (H1) group with fibre pairs has more than 3 orbits");
    if (!relative_minimality(G)) throw std::logic_error("enumerate: fibre-pair group fails relative minimality");
    EnumeratedGroup e;
    e.description = describe(G);
    e.name = group_name(G, e.description);
    for (const auto& o : orbits(G).orbits) e.orbit_profile.push_back(static_cast<int>(o.size()));
    std::sort(e.orbit_profile.rbegin(), e.orbit_profile.rend());
    e.key = canonical_form(G, 4096);
    e.group = std::move(G);
    R.passing.push_back(std::move(e));
  }
  std::sort(R.passing.begin(), R.passing.end(), [](const EnumeratedGroup& a, const EnumeratedGroup& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return *a.key < *b.key;
  });
  R.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return R;
}

}  // namespace conic

namespace conic {

namespace {

ClassSpec spec_n(int id, int n) { return {id, n}; }
ClassSpec spec_nn(int id, int n1, int n2, int n3 = 0) { return {id, 0, n1, n2, n3}; }
ClassSpec spec_p(int id, int p, int r = 1) { return {id, 0, 0, 0, 0, p, r}; }
ClassSpec spec_np(int id, int n, int p, int r = 1) { return {id, n, 0, 0, 0, p, r}; }

TableRow row(std::string label, int n, std::string name, ClassSpec s) { return {std::move(label), n, std::move(name), s, {}}; }
TableRow fixture(std::string label, int n, std::string name, std::vector<std::string> gens) {
  return {std::move(label), n, std::move(name), std::nullopt, std::move(gens)};
}

std::vector<TableRow> build_rows(int n) {
  switch (n) {
    case 4:
      return {row("D4(1)", 4, "S_3", spec_n(1, 1))};
    case 5:
      return {row("D5(1)", 5, "D_6", spec_n(9, 1)), row("D5(2)", 5, "C_3:C_4", spec_n(10, 1)),
              row("D5(3)", 5, "C_3:D_4", spec_n(11, 1))};
    case 6:
      // rows without a class number; which S_4 (etc.) gets which label is a convention
      return {row("D6(1)", 6, "S_3", spec_nn(7, 1, 1)),
              row("D6(2)", 6, "D_5", spec_n(1, 2)),
              row("D6(3)", 6, "D_6", spec_n(12, 1)),
              fixture("D6(4)", 6, "D_6", {"(1,2)(3,4)(5,6)", "c4 c6 (1,3)(2,5)"}),
              row("D6(5)", 6, "C_3:S_3", spec_nn(5, 1, 1)),
              row("D6(6)", 6, "F_5", spec_p(2, 5)),
              fixture("D6(7)", 6, "S_4", {"(1,2,3)(4,5,6)", "c1 c2 c3 c4 c5 c6 (2,4)(3,6)"}),
              fixture("D6(8)", 6, "S_4", {"(1,2)(3,4,5,6)", "c2 c4 c5 c6 (1,3)(2,5)"}),
              fixture("D6(9)", 6, "S_4", {"(1,2,3)(4,5,6)", "c1 c2 c3 c4 c5 c6 (2,3,4,5)"}),
              fixture("D6(10)", 6, "S_4", {"(1,2)(3,4)(5,6)", "c3 c4 c5 c6 (1,3,2,5)"}),
              row("D6(11)", 6, "S_3^2", spec_n(13, 1)),
              fixture("D6(12)", 6, "C_2 x S_4", {"c5 c6 (1,2)(3,4)", "c2 c4 (1,5,3,6)"}),
              fixture("D6(13)", 6, "C_2 x S_4", {"(1,2)(3,4)(5,6)", "c5 c6 (1,3)(2,5,4,6)"}),
              fixture("D6(14)", 6, "S_5", {"(3,4)(5,6)", "c2 c4 c5 c6 (1,2,3,5)"}),
              fixture("D6(15)", 6, "S_5", {"(3,4)(5,6)", "c4 c6 (1,2,3,5)"})};
    case 7:
      return {row("D7(1)", 7, "C_5:C_4", spec_n(10, 2)),
              row("D7(2)", 7, "D_10", spec_n(9, 2)),
              row("D7(3)", 7, "F_5", spec_p(14, 5)),
              row("D7(4)", 7, "S_3^2", spec_nn(3, 1, 1)),
              row("D7(5)", 7, "(C_3:S_3):C_2", spec_n(15, 1)),
              row("D7(6)", 7, "C_2 x F_5", spec_p(17, 5)),
              row("D7(7)", 7, "C_5:D_4", spec_n(11, 2)),
              row("D7(8)", 7, "C_2 x F_5", spec_p(16, 5)),
              row("D7(9)", 7, "S_3 wr C_2", spec_n(18, 1)),
              row("D7(10)", 7, "C_2^2:F_5", spec_p(19, 5))};
    case 8:
      return {row("D8(1)", 8, "F_7", spec_p(2, 7)), row("D8(2)", 8, "D_15", spec_nn(5, 1, 2)),
              row("D8(3)", 8, "D_7", spec_n(1, 3)), row("D8(4)", 8, "C_3:F_5", spec_np(6, 1, 5))};
    case 9:
      return {row("D9(1)", 9, "C_7:C_4", spec_n(10, 3)),
              row("D9(2)", 9, "D_14", spec_n(9, 3)),
              row("D9(3)", 9, "D_14:C_2", spec_n(11, 3)),
              row("D9(4)", 9, "S_3 x D_5", spec_nn(3, 1, 2)),
              row("D9(5)", 9, "C_7:C_12", spec_p(16, 7)),
              row("D9(6)", 9, "C_2 x F_7", spec_p(17, 7)),
              row("D9(7)", 9, "C_3^3:C_2^2", spec_nn(20, 1, 1, 1)),
              row("D9(8)", 9, "C_3^2:(C_3:C_4)", spec_nn(21, 1, 1)),
              row("D9(9)", 9, "S_3 x F_5", spec_np(4, 1, 5)),
              row("D9(10)", 9, "C_2^2:F_7", spec_p(19, 7)),
              row("D9(11)", 9, "S_3^2:S_3", spec_nn(22, 1, 1)),
              row("D9(12)", 9, "C_3^3:C_2^2:C_3", spec_n(23, 1)),
              row("D9(13)", 9, "C_3^3.S_4", spec_n(24, 1))};
  }
  throw std::invalid_argument("table_rows: n must be in 4..9");
}

}  // namespace

const std::vector<TableRow>& table_rows(int n) {
  static const std::map<int, std::vector<TableRow>> all = [] {
    std::map<int, std::vector<TableRow>> m;
    for (int k = 4; k <= 9; ++k) m[k] = build_rows(k);
    return m;
  }();
  auto it = all.find(n);
  if (it == all.end()) throw std::invalid_argument("table_rows: n must be in 4..9");
  return it->second;
}

FiniteGroup table_group(const TableRow& r) {
  if (r.spec) {
    ClassInstance I = class_generators(*r.spec);
    return closure(I.N, I.gens);
  }
  if (r.fixture.empty()) throw std::invalid_argument("table_group: missing fixture for " + r.label);
  std::vector<SignedPerm> gens;
  for (const auto& s : r.fixture) gens.push_back(parse(s, r.n));
  return closure(r.n, gens);
}

bool TableReport::ok() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const RowCheck& c) { return c.ok(); });
}

TableReport verify_tables(int n) {
  TableReport rep;
  rep.n = n;
  std::vector<FiniteGroup> groups;
  for (const auto& r : table_rows(n)) {
    RowCheck c;
    c.row = r;
    FiniteGroup G = table_group(r);
    c.order = G.order();
    c.rank_ok = G.rank() == n;
    if (c.rank_ok) {
      c.h1 = h1_condition(G).verdict;
      c.relmin_ok = relative_minimality(G);
      c.fiber_pair_ok = fiber_pair_condition(G);
    }
    rep.rows.push_back(std::move(c));
    groups.push_back(std::move(G));
  }
  // pairwise non-conjugate
  std::vector<std::optional<CanonicalKey>> keys(groups.size());
  if (n <= 7)
    for (std::size_t i = 0; i < groups.size(); ++i)
      if (rep.rows[i].rank_ok) keys[i] = canonical_form(groups[i], 4096);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    bool distinct = rep.rows[i].rank_ok;
    for (std::size_t j = 0; j < groups.size() && distinct; ++j) {
      if (i == j || !rep.rows[j].rank_ok) continue;
      if (n <= 7)
        distinct = !(*keys[i] == *keys[j]);
      else
        distinct = !are_conjugate(groups[i], groups[j]);
    }
    rep.rows[i].distinct = distinct;
  }
  return rep;
}

std::vector<std::string> match_rows(EnumerationResult& r) {
  std::vector<std::string> missing;
  std::vector<char> used(r.passing.size(), 0);
  for (const auto& row : table_rows(r.n)) {
    FiniteGroup G = table_group(row);
    CanonicalKey k = canonical_form(G, 4096);
    bool hit = false;
    for (std::size_t i = 0; i < r.passing.size(); ++i)
      if (r.passing[i].key && *r.passing[i].key == k) {
        r.passing[i].table_row = row.label;
        r.passing[i].matched_class = row.spec;
        used[i] = 1;
        hit = true;
      }
    if (!hit) missing.push_back(row.label);
  }
  return missing;
}

}  // namespace conic
