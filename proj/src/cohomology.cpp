#include "conic/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "conic/picard.hpp"

namespace conic {

std::string to_string(H1Method m) {
  switch (m) {
    case H1Method::oracle: return "oracle";
    case H1Method::cyclic_formula: return "cyclic_formula";
    case H1Method::halfsum: return "halfsum";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

using LMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

LMat phi_ll(const SignedPerm& g) {
  return phi(g).unaryExpr([](const BigInt& x) { return static_cast<long long>(x); });
}

IntVector to_big(const Eigen::Ref<const Eigen::Matrix<long long, Eigen::Dynamic, 1>>& v) {
  IntVector r(v.size());
  for (Index i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

void check_two_torsion(const QuotientInvariants<BigInt>& q, const char* where) {
  if (q.free_rank != 0) throw TorsionViolation(std::string(where) + ": H^1 has a free part");
  for (const auto& t : q.torsion)
    if (t != 2) throw TorsionViolation(std::string(where) + ": invariant factor " + t.str());
}

H1Report trivial_report(H1Method m) {
  H1Report r;
  r.method = m;
  r.z1_mod_f_rank = 0;
  r.f_minus1_in_span = true;
  return r;
}

// Fills the report from Z^1 and the coboundary columns.
H1Report finish(const LatticeBasis<BigInt>& Z1, const CoboundaryColumns& cols, Index U, const char* where) {
  std::vector<IntVector> fs = cols.f;
  LatticeBasis<BigInt> F = LatticeBasis<BigInt>::from_vectors(U, fs);
  fs.push_back(cols.f_minus1);
  LatticeBasis<BigInt> B1 = LatticeBasis<BigInt>::from_vectors(U, fs);
  auto q = quotient_invariants(Z1, B1);
  check_two_torsion(q, where);
  H1Report r;
  r.method = H1Method::oracle;
  r.invariant_factors = q.torsion;
  r.f2_rank = static_cast<int>(q.torsion.size());
  auto qf = quotient_invariants(Z1, F);
  r.z1_mod_f_rank = static_cast<int>(qf.torsion.size());
  r.f_minus1_in_span = lattice_member(F, cols.f_minus1).has_value();
  return r;
}

}  // namespace

CoboundaryColumns coboundary_columns(int n, const std::vector<SignedPerm>& gens) {
  const Index d = n + 2;
  const Index m = static_cast<Index>(gens.size());
  CoboundaryColumns c;
  c.n = n;
  c.gens = gens;
  c.f_minus1 = IntVector::Zero(m * d);
  c.f.assign(n, IntVector::Zero(m * d));
  for (Index k = 0; k < m; ++k) {
    if (gens[k].rank() != n) throw std::invalid_argument("coboundary_columns: rank mismatch");
    IntMatrix D = phi(gens[k]) - IntMatrix::Identity(d, d);
    c.f_minus1.segment(k * d, d) = D.col(0);
    for (int i = 1; i <= n; ++i) c.f[i - 1].segment(k * d, d) = D.col(i + 1);
  }
  IntVector sum = IntVector::Zero(m * d);
  for (const auto& v : c.f) sum += v;
  if (sum != IntVector(2 * c.f_minus1)) throw std::logic_error("coboundary_columns: half-sum identity fails");
  return c;
}

H1Report h1_oracle(const FiniteGroup& G, std::size_t bound) {
  if (G.order() > bound) throw BoundExceeded("h1_oracle: |G| exceeds bound");
  const int n = G.rank();
  std::vector<SignedPerm> gens;
  for (const auto& g : G.generators())
    if (!g.is_identity()) gens.push_back(g);
  if (gens.empty()) return trivial_report(H1Method::oracle);

  const Index d = n + 2;
  const Index m = static_cast<Index>(gens.size());
  const Index U = m * d;
  const CoboundaryColumns cols = coboundary_columns(n, gens);
  Index rank_b1;
  {
    IntMatrix C(n + 1, U);
    C.row(0) = cols.f_minus1.transpose();
    for (int i = 0; i < n; ++i) C.row(i + 1) = cols.f[i].transpose();
    rank_b1 = integer_rank(C);
  }
  // H^1 is finite, so rank Z^1 = rank B^1; stop once the constraints reach that
  const Index target = U - rank_b1;

  HermiteBuilder<BigInt> hb(U);
  std::vector<LMat> F(G.order());
  std::vector<char> seen(G.order(), 0);
  std::vector<std::uint32_t> queue{*G.index_of(SignedPerm::identity(n))};
  F[queue[0]] = LMat::Zero(d, U);
  seen[queue[0]] = 1;
  for (std::size_t qi = 0; qi < queue.size() && hb.rank() < target; ++qi) {
    const std::uint32_t a = queue[qi];
    const SignedPerm& g = G.elements()[a];
    const LMat P = phi_ll(g);
    for (Index k = 0; k < m && hb.rank() < target; ++k) {
      LMat C = F[a];
      C.middleCols(k * d, d) += P;
      const std::uint32_t b = *G.index_of(g * gens[k]);
      if (!seen[b]) {
        seen[b] = 1;
        F[b] = std::move(C);
        queue.push_back(b);
        continue;
      }
      C -= F[b];
      for (Index r = 0; r < d; ++r)
        if (!C.row(r).isZero()) hb.add(to_big(C.row(r).transpose()));
    }
  }
  if (hb.rank() != target) throw std::logic_error("h1_oracle: cocycle constraints have the wrong rank");
  return finish(integer_kernel(hb.matrix()), cols, U, "h1_oracle");
}

H1Report h1_oracle_full(const FiniteGroup& G, std::size_t bound) {
  if (G.order() > bound) throw BoundExceeded("h1_oracle_full: |G| exceeds bound");
  const int n = G.rank();
  const Index d = n + 2;
  const std::size_t N = G.order();
  const Index U = static_cast<Index>(N) * d;
  const auto& el = G.elements();
  const CoboundaryColumns cols = coboundary_columns(n, el);
  Index rank_b1;
  {
    IntMatrix C(n + 1, U);
    C.row(0) = cols.f_minus1.transpose();
    for (int i = 0; i < n; ++i) C.row(i + 1) = cols.f[i].transpose();
    rank_b1 = integer_rank(C);
  }
  const Index target = U - rank_b1;
  const auto T = multiplication_table(G);
  HermiteBuilder<BigInt> hb(U);
  for (std::size_t a = 0; a < N && hb.rank() < target; ++a) {
    const LMat P = phi_ll(el[a]);
    for (std::size_t b = 0; b < N && hb.rank() < target; ++b) {
      // f(ab) - f(a) - a.f(b) = 0
      const std::size_t ab = T[a * N + b];
      for (Index r = 0; r < d; ++r) {
        IntVector row = IntVector::Zero(U);
        row[static_cast<Index>(ab) * d + r] += 1;
        row[static_cast<Index>(a) * d + r] -= 1;
        for (Index c = 0; c < d; ++c)
          if (P(r, c)) row[static_cast<Index>(b) * d + c] -= P(r, c);
        if (!row.isZero()) hb.add(std::move(row));
      }
    }
  }
  if (hb.rank() != target) throw std::logic_error("h1_oracle_full: cocycle constraints have the wrong rank");
  return finish(integer_kernel(hb.matrix()), cols, U, "h1_oracle_full");
}

H1Report h1_cyclic(const SignedPerm& g) {
  if (sigma(g) != 1) throw std::domain_error("h1_cyclic: element is not in W(D_n)");
  H1Report r;
  r.method = H1Method::cyclic_formula;
  r.f2_rank = std::max(lambda_count(g) - 2, 0);
  r.invariant_factors.assign(r.f2_rank, BigInt(2));
  return r;
}

CyclicCondition h1_condition_cyclic(const SignedPerm& g) {
  if (sigma(g) != 1) throw std::domain_error("h1_condition_cyclic: element is not in W(D_n)");
  CyclicCondition c;
  const int o = g.order();
  SignedPerm x = g;
  for (int i = 1; i < o; ++i, x = x * g) {
    int lam = lambda_count(x);
    if (lam != 0 && lam != 2) {
      c.failing_power = i;
      return c;
    }
  }
  c.holds = true;
  std::vector<std::size_t> odd;
  for (const auto& cyc : signed_cycles(g))
    if (cyc.sigma() < 0) odd.push_back(cyc.support.size());
  std::sort(odd.begin(), odd.end());
  if (odd.empty())
    c.type = 3;
  else if (odd == std::vector<std::size_t>{1, 1})
    c.type = 1;
  else if (odd == std::vector<std::size_t>{1, 2})
    c.type = 2;
  return c;
}

H1Report h1_halfsum(const FiniteGroup& G) { return h1_halfsum(G, G.generators()); }

H1Report h1_halfsum(const FiniteGroup& G, const std::vector<SignedPerm>& gens) {
  const int n = G.rank();
  for (const auto& g : gens)
    if (!G.contains(g)) throw std::invalid_argument("h1_halfsum: generator outside the group");
  const CoboundaryColumns cols = coboundary_columns(n, gens);
  const Index U = static_cast<Index>(gens.size()) * (n + 2);
  if (U == 0) return trivial_report(H1Method::halfsum);

  // orbits of pr(G) on 1..n
  std::vector<std::vector<int>> orbs;
  {
    std::vector<int> seen(n + 1, 0);
    for (const auto& o : symbol_orbits(n, G.generators())) {
      std::vector<int> idx;
      for (int s : o)
        if (!seen[symbol_index(s)]) {
          seen[symbol_index(s)] = 1;
          idx.push_back(symbol_index(s));
        }
      if (!idx.empty()) {
        std::sort(idx.begin(), idx.end());
        orbs.push_back(std::move(idx));
      }
    }
  }
  const int k = static_cast<int>(orbs.size());
  if (k > 20) throw BoundExceeded("h1_halfsum: too many orbits");
  std::vector<IntVector> orbit_sum(k, IntVector::Zero(U));
  for (int o = 0; o < k; ++o)
    for (int i : orbs[o]) orbit_sum[o] += cols.f[i - 1];

  const LatticeBasis<BigInt> F = LatticeBasis<BigInt>::from_vectors(U, cols.f);
  H1Report r;
  r.method = H1Method::halfsum;
  r.f_minus1_in_span = lattice_member(F, cols.f_minus1).has_value();

  // V = unions with an even coboundary sum; K = those whose half lies in F
  auto basis_insert = [](std::vector<std::uint32_t>& basis, std::uint32_t v) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (!v) return false;
    basis.push_back(v);
    std::sort(basis.rbegin(), basis.rend());
    return true;
  };
  std::vector<std::uint32_t> V, kbasis, vbasis;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    IntVector s = IntVector::Zero(U);
    for (int o = 0; o < k; ++o)
      if (mask >> o & 1) s += orbit_sum[o];
    bool even = true;
    for (Index i = 0; i < U && even; ++i) even = s[i] % 2 == 0;
    if (!even) continue;
    V.push_back(mask);
    basis_insert(vbasis, mask);
    if (lattice_member(F, IntVector(s / 2))) basis_insert(kbasis, mask);
  }
  const int image = static_cast<int>(vbasis.size() - kbasis.size());

  auto indices = [&](std::uint32_t mask) {
    std::vector<int> I;
    for (int o = 0; o < k; ++o)
      if (mask >> o & 1) I.insert(I.end(), orbs[o].begin(), orbs[o].end());
    std::sort(I.begin(), I.end());
    return I;
  };
  std::vector<std::pair<std::vector<int>, std::uint32_t>> cand;
  for (auto mask : V) cand.emplace_back(indices(mask), mask);
  std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<std::uint32_t> span = kbasis;
  for (const auto& [I, mask] : cand)
    if (basis_insert(span, mask)) r.witnesses.push_back(I);

  r.z1_mod_f_rank = image;
  r.f2_rank = image - (*r.f_minus1_in_span ? 0 : 1);
  if (r.f2_rank < 0) throw std::logic_error("h1_halfsum: negative rank");
  r.invariant_factors.assign(r.f2_rank, BigInt(2));
  return r;
}

H1Condition h1_condition(const FiniteGroup& G, H1Route route, std::size_t bound) {
  H1Condition res;
  const FiniteGroup P = route == H1Route::sylow2 ? sylow2(G) : G;
  // cyclic subgroups first, straight from the elements
  for (const auto& g : P.elements()) {
    if (lambda_count(g) <= 2) continue;
    FiniteGroup C = closure(P.rank(), {g});
    if (h1_oracle(C, C.order()).f2_rank == 0) throw std::logic_error("h1_condition: cyclic formula disagrees with oracle");
    res.verdict = Verdict::fails;
    res.witness = std::move(C);
    return res;
  }
  if (P.order() > bound) {
    res.note = "subgroup enumeration bound exceeded (|P| = " + std::to_string(P.order()) + ")";
    return res;
  }
  const SubgroupList subs = all_subgroups(P, bound, SubgroupMode::up_to_parent_conjugacy);
  for (const auto& H : subs.subgroups) {
    if (H.order() == 1) continue;
    if (h1_oracle(H, H.order()).f2_rank > 0) {
      res.verdict = Verdict::fails;
      res.witness = H;
      return res;
    }
  }
  res.verdict = Verdict::holds;
  return res;
}

}  // namespace conic
