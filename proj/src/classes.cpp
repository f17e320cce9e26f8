#include "conic/classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "conic/conditions.hpp"

namespace conic {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// polynomials over Z/p, constant term first, no trailing zeros
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  int inv = 1;
  while (m.back() * inv % p != 1) ++inv;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int f = a.back() * inv % p;
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - f * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& h, int p) {
  const int r = static_cast<int>(h.size()) - 1;
  // try every monic divisor of degree 1..r/2
  for (int d = 1; 2 * d <= r; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly m(d + 1);
      for (int i = 0, c = code; i < d; ++i, c /= p) m[i] = c % p;
      m[d] = 1;
      if (poly_mod(h, m, p).empty()) return false;
    }
  }
  return true;
}

Poly decode(int e, int p, int r) {
  Poly a(r);
  for (int i = 0; i < r; ++i, e /= p) a[i] = e % p;
  trim(a);
  return a;
}

int encode(const Poly& a, int p) {
  int e = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) e = e * p + a[i];
  return e;
}

}  // namespace

FieldLabeling field_labeling(int p, int r) {
  if (!is_odd_prime(p)) throw std::invalid_argument("field_labeling: p must be an odd prime");
  if (r < 1) throw std::invalid_argument("field_labeling: r must be positive");
  int q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > 4096) throw std::invalid_argument("field_labeling: field too large");
  }
  FieldLabeling F;
  F.p = p;
  F.r = r;
  F.q = q;
  // ascending-coefficient order: compare constant term first
  for (int code = 0; code < q; ++code) {
    Poly h(r + 1);
    for (int i = 0, c = code; i < r; ++i, c /= p) h[i] = c % p;
    h[r] = 1;
    if (irreducible(h, p)) {
      F.modulus = h;
      break;
    }
  }
  auto lab = [q](int e) { return e == 0 ? q : e; };
  F.mul.assign(q + 1, std::vector<int>(q + 1, 0));
  F.add_one.assign(q + 1, 0);
  for (int a = 0; a < q; ++a) {
    Poly pa = decode(a, p, r);
    Poly one = pa;
    if (one.empty()) one.push_back(0);
    one[0] = (one[0] + 1) % p;
    trim(one);
    F.add_one[lab(a)] = lab(encode(one, p));
    for (int b = 0; b < q; ++b) {
      Poly pb = decode(b, p, r);
      Poly prod(pa.size() + pb.size() + 1, 0);
      for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      F.mul[lab(a)][lab(b)] = lab(encode(poly_mod(prod, F.modulus, p), p));
    }
  }
  for (int g = 1; g < q; ++g) {
    int x = g, k = 1;
    while (x != 1) {
      x = F.mul[x][g];
      ++k;
    }
    if (k == q - 1) {
      F.gamma = g;
      break;
    }
  }
  return F;
}

std::string to_string(const ClassSpec& s) {
  std::string out = "class " + std::to_string(s.id);
  for (const auto& k : class_parameters(s.id)) {
    int v = k == "n" ? s.n : k == "n1" ? s.n1 : k == "n2" ? s.n2 : k == "n3" ? s.n3 : k == "p" ? s.p : s.r;
    out += " " + k + "=" + std::to_string(v);
  }
  return out;
}

std::vector<std::string> class_parameters(int id) {
  switch (id) {
    case 1: case 9: case 10: case 11: case 12: case 13: case 15: case 18: case 23: case 24:
      return {"n"};
    case 2: case 14: case 16: case 17: case 19:
      return {"p", "r"};
    case 3: case 5: case 7: case 21: case 22:
      return {"n1", "n2"};
    case 4: case 6: case 8:
      return {"n", "p", "r"};
    case 20:
      return {"n1", "n2", "n3"};
  }
  throw std::invalid_argument("class id must be in 1..24");
}

namespace {

// Generator builders on rank N.  Offsets b shift a block so it starts at b+1.
struct Builder {
  int N;

  SignedPerm id() const { return SignedPerm::identity(N); }
  SignedPerm c(int j) const { return SignedPerm::sign_change(N, j); }
  SignedPerm cs(int a, int b) const {
    SignedPerm g = id();
    for (int j = a; j <= b; ++j) g = g * c(j);
    return g;
  }
  SignedPerm cyc(std::vector<int> s) const { return SignedPerm::cycle(N, s); }
  // (b+2,b+3)(b+4,b+5)...(b+2n,b+2n+1)
  SignedPerm refl(int b, int n) const {
    SignedPerm g = id();
    for (int k = 1; k <= n; ++k) g = g * cyc({b + 2 * k, b + 2 * k + 1});
    return g;
  }
  // (b+1,b+2,b+4,...,b+2n,b+2n+1,b+2n-1,...,b+3)
  SignedPerm rot(int b, int n) const {
    std::vector<int> s{b + 1};
    for (int k = 1; k <= n; ++k) s.push_back(b + 2 * k);
    for (int k = n; k >= 1; --k) s.push_back(b + 2 * k + 1);
    return cyc(s);
  }
  // (b1+1,b2+1)...(b1+len,b2+len)
  SignedPerm swap(int b1, int b2, int len) const {
    SignedPerm g = id();
    for (int i = 1; i <= len; ++i) g = g * cyc({b1 + i, b2 + i});
    return g;
  }
  SignedPerm from_labels(const FieldLabeling& F, int off, const std::vector<int>& next) const {
    std::vector<int> img(N);
    std::iota(img.begin(), img.end(), 1);
    for (int l = 1; l <= F.q; ++l) img[off + l - 1] = off + next[l];
    return SignedPerm::from_signed_images(N, img);
  }
  // (1, lab Γ, lab Γ^2, ...) shifted by off
  SignedPerm gamma_cycle(const FieldLabeling& F, int off) const {
    std::vector<int> next(F.q + 1);
    for (int l = 1; l <= F.q; ++l) next[l] = F.mul[l][F.gamma];
    return from_labels(F, off, next);
  }
  SignedPerm translation(const FieldLabeling& F, int off) const { return from_labels(F, off, F.add_one); }

  // dihedral block on off+1..off+2n+1 with its extra index s
  std::pair<SignedPerm, SignedPerm> dihedral(int off, int n, int s) const {
    return {cs(off + 1, off + 2 * n + 1) * c(s) * refl(off, n), rot(off, n)};
  }
  // Frobenius block on off+1..off+q with its extra index s
  std::pair<SignedPerm, SignedPerm> frobenius(const FieldLabeling& F, int off, int s) const {
    return {cs(off + 1, off + F.q) * c(s) * gamma_cycle(F, off), translation(F, off)};
  }
};

// forget the last index, which the element must fix with a plus sign
SignedPerm drop_last(const SignedPerm& g) {
  const int N = g.rank();
  if (g.signed_image(N) != N) throw std::logic_error("drop_last: last index is moved");
  std::vector<int> img;
  for (int i = 1; i < N; ++i) img.push_back(g.signed_image(i));
  return SignedPerm::from_signed_images(N - 1, img);
}

void need_positive(std::initializer_list<int> xs) {
  for (int x : xs)
    if (x < 1) throw std::invalid_argument("class parameters must be positive");
}

}  // namespace

ClassInstance class_generators(const ClassSpec& spec) {
  ClassInstance I;
  I.spec = spec;
  const int id = spec.id;
  class_parameters(id);  // validates id
  const auto P = class_parameters(id);
  const bool uses_n = std::find(P.begin(), P.end(), "n") != P.end();
  const bool uses_field = std::find(P.begin(), P.end(), "p") != P.end();
  const bool uses_n12 = std::find(P.begin(), P.end(), "n1") != P.end();
  if (uses_n) need_positive({spec.n});
  if (uses_n12) need_positive({spec.n1, spec.n2});
  if (id == 20) need_positive({spec.n3});
  FieldLabeling F;
  int q = 0;
  if (uses_field) {
    F = field_labeling(spec.p, spec.r);
    q = F.q;
  }
  const int n = spec.n, n1 = spec.n1, n2 = spec.n2, n3 = spec.n3;

  auto rank_of = [&]() -> int {
    switch (id) {
      case 1: return 2 * n + 2;
      case 2: return q + 1;
      case 3: return 2 * n1 + 2 * n2 + 3;
      case 4: return 2 * n + q + 2;
      case 5: case 7: return 2 * n1 + 2 * n2 + 2;
      case 6: case 8: return 2 * n + 1 + q;
      case 9: case 10: case 11: return 2 * n + 3;
      case 12: case 13: return 4 * n + 2;
      case 14: case 16: case 17: case 19: return q + 2;
      case 15: case 18: return 4 * n + 3;
      case 20: return 2 * n1 + 2 * n2 + 2 * n3 + 3;
      case 21: case 22: return 4 * n1 + 2 * n2 + 3;
      case 23: case 24: return 6 * n + 3;
    }
    return 0;
  };
  I.N = rank_of();
  // the products in classes 5-8 are formed with the shared index still present
  const int build_rank = (id >= 5 && id <= 8) ? I.N + 1 : I.N;
  if (build_rank > kMaxRank) throw std::invalid_argument("class_generators: rank exceeds " + std::to_string(kMaxRank));
  const Builder B{build_rank};
  auto& g = I.gens;

  switch (id) {
    case 1: {
      auto [a, b] = B.dihedral(0, n, I.N);
      g = {a, b};
      I.expected_orbits = {2 * n + 1, 1};
      I.name = "D_{2n+1}";
      break;
    }
    case 2: {
      auto [a, b] = B.frobenius(F, 0, I.N);
      g = {a, b};
      I.expected_orbits = {q, 1};
      I.name = "F_{p^r}";
      break;
    }
    case 3: case 5: case 7: {
      const int s = build_rank;
      auto [a, b] = B.dihedral(0, n1, s);
      auto [a2, b2] = B.dihedral(2 * n1 + 1, n2, s);
      if (id == 3) {
        g = {a, b, a2, b2};
        I.expected_orbits = {2 * n1 + 1, 2 * n2 + 1, 1};
        I.name = "D_{2n1+1} x D_{2n2+1}";
      } else if (id == 5) {
        g = {drop_last(a * a2), drop_last(b), drop_last(b2)};
        I.expected_orbits = {2 * n1 + 1, 2 * n2 + 1};
        I.name = "C_{2n1+1} : D_{2n2+1}";
      } else {
        g = {drop_last(a * a2), drop_last(b * b2)};
        I.expected_orbits = {2 * n1 + 1, 2 * n2 + 1};
        I.name = "C_{2n1+1} : D_{2n2+1} or D_{2n1+1}";
      }
      break;
    }
    case 4: case 6: case 8: {
      const int s = build_rank;
      auto [a, b] = B.dihedral(0, n, s);
      auto [a2, b2] = B.frobenius(F, 2 * n + 1, s);
      if (id == 4) {
        g = {a, b, a2, b2};
        I.expected_orbits = {2 * n + 1, q, 1};
        I.name = "D_{2n+1} x F_{p^r}";
      } else if (id == 6) {
        g = {drop_last(a * a2), drop_last(b), drop_last(b2)};
        I.expected_orbits = {2 * n + 1, q};
        I.name = "C_{2n+1} : F_{p^r}";
      } else {
        g = {drop_last(a * a2), drop_last(b * b2)};
        I.expected_orbits = {2 * n + 1, q};
        I.name = "*";
      }
      break;
    }
    case 9:
      g = {B.cs(1, 2 * n + 2) * B.refl(0, n), B.rot(0, n), B.c(2 * n + 2) * B.c(2 * n + 3)};
      I.expected_orbits = {2 * n + 1, 1, 1};
      I.name = "D_{4n+2}";
      break;
    case 10: case 11:
      g = {B.cs(1, 2 * n + 2) * B.refl(0, n) * B.cyc({2 * n + 2, 2 * n + 3}), B.rot(0, n)};
      if (id == 11) g.push_back(B.cyc({2 * n + 2, 2 * n + 3}));
      I.expected_orbits = {2 * n + 1, 2};
      I.name = id == 10 ? "C_{2n+1} : C_4" : "C_{2n+1} : D_4";
      break;
    case 12: case 13: {
      SignedPerm a = B.cs(1, 4 * n + 2) * B.refl(0, n) * B.refl(2 * n + 1, n);
      SignedPerm sw = B.swap(0, 2 * n + 1, 2 * n + 1);
      if (id == 12)
        g = {a, B.rot(0, n) * B.rot(2 * n + 1, n), sw};
      else
        g = {a, B.rot(0, n), B.rot(2 * n + 1, n), sw};
      I.expected_orbits = {4 * n + 2};
      I.name = id == 12 ? "D_{4n+2}" : "(D_{2n+1})^2";
      break;
    }
    case 14: case 16: case 19: {
      SignedPerm a = B.cs(1, q + 1) * B.gamma_cycle(F, 0) * B.cyc({q + 1, q + 2});
      g = {a, B.translation(F, 0)};
      if (id == 16) g.push_back(B.c(q + 1) * B.c(q + 2));
      if (id == 19) {
        g.push_back(B.cyc({q + 1, q + 2}));
        g.push_back(B.c(q + 1) * B.c(q + 2));
      }
      I.expected_orbits = {q, 2};
      I.name = id == 14 ? "F_{p^r} or C_2 x F_{p^r}" : id == 16 ? "C_2 x F_{p^r} or C_{p^r} : C_{2(p^r-1)}" : "C_2^2 : F_{p^r}";
      break;
    }
    case 15: {
      SignedPerm a = B.cs(1, 2 * n + 1) * B.c(4 * n + 3) * B.cyc({1, 2 * n + 2});
      for (int k = 1; k <= n; ++k) a = a * B.cyc({2 * k, 2 * n + 1 + 2 * k, 2 * k + 1, 2 * n + 2 + 2 * k});
      g = {a, B.rot(0, n), B.rot(2 * n + 1, n)};
      I.expected_orbits = {4 * n + 2, 1};
      I.name = "(C_{2n+1} : D_{2n+1}) : C_2";
      break;
    }
    case 17:
      g = {B.cs(1, q + 1) * B.gamma_cycle(F, 0), B.translation(F, 0), B.c(q + 1) * B.c(q + 2)};
      I.expected_orbits = {q, 1, 1};
      I.name = "C_2 x F_{p^r}";
      break;
    case 18:
      g = {B.cs(1, 2 * n + 1) * B.c(4 * n + 3) * B.refl(0, n), B.cs(2 * n + 2, 4 * n + 3) * B.refl(2 * n + 1, n),
           B.swap(0, 2 * n + 1, 2 * n + 1), B.rot(0, n), B.rot(2 * n + 1, n)};
      I.expected_orbits = {4 * n + 2, 1};
      I.name = "D_{2n+1} wr C_2";
      break;
    case 20: {
      const int b2 = 2 * n1 + 1, b3 = 2 * n1 + 2 * n2 + 2;
      g = {B.cs(1, b3) * B.refl(0, n1) * B.refl(b2, n2), B.cs(b2 + 1, I.N) * B.refl(b2, n2) * B.refl(b3, n3),
           B.rot(0, n1), B.rot(b2, n2), B.rot(b3, n3)};
      I.expected_orbits = {2 * n1 + 1, 2 * n2 + 1, 2 * n3 + 1};
      I.name = "(C_{2n1+1} x C_{2n2+1} x C_{2n3+1}) : C_2^2";
      break;
    }
    case 21: {
      // the last 4-cycle is (2n1, 4n1+1, 2n1+1, 4n1+2); n3 in the display is n2
      SignedPerm a = B.cs(2 * n1 + 2, I.N) * B.cyc({1, 2 * n1 + 2});
      for (int k = 1; k <= n1; ++k) a = a * B.cyc({2 * k, 2 * n1 + 1 + 2 * k, 2 * k + 1, 2 * n1 + 2 + 2 * k});
      a = a * B.refl(4 * n1 + 2, n2);
      g = {a, B.rot(0, n1), B.rot(2 * n1 + 1, n1), B.rot(4 * n1 + 2, n2)};
      I.expected_orbits = {4 * n1 + 2, 2 * n2 + 1};
      I.name = "C_{2n1+1}^2 : (C_{2n2+1} : C_4)";
      break;
    }
    case 22: {
      // g4 descends 2n1+1, 2n1-1, ..., 3
      const int b2 = 2 * n1 + 1, b3 = 4 * n1 + 2;
      g = {B.cs(1, b3) * B.refl(0, n1) * B.refl(b2, n1), B.cs(b2 + 1, I.N) * B.refl(b2, n1) * B.refl(b3, n2),
           B.swap(0, b2, b2), B.rot(0, n1), B.rot(b2, n1), B.rot(b3, n2)};
      I.expected_orbits = {4 * n1 + 2, 2 * n2 + 1};
      I.name = "(C_{2n1+1}^2 x C_{2n2+1}) : D_4";
      break;
    }
    case 23: case 24: {
      const int b2 = 2 * n + 1, b3 = 4 * n + 2;
      SignedPerm three = B.id();
      for (int i = 1; i <= 2 * n + 1; ++i) three = three * B.cyc({i, i + b2, i + b3});
      g = {B.cs(1, b3) * B.refl(0, n) * B.refl(b2, n), B.cs(b2 + 1, I.N) * B.refl(b2, n) * B.refl(b3, n)};
      if (id == 24) g.push_back(B.swap(0, b2, b2));
      g.push_back(B.rot(0, n));
      g.push_back(B.rot(b2, n));
      g.push_back(B.rot(b3, n));
      g.push_back(three);
      I.expected_orbits = {6 * n + 3};
      I.name = id == 23 ? "C_{2n+1}^3 : C_2^2 : C_3" : "C_{2n+1}^3 : D_4 : C_3";
      break;
    }
  }
  for (const auto& x : g)
    if (sigma(x) != 1) throw std::logic_error("class_generators: generator outside W(D_N) in " + to_string(spec));
  std::sort(I.expected_orbits.rbegin(), I.expected_orbits.rend());
  return I;
}

ClassReport verify_class(const ClassSpec& spec) {
  ClassReport R;
  R.instance = class_generators(spec);
  const FiniteGroup G = closure(R.instance.N, R.instance.gens);
  R.order = G.order();
  R.sylow2_order = sylow2(G).order();
  R.h1 = h1_condition(G).verdict;
  R.relmin_ok = relative_minimality(G);
  for (const auto& o : orbits(G).orbits) R.orbit_lengths.push_back(static_cast<int>(o.size()));
  std::sort(R.orbit_lengths.rbegin(), R.orbit_lengths.rend());
  R.orbit_profile_ok = R.orbit_lengths == R.instance.expected_orbits && fiber_pair_condition(G);
  return R;
}

std::vector<ClassSpec> small_specs(int id) {
  const auto P = class_parameters(id);
  std::vector<ClassSpec> out;
  auto has = [&](const char* k) { return std::find(P.begin(), P.end(), k) != P.end(); };
  if (has("p") && has("n")) {
    out.push_back({id, 1, 0, 0, 0, 3, 1});
    out.push_back({id, 1, 0, 0, 0, 5, 1});
    out.push_back({id, 2, 0, 0, 0, 3, 1});
  } else if (has("p")) {
    out.push_back({id, 0, 0, 0, 0, 3, 1});
    out.push_back({id, 0, 0, 0, 0, 5, 1});
    out.push_back({id, 0, 0, 0, 0, 3, 2});
  } else if (has("n3")) {
    out.push_back({id, 0, 1, 1, 1});
    out.push_back({id, 0, 1, 1, 2});
  } else if (has("n1")) {
    out.push_back({id, 0, 1, 1});
    out.push_back({id, 0, 1, 2});
    out.push_back({id, 0, 2, 1});
  } else {
    out.push_back({id, 1});
    out.push_back({id, 2});
  }
  return out;
}

}  // namespace conic
