#pragma once

// Exact integer linear algebra over Eigen dense types.  Everything is
// templated on the scalar; BigInt is the instantiation used by the library.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

// Eigen 3.4 matrices declare `const_iterator` as void, which Boost 1.74's
// byte-container probe cannot digest when cpp_int checks convertibility.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace conic {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

using IntMatrix = Mat<BigInt>;
using IntVector = Vec<BigInt>;

template <class S>
S abs_value(const S& a) {
  return a < 0 ? S(-a) : a;
}

template <class S>
S floor_div(const S& a, const S& b) {
  S q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// g = x*a + y*b with g >= 0.
template <class S>
struct Egcd {
  S g, x, y;
};

template <class S>
Egcd<S> egcd(S a, S b) {
  S x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    S q = a / b;
    S r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    S t = x0 - q * x1;
    x0 = std::move(x1);
    x1 = std::move(t);
    t = y0 - q * y1;
    y0 = std::move(y1);
    y1 = std::move(t);
  }
  if (a < 0) return {S(-a), S(-x0), S(-y0)};
  return {a, x0, y0};
}

// Incremental row-style Hermite normal form.  Rows are fed one at a time;
// matrix() returns the nonzero HNF rows with strictly increasing pivot
// columns, positive pivots and entries above each pivot reduced to [0, pivot).
template <class S>
class HermiteBuilder {
 public:
  explicit HermiteBuilder(Index cols) : cols_(cols), rows_(static_cast<size_t>(cols)) {}

  Index cols() const { return cols_; }
  Index rank() const { return rank_; }

  // Returns true when the rank grew.
  bool add(Vec<S> r) {
    if (r.size() != cols_) throw std::invalid_argument("HermiteBuilder: row length mismatch");
    Index c = 0;
    while (true) {
      while (c < cols_ && r[c] == 0) ++c;
      if (c == cols_) return false;
      Vec<S>& b = rows_[static_cast<size_t>(c)];
      if (b.size() == 0) {
        if (r[c] < 0) r = -r;
        b = std::move(r);
        tidy(c);
        ++rank_;
        return true;
      }
      if (r[c] % b[c] == 0) {
        S q = r[c] / b[c];
        r -= q * b;
        continue;
      }
      Egcd<S> e = egcd(b[c], r[c]);
      S bs = b[c] / e.g;
      S rs = r[c] / e.g;
      Vec<S> nb = e.x * b + e.y * r;
      r = rs * b - bs * r;
      b = std::move(nb);
      tidy(c);
    }
  }

  template <class Derived>
  void add_rows(const Eigen::MatrixBase<Derived>& A) {
    for (Index i = 0; i < A.rows(); ++i) add(A.row(i).transpose());
  }

  std::vector<Index> pivots() const {
    std::vector<Index> p;
    for (Index c = 0; c < cols_; ++c)
      if (rows_[static_cast<size_t>(c)].size() != 0) p.push_back(c);
    return p;
  }

  Mat<S> matrix() const {
    std::vector<Index> piv = pivots();
    Mat<S> H(static_cast<Index>(piv.size()), cols_);
    for (size_t i = 0; i < piv.size(); ++i)
      H.row(static_cast<Index>(i)) = rows_[static_cast<size_t>(piv[i])].transpose();
    for (size_t i = 0; i < piv.size(); ++i) {
      const Index pc = piv[i];
      const S p = H(static_cast<Index>(i), pc);
      for (size_t j = 0; j < i; ++j) {
        S q = floor_div(H(static_cast<Index>(j), pc), p);
        if (q != 0) H.row(static_cast<Index>(j)) -= q * H.row(static_cast<Index>(i));
      }
    }
    return H;
  }

 private:
  // keep the entries of the pivot row at column c small against later pivots
  void tidy(Index c) {
    Vec<S>& b = rows_[static_cast<size_t>(c)];
    for (Index k = c + 1; k < cols_; ++k) {
      const Vec<S>& piv = rows_[static_cast<size_t>(k)];
      if (piv.size() == 0 || b[k] == 0) continue;
      S q = floor_div(b[k], piv[k]);
      if (q != 0) b -= q * piv;
    }
  }

  Index cols_;
  Index rank_ = 0;
  std::vector<Vec<S>> rows_;  // indexed by pivot column; empty when absent
};

template <class S>
Mat<S> hermite_normal_form(const Mat<S>& A) {
  HermiteBuilder<S> hb(A.cols());
  hb.add_rows(A);
  return hb.matrix();
}

template <class S>
Index integer_rank(const Mat<S>& A) {
  HermiteBuilder<S> hb(A.cols());
  hb.add_rows(A);
  return hb.rank();
}

template <class T>
struct SmithForm {
  Mat<T> S;  // diagonal
  Mat<T> U;
  Mat<T> V;

  std::vector<T> diagonal() const {
    std::vector<T> d;
    for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

// U * A * V = S with d_1 | d_2 | ... .  Pivot: smallest nonzero magnitude,
// scanning columns left to right and rows top to bottom.
template <class S>
SmithForm<S> smith_normal_form(const Mat<S>& A) {
  const Index r = A.rows(), c = A.cols();
  Mat<S> D = A;
  Mat<S> U = Mat<S>::Identity(r, r);
  Mat<S> V = Mat<S>::Identity(c, c);
  const Index m = std::min(r, c);
  for (Index k = 0; k < m; ++k) {
    while (true) {
      Index pi = -1, pj = -1;
      S best = 0;
      for (Index j = k; j < c; ++j)
        for (Index i = k; i < r; ++i) {
          if (D(i, j) == 0) continue;
          S a = abs_value(D(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) return {D, U, V};
      if (pi != k) {
        D.row(pi).swap(D.row(k));
        U.row(pi).swap(U.row(k));
      }
      if (pj != k) {
        D.col(pj).swap(D.col(k));
        V.col(pj).swap(V.col(k));
      }
      bool clean = true;
      const S p = D(k, k);
      for (Index i = k + 1; i < r; ++i) {
        if (D(i, k) == 0) continue;
        S q = D(i, k) / p;
        D.row(i) -= q * D.row(k);
        U.row(i) -= q * U.row(k);
        if (D(i, k) != 0) clean = false;
      }
      for (Index j = k + 1; j < c; ++j) {
        if (D(k, j) == 0) continue;
        S q = D(k, j) / p;
        D.col(j) -= q * D.col(k);
        V.col(j) -= q * V.col(k);
        if (D(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      Index bad = -1;
      for (Index i = k + 1; i < r && bad < 0; ++i)
        for (Index j = k + 1; j < c; ++j)
          if (D(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      D.row(k) += D.row(bad);
      U.row(k) += U.row(bad);
    }
    if (D(k, k) < 0) {
      D.row(k) = -D.row(k);
      U.row(k) = -U.row(k);
    }
  }
  return {D, U, V};
}

template <class S>
class LatticeBasis {
 public:
  explicit LatticeBasis(Index ambient_dim) : dim_(ambient_dim), basis_(0, ambient_dim) {}

  // generators are the rows of G; need not be independent
  LatticeBasis(Index ambient_dim, const Mat<S>& G) : dim_(ambient_dim) {
    if (G.rows() > 0 && G.cols() != ambient_dim)
      throw std::invalid_argument("LatticeBasis: dimension mismatch");
    basis_ = G.rows() > 0 ? hermite_normal_form(G) : Mat<S>(0, ambient_dim);
  }

  static LatticeBasis from_vectors(Index ambient_dim, const std::vector<Vec<S>>& vs) {
    Mat<S> G(static_cast<Index>(vs.size()), ambient_dim);
    for (size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].size() != ambient_dim) throw std::invalid_argument("LatticeBasis: dimension mismatch");
      G.row(static_cast<Index>(i)) = vs[i].transpose();
    }
    return LatticeBasis(ambient_dim, G);
  }

  static LatticeBasis full(Index ambient_dim) {
    return LatticeBasis(ambient_dim, Mat<S>::Identity(ambient_dim, ambient_dim));
  }

  Index ambient_dim() const { return dim_; }
  Index rank() const { return basis_.rows(); }
  const Mat<S>& basis() const { return basis_; }

  Index pivot(Index row) const {
    for (Index j = 0; j < dim_; ++j)
      if (basis_(row, j) != 0) return j;
    return dim_;
  }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.dim_ == b.dim_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  Index dim_;
  Mat<S> basis_;
};

// Coefficients with respect to L.basis() when v lies in the span.
template <class S>
std::optional<Vec<S>> lattice_member(const LatticeBasis<S>& L, const Vec<S>& v) {
  if (v.size() != L.ambient_dim()) throw std::invalid_argument("lattice_member: dimension mismatch");
  Vec<S> r = v;
  Vec<S> coeff(L.rank());
  for (Index i = 0; i < L.rank(); ++i) {
    const Index p = L.pivot(i);
    const S& b = L.basis()(i, p);
    if (r[p] % b != 0) return std::nullopt;
    coeff[i] = r[p] / b;
    if (coeff[i] != 0) r -= coeff[i] * L.basis().row(i).transpose();
  }
  for (Index j = 0; j < r.size(); ++j)
    if (r[j] != 0) return std::nullopt;
  return coeff;
}

template <class S>
bool lattice_equal(const LatticeBasis<S>& a, const LatticeBasis<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("lattice_equal: dimension mismatch");
  return a == b;
}

// Saturated basis of {v : A v = 0}.
template <class S>
LatticeBasis<S> integer_kernel(const Mat<S>& A) {
  const Index c = A.cols();
  const Mat<S> H = A.rows() > 0 ? hermite_normal_form(A) : Mat<S>(0, c);
  const Index k = H.rows();
  HermiteBuilder<S> hb(k + c);
  for (Index j = 0; j < c; ++j) {
    Vec<S> row = Vec<S>::Zero(k + c);
    row.head(k) = H.col(j);
    row[k + j] = 1;
    hb.add(std::move(row));
  }
  const Mat<S> T = hb.matrix();
  std::vector<Vec<S>> ker;
  for (Index i = 0; i < T.rows(); ++i) {
    bool zero_left = true;
    for (Index j = 0; j < k; ++j)
      if (T(i, j) != 0) {
        zero_left = false;
        break;
      }
    if (zero_left) ker.push_back(T.row(i).tail(c).transpose());
  }
  return LatticeBasis<S>::from_vectors(c, ker);
}

template <class S>
struct QuotientInvariants {
  std::vector<S> torsion;  // invariant factors > 1
  Index free_rank = 0;
};

// Structure of Z/B for lattices B ⊆ Z.
template <class S>
QuotientInvariants<S> quotient_invariants(const LatticeBasis<S>& Z, const LatticeBasis<S>& B) {
  if (Z.ambient_dim() != B.ambient_dim()) throw std::invalid_argument("quotient_invariants: dimension mismatch");
  Mat<S> C(B.rank(), Z.rank());
  for (Index i = 0; i < B.rank(); ++i) {
    auto coeff = lattice_member(Z, Vec<S>(B.basis().row(i).transpose()));
    if (!coeff) throw std::domain_error("quotient_invariants: B is not contained in Z");
    C.row(i) = coeff->transpose();
  }
  QuotientInvariants<S> q;
  Index nonzero = 0;
  if (C.rows() > 0 && C.cols() > 0) {
    for (const S& d : smith_normal_form(C).diagonal()) {
      if (d == 0) continue;
      ++nonzero;
      if (d > 1) q.torsion.push_back(d);
    }
  }
  q.free_rank = Z.rank() - nonzero;
  return q;
}

}  // namespace conic
