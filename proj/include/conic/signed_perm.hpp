#pragma once

// Signed permutations: elements of W(B_n), written c_{j1}...c_{jt}·τ.
// Products compose right to left: (a*b)(x) = a(b(x)).

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conic {

inline constexpr int kMaxRank = 32;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Symbols j^+ / j^- are encoded as 2(j-1) and 2(j-1)+1.
inline int symbol(int j, bool minus) { return 2 * (j - 1) + (minus ? 1 : 0); }
inline int symbol_index(int s) { return s / 2 + 1; }
inline bool symbol_minus(int s) { return (s & 1) != 0; }

class SignedPerm {
 public:
  SignedPerm() = default;

  static SignedPerm identity(int n);
  static SignedPerm sign_change(int n, int j);
  static SignedPerm cycle(int n, std::span<const int> support);
  // signed[i-1] = ±τ(i), negative when the image index carries a c factor
  static SignedPerm from_signed_images(int n, std::span<const int> signed_images);

  int rank() const { return n_; }
  int image(int j) const { return p_[j - 1] < 0 ? -p_[j - 1] : p_[j - 1]; }
  int signed_image(int j) const { return p_[j - 1]; }
  int preimage(int j) const;
  // ±1: whether c_j occurs in the normal form c_{j1}...c_{jt}·τ
  int sign(int j) const { return p_[preimage(j) - 1] < 0 ? -1 : 1; }
  int minus_count() const;

  bool is_identity() const;

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
  SignedPerm inverse() const;
  SignedPerm pow(long long k) const;
  int order() const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.n_ == b.n_ && a.p_ == b.p_;
  }
  // (sign vector, image vector) lexicographically, '+' before '-'
  friend std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b);

  std::size_t hash() const;
  // packs 5 bits per index; valid for rank <= 12
  std::uint64_t code() const;

 private:
  std::int8_t n_ = 0;
  std::array<std::int8_t, kMaxRank> p_{};
};

struct SignedCycle {
  std::vector<int> support;        // cycle of pr(g), starting at its smallest index
  std::vector<int> minus_indices;  // sorted
  bool trivial() const { return support.size() == 1 && minus_indices.empty(); }
  int sigma() const { return minus_indices.size() % 2 ? -1 : 1; }
};

SignedPerm parse(std::string_view text, int n);
std::string format(const SignedPerm& a);

SignedPerm multiply(const SignedPerm& a, const SignedPerm& b);
int sigma(const SignedPerm& a);
std::vector<SignedCycle> signed_cycles(const SignedPerm& a);
SignedPerm from_cycles(int n, const std::vector<SignedCycle>& cycles);
int lambda_count(const SignedPerm& a);
SignedPerm conjugate(const SignedPerm& a, const SignedPerm& t);  // t a t^-1
int act_symbol(const SignedPerm& a, int s);

// Sorted (length, odd) pairs of the non-trivial signed cycles; a complete
// conjugacy invariant in W(B_n).
std::vector<std::pair<int, int>> signed_cycle_type(const SignedPerm& a);

}  // namespace conic

template <>
struct std::hash<conic::SignedPerm> {
  std::size_t operator()(const conic::SignedPerm& g) const noexcept { return g.hash(); }
};
