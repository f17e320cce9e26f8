#include "conic/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace conic {

namespace {

void check_rank(int n) {
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("rank out of range");
}

void check_same(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

}  // namespace

SignedPerm SignedPerm::identity(int n) {
  check_rank(n);
  SignedPerm g;
  g.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) g.p_[i] = static_cast<std::int8_t>(i + 1);
  return g;
}

SignedPerm SignedPerm::sign_change(int n, int j) {
  if (j < 1 || j > n) throw std::out_of_range("index out of range");
  SignedPerm g = identity(n);
  g.p_[j - 1] = static_cast<std::int8_t>(-j);
  return g;
}

SignedPerm SignedPerm::cycle(int n, std::span<const int> support) {
  SignedPerm g = identity(n);
  std::array<bool, kMaxRank> seen{};
  for (int x : support) {
    if (x < 1 || x > n) throw std::out_of_range("index out of range");
    if (seen[x - 1]) throw std::invalid_argument("repeated index in cycle");
    seen[x - 1] = true;
  }
  for (size_t k = 0; k < support.size(); ++k)
    g.p_[support[k] - 1] = static_cast<std::int8_t>(support[(k + 1) % support.size()]);
  return g;
}

SignedPerm SignedPerm::from_signed_images(int n, std::span<const int> signed_images) {
  check_rank(n);
  if (static_cast<int>(signed_images.size()) != n) throw std::invalid_argument("image length mismatch");
  SignedPerm g;
  g.n_ = static_cast<std::int8_t>(n);
  std::array<bool, kMaxRank> hit{};
  for (int i = 0; i < n; ++i) {
    int v = signed_images[i];
    int a = v < 0 ? -v : v;
    if (a < 1 || a > n || hit[a - 1]) throw std::invalid_argument("not a signed permutation");
    hit[a - 1] = true;
    g.p_[i] = static_cast<std::int8_t>(v);
  }
  return g;
}

int SignedPerm::preimage(int j) const {
  for (int i = 0; i < n_; ++i)
    if (p_[i] == j || p_[i] == -j) return i + 1;
  throw std::out_of_range("index out of range");
}

int SignedPerm::minus_count() const {
  int t = 0;
  for (int i = 0; i < n_; ++i) t += p_[i] < 0;
  return t;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (p_[i] != i + 1) return false;
  return true;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm r;
  r.n_ = b.n_;
  for (int i = 0; i < b.n_; ++i) {
    int x = b.p_[i];
    r.p_[i] = x > 0 ? a.p_[x - 1] : static_cast<std::int8_t>(-a.p_[-x - 1]);
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    int x = p_[i];
    if (x > 0)
      r.p_[x - 1] = static_cast<std::int8_t>(i + 1);
    else
      r.p_[-x - 1] = static_cast<std::int8_t>(-(i + 1));
  }
  return r;
}

SignedPerm SignedPerm::pow(long long k) const {
  SignedPerm base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  SignedPerm r = identity(n_);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

int SignedPerm::order() const {
  int o = 1;
  for (const auto& c : signed_cycles(*this)) {
    int len = static_cast<int>(c.support.size()) * (c.sigma() < 0 ? 2 : 1);
    o = std::lcm(o, len);
  }
  return o;
}

std::strong_ordering operator<=>(const SignedPerm& a, const SignedPerm& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  std::uint32_t ma = 0, mb = 0;
  for (int i = 0; i < a.n_; ++i) {
    if (a.p_[i] < 0) ma |= 1u << (-a.p_[i] - 1);
    if (b.p_[i] < 0) mb |= 1u << (-b.p_[i] - 1);
  }
  if (ma != mb) {
    std::uint32_t low = (ma ^ mb) & (~(ma ^ mb) + 1);
    return (ma & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  for (int i = 0; i < a.n_; ++i) {
    int ia = a.p_[i] < 0 ? -a.p_[i] : a.p_[i];
    int ib = b.p_[i] < 0 ? -b.p_[i] : b.p_[i];
    if (ia != ib) return ia <=> ib;
  }
  return std::strong_ordering::equal;
}

std::size_t SignedPerm::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n_);
  for (int i = 0; i < n_; ++i) {
    h ^= static_cast<std::uint8_t>(p_[i]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t SignedPerm::code() const {
  std::uint64_t c = 0;
  for (int i = 0; i < n_; ++i) {
    int x = p_[i];
    c = (c << 5) | static_cast<std::uint64_t>(x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1);
  }
  return c;
}

SignedPerm multiply(const SignedPerm& a, const SignedPerm& b) {
  check_same(a, b);
  return a * b;
}

int sigma(const SignedPerm& a) { return a.minus_count() % 2 ? -1 : 1; }

std::vector<SignedCycle> signed_cycles(const SignedPerm& a) {
  const int n = a.rank();
  std::array<bool, kMaxRank> seen{};
  std::vector<SignedCycle> out;
  for (int i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    SignedCycle c;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      c.support.push_back(j);
      int x = a.signed_image(j);
      if (x < 0) c.minus_indices.push_back(-x);
      j = x < 0 ? -x : x;
    }
    std::sort(c.minus_indices.begin(), c.minus_indices.end());
    out.push_back(std::move(c));
  }
  return out;
}

SignedPerm from_cycles(int n, const std::vector<SignedCycle>& cycles) {
  SignedPerm g = SignedPerm::identity(n);
  for (const auto& c : cycles) {
    SignedPerm part = c.support.size() > 1 ? SignedPerm::cycle(n, c.support) : SignedPerm::identity(n);
    for (int j : c.minus_indices) part = SignedPerm::sign_change(n, j) * part;
    g = g * part;
  }
  return g;
}

int lambda_count(const SignedPerm& a) {
  int lam = 0;
  for (const auto& c : signed_cycles(a)) lam += c.sigma() < 0;
  return lam;
}

SignedPerm conjugate(const SignedPerm& a, const SignedPerm& t) {
  check_same(a, t);
  return t * a * t.inverse();
}

int act_symbol(const SignedPerm& a, int s) {
  int j = symbol_index(s);
  if (j < 1 || j > a.rank()) throw std::out_of_range("index out of range");
  int x = a.signed_image(j);
  bool minus = symbol_minus(s) != (x < 0);
  return symbol(x < 0 ? -x : x, minus);
}

std::vector<std::pair<int, int>> signed_cycle_type(const SignedPerm& a) {
  std::vector<std::pair<int, int>> t;
  for (const auto& c : signed_cycles(a))
    if (!c.trivial()) t.emplace_back(static_cast<int>(c.support.size()), c.sigma() < 0 ? 1 : 0);
  std::sort(t.begin(), t.end());
  return t;
}

namespace {

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) throw ParseError("integer too large");
      ++pos;
    }
    if (start == pos) throw ParseError("expected integer at offset " + std::to_string(start));
    return static_cast<int>(v);
  }
};

}  // namespace

SignedPerm parse(std::string_view text, int n) {
  check_rank(n);
  Lexer lx{text};
  SignedPerm g = SignedPerm::identity(n);
  while (!lx.done()) {
    char ch = lx.s[lx.pos];
    if (ch == 'c' || ch == 'C') {
      ++lx.pos;
      int j = lx.integer();
      if (j < 1 || j > n) throw ParseError("index " + std::to_string(j) + " out of range 1.." + std::to_string(n));
      g = g * SignedPerm::sign_change(n, j);
    } else if (ch == '(') {
      ++lx.pos;
      std::vector<int> support{lx.integer()};
      while (true) {
        lx.skip_ws();
        if (lx.pos >= lx.s.size()) throw ParseError("unterminated cycle");
        if (lx.s[lx.pos] == ')') {
          ++lx.pos;
          break;
        }
        // commas separate entries; bare whitespace is tolerated too
        if (lx.s[lx.pos] == ',') ++lx.pos;
        support.push_back(lx.integer());
      }
      if (support.size() < 2) throw ParseError("cycle needs at least two entries");
      std::vector<bool> seen(static_cast<size_t>(n) + 1);
      for (int x : support) {
        if (x < 1 || x > n) throw ParseError("index " + std::to_string(x) + " out of range 1.." + std::to_string(n));
        if (seen[x]) throw ParseError("repeated index " + std::to_string(x) + " in cycle");
        seen[x] = true;
      }
      g = g * SignedPerm::cycle(n, support);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' at offset " + std::to_string(lx.pos));
    }
  }
  return g;
}

std::string format(const SignedPerm& a) {
  std::ostringstream os;
  bool first = true;
  for (int j = 1; j <= a.rank(); ++j)
    if (a.sign(j) < 0) {
      os << (first ? "" : " ") << 'c' << j;
      first = false;
    }
  for (const auto& c : signed_cycles(a)) {
    if (c.support.size() < 2) continue;
    os << (first ? "" : " ") << '(';
    for (size_t k = 0; k < c.support.size(); ++k) os << (k ? "," : "") << c.support[k];
    os << ')';
    first = false;
  }
  return os.str();
}

}  // namespace conic
