#include <doctest.h>

#include "conic/signed_perm.hpp"
#include "support.hpp"

using namespace conic;
using testing_support::random_element;

TEST_CASE("parse and format") {
  CHECK(format(parse("(1,2) c1", 4)) == "c2 (1,2)");
  CHECK(format(parse("c1 c2 (1,2)(3,4)", 6)) == "c1 c2 (1,2) (3,4)");
  CHECK(format(parse("", 3)).empty());
  CHECK(parse("c3 c3", 3) == SignedPerm::identity(3));
  CHECK(parse("(1,2,3)", 3) == parse("(2,3,1)", 3));
  CHECK_THROWS_AS(parse("(1,5)", 4), ParseError);
  CHECK_THROWS_AS(parse("(1,1)", 4), ParseError);
  CHECK_THROWS_AS(parse("x1", 4), ParseError);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + t % 9;
    SignedPerm g = random_element(n, false);
    CHECK(parse(format(g), n) == g);
  }
}

TEST_CASE("products act on symbols right to left") {
  for (int t = 0; t < 500; ++t) {
    int n = 2 + t % 8;
    SignedPerm a = random_element(n, false), b = random_element(n, false);
    SignedPerm ab = a * b;
    for (int s = 0; s < 2 * n; ++s) CHECK(act_symbol(ab, s) == act_symbol(a, act_symbol(b, s)));
    CHECK(a * a.inverse() == SignedPerm::identity(n));
    CHECK(sigma(ab) == sigma(a) * sigma(b));
  }
}

TEST_CASE("c_j is the symbol swap j+ <-> j-") {
  SignedPerm c2 = SignedPerm::sign_change(3, 2);
  CHECK(act_symbol(c2, symbol(2, false)) == symbol(2, true));
  CHECK(act_symbol(c2, symbol(1, false)) == symbol(1, false));
}

TEST_CASE("signed cycles recompose and give lambda") {
  for (int t = 0; t < 300; ++t) {
    int n = 1 + t % 9;
    SignedPerm g = random_element(n, false);
    CHECK(from_cycles(n, signed_cycles(g)) == g);
    int odd = 0;
    for (const auto& c : signed_cycles(g)) odd += c.sigma() == -1;
    CHECK(lambda_count(g) == odd);
    // order: lcm of cycle lengths, doubled for odd cycles
    long long ord = 1;
    for (const auto& c : signed_cycles(g)) ord = std::lcm(ord, (long long)c.support.size() * (c.sigma() == -1 ? 2 : 1));
    CHECK(g.order() == ord);
  }
  CHECK(lambda_count(parse("c1 c2 c3 c4", 4)) == 4);
  CHECK(lambda_count(parse("c1 (1,2)", 4)) == 1);
}

TEST_CASE("cycle type is a conjugacy invariant") {
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 7;
    SignedPerm a = random_element(n, false), s = random_element(n, false);
    CHECK(signed_cycle_type(conjugate(a, s)) == signed_cycle_type(a));
    CHECK(conjugate(a, s) == s * a * s.inverse());
  }
}
