#include <doctest.h>

#include <set>

#include "conic/cohomology.hpp"
#include "conic/enumeration.hpp"

using namespace conic;

namespace {

std::set<CanonicalKey> keys(const EnumerationResult& r) {
  std::set<CanonicalKey> k;
  for (const auto& e : r.passing) k.insert(*e.key);
  return k;
}

}  // namespace

TEST_CASE("rank 4 and 5, both modes") {
  for (int n : {4, 5}) {
    EnumerationResult a = enumerate(n, EnumMode::full), b = enumerate(n, EnumMode::generator_guided);
    CHECK(keys(a) == keys(b));
    CHECK(a.passing.size() == table_rows(n).size());
    CHECK(match_rows(b).empty());
    for (const auto& e : b.passing) CHECK_FALSE(e.table_row.empty());
  }
  EnumerationResult r = enumerate(4, EnumMode::generator_guided);
  REQUIRE(r.passing.size() == 1);
  CHECK(r.passing[0].group.order() == 6);
}

TEST_CASE("table sizes") {
  std::vector<std::size_t> sizes;
  for (int n = 4; n <= 9; ++n) sizes.push_back(table_rows(n).size());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 15, 10, 4, 13});
  CHECK_THROWS_AS(table_rows(3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(6, EnumMode::full), std::invalid_argument);
}

TEST_CASE("rows for ranks 8 and 9") {
  for (int n : {8, 9}) {
    TableReport T = verify_tables(n);
    for (const auto& c : T.rows) {
      CAPTURE(c.row.label);
      CHECK(c.ok());
    }
  }
}

TEST_CASE("missing fixture is an error") {
  TableRow r{"X", 6, "S_4", std::nullopt, {}};
  CHECK_THROWS_AS(table_group(r), std::invalid_argument);
}

// Experiment only: a conjectured family whose first member should be one of
// the unlabelled S_4 rows.
TEST_CASE("conjectured S_4 family, first member") {
  std::vector<SignedPerm> g{parse("c1 c2 c3 c4 c5 c6 (2,3)(5,6)", 6), parse("(1,2,3)(4,5,6)", 6),
                            parse("(1,4)(2,5)", 6), parse("(1,4)(3,6)", 6)};
  FiniteGroup G = closure(6, g);
  CHECK(G.order() == 24);
  CHECK(h1_condition(G).verdict == Verdict::holds);
  CanonicalKey k = canonical_form(G, 4096);
  std::string hit;
  for (const auto& row : table_rows(6))
    if (canonical_form(table_group(row), 4096) == k) hit = row.label;
  MESSAGE("conjectured family n=1 matches row " << (hit.empty() ? "none" : hit));
  CHECK_FALSE(hit.empty());
}
