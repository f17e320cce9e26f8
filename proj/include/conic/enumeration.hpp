#pragma once

// Conjugacy classes of subgroups of W(D_n) that satisfy (H1) and the
// fibre-pair condition, and the tables of such groups for n = 4..9.

#include <optional>
#include <string>
#include <vector>

#include "conic/classes.hpp"
#include "conic/groups.hpp"

namespace conic {

enum class EnumMode { full, generator_guided };
std::string to_string(EnumMode m);

struct EnumeratedGroup {
  FiniteGroup group;
  std::optional<CanonicalKey> key;
  GroupDescription description;
  std::string name;
  std::vector<int> orbit_profile;
  std::string table_row;  // empty when no row matches
  std::optional<ClassSpec> matched_class;
};

struct EnumerationStats {
  std::size_t classes_explored = 0;  // conjugacy classes of subgroups visited
  std::size_t closures = 0;
  std::size_t conjugacy_tests = 0;
  double seconds = 0;
};

struct EnumerationResult {
  int n = 0;
  EnumMode mode = EnumMode::generator_guided;
  std::vector<EnumeratedGroup> passing;
  EnumerationStats stats;
};

// full: n in 4..5; generator_guided: n in 4..7.
EnumerationResult enumerate(int n, EnumMode mode);

// Classes of subgroups of W(D_n) all of whose elements pass the cyclic
// (H1) test, one representative each.
std::vector<FiniteGroup> good_subgroup_classes(int n, EnumerationStats* stats = nullptr);

struct TableRow {
  std::string label;  // e.g. "D6(3)"
  int n = 0;
  std::string name;
  std::optional<ClassSpec> spec;
  std::vector<std::string> fixture;  // generators when no class applies
};

const std::vector<TableRow>& table_rows(int n);
FiniteGroup table_group(const TableRow& row);

struct RowCheck {
  TableRow row;
  std::size_t order = 0;
  bool rank_ok = false;
  Verdict h1 = Verdict::unknown;
  bool relmin_ok = false;
  bool fiber_pair_ok = false;
  bool distinct = false;
  bool ok() const { return rank_ok && h1 == Verdict::holds && relmin_ok && fiber_pair_ok && distinct; }
};

struct TableReport {
  int n = 0;
  std::vector<RowCheck> rows;
  bool ok() const;
};

TableReport verify_tables(int n);

// Attach table labels to enumerated groups; returns labels with no match.
std::vector<std::string> match_rows(EnumerationResult& r);

std::string group_name(const FiniteGroup& G, const GroupDescription& d);

}  // namespace conic
