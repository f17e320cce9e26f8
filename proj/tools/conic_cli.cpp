// conic: command line front end.  Every subcommand prints one JSON report
// {version, command, input, result, stats} on stdout.
// Exit status: 0 ok, 1 verification failed, 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <set>

#include "conic/classes.hpp"
#include "conic/cohomology.hpp"
#include "conic/conditions.hpp"
#include "conic/enumeration.hpp"
#include "conic/picard.hpp"

using json = nlohmann::ordered_json;
using namespace conic;

namespace {

constexpr const char* kVersion = "0.1.0";

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json big(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<long long>::max()) || x < BigInt(std::numeric_limits<long long>::min()))
    return x.str();  // never happens for the lattices here
  return x.convert_to<long long>();
}

json matrix_json(const IntMatrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) r.push_back(big(M(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json elements_json(const std::vector<SignedPerm>& v) {
  json a = json::array();
  for (const auto& g : v) a.push_back(format(g));
  return a;
}

json spec_json(const ClassSpec& s) {
  json j{{"id", s.id}};
  for (const auto& p : class_parameters(s.id)) {
    if (p == "n") j["n"] = s.n;
    if (p == "n1") j["n1"] = s.n1;
    if (p == "n2") j["n2"] = s.n2;
    if (p == "n3") j["n3"] = s.n3;
    if (p == "p") {
      j["p"] = s.p;
      j["r"] = s.r;
    }
  }
  return j;
}

json h1_json(const H1Report& r) {
  json j{{"method", to_string(r.method)}, {"h1_rank", r.f2_rank}};
  json f = json::array();
  for (const auto& x : r.invariant_factors) f.push_back(big(x));
  j["invariant_factors"] = f;
  if (r.method == H1Method::halfsum) {
    j["witnesses"] = r.witnesses;
    j["z1_mod_f_rank"] = r.z1_mod_f_rank;
    if (r.f_minus1_in_span) j["f_minus1_in_span"] = *r.f_minus1_in_span;
  }
  return j;
}

json orbits_json(const FiniteGroup& G) {
  auto o = orbits(G);
  json pairs = json::array();
  for (const auto& orb : o.pair_orbits) {
    json a = json::array();
    for (int s : orb) a.push_back(std::to_string(symbol_index(s)) + (symbol_minus(s) ? "-" : "+"));
    pairs.push_back(a);
  }
  return {{"orbits", o.orbits}, {"pair_orbits", pairs}};
}

json description_json(const GroupDescription& d) {
  return {{"order", d.order}, {"abelian", d.abelian}, {"abelian_invariants", d.abelian_invariants},
          {"derived_series", d.derived_series}};
}

FiniteGroup group_from(int n, const std::vector<std::string>& gens) {
  if (n < 1 || n > kMaxRank) throw InputError("rank out of range");
  std::vector<SignedPerm> g;
  for (const auto& s : gens) {
    SignedPerm a = parse(s, n);
    if (sigma(a) != 1) throw InputError("generator '" + s + "' is not in W(D_" + std::to_string(n) + ")");
    g.push_back(a);
  }
  return closure(n, g);
}

struct Outcome {
  json result;
  json stats = json::object();
  bool ok = true;
};

Outcome cmd_eval(int n, const std::string& text) {
  SignedPerm a = parse(text, n);
  Outcome o;
  json cycles = json::array();
  for (const auto& c : signed_cycles(a))
    if (!c.trivial()) cycles.push_back({{"support", c.support}, {"minus_indices", c.minus_indices}, {"sigma", c.sigma()}});
  o.result = {{"normal_form", format(a)},  {"order", a.order()},          {"sigma", sigma(a)},
              {"lambda", lambda_count(a)}, {"signed_cycles", cycles},     {"inverse", format(a.inverse())}};
  if (sigma(a) == 1) {
    IntMatrix M = phi(a);
    o.result["phi"] = matrix_json(M);
    o.result["verify_aut0"] = verify_aut0(M);
    o.ok = verify_aut0(M);
  } else {
    o.result["phi"] = nullptr;
  }
  return o;
}

Outcome cmd_h1(const FiniteGroup& G, const std::string& method) {
  Outcome o;
  o.result = {{"order", G.order()}, {"generators", elements_json(G.generators())}};
  std::vector<H1Report> reps;
  if (method == "oracle" || method == "cross-check") reps.push_back(h1_oracle(G));
  if (method == "halfsum" || method == "cross-check") reps.push_back(h1_halfsum(G));
  if (method == "cyclic" || (method == "cross-check" && G.generators().size() == 1)) {
    if (G.generators().size() != 1) throw InputError("cyclic method needs exactly one generator");
    reps.push_back(h1_cyclic(G.generators()[0]));
  }
  json all = json::array();
  for (const auto& r : reps) {
    all.push_back(h1_json(r));
    if (r.f2_rank != reps[0].f2_rank) o.ok = false;
  }
  o.result["h1_rank"] = reps[0].f2_rank;
  o.result["agree"] = o.ok;
  o.result["reports"] = all;
  if (!o.ok) std::cerr << "methods disagree on H^1\n";
  return o;
}

Outcome cmd_check(const FiniteGroup& G, bool all_subgroups) {
  Outcome o;
  H1Condition c = h1_condition(G, all_subgroups ? H1Route::all_subgroups : H1Route::sylow2);
  bool rm = relative_minimality(G), fp = fiber_pair_condition(G), oc = orbit_count_filter(G);
  o.result = {{"order", G.order()},
              {"generators", elements_json(G.generators())},
              {"h1_condition", to_string(c.verdict)},
              {"relative_minimality", rm},
              {"fiber_pair_condition", fp},
              {"orbit_count_filter", oc}};
  if (c.witness) o.result["witness"] = elements_json(c.witness->generators());
  if (!c.note.empty()) o.result["note"] = c.note;
  o.result.update(orbits_json(G));
  o.ok = c.verdict == Verdict::holds && rm && fp;
  return o;
}

Outcome cmd_class(const ClassSpec& s) {
  Outcome o;
  ClassReport r = verify_class(s);
  o.result = {{"spec", spec_json(s)},
              {"name", r.instance.name},
              {"N", r.instance.N},
              {"generators", elements_json(r.instance.gens)},
              {"order", r.order},
              {"h1_condition", to_string(r.h1)},
              {"relative_minimality", r.relmin_ok},
              {"expected_orbits", r.instance.expected_orbits},
              {"orbit_lengths", r.orbit_lengths},
              {"orbit_profile_ok", r.orbit_profile_ok},
              {"sylow2_order", r.sylow2_order},
              {"verified", r.ok()}};
  o.ok = r.ok();
  return o;
}

Outcome cmd_project(const FiniteGroup& G, int rep) {
  if (rep < 1 || rep > G.rank()) throw InputError("orbit representative out of range");
  std::vector<int> orbit;
  for (const auto& orb : orbits(G).orbits)
    if (std::find(orb.begin(), orb.end(), rep) != orb.end()) orbit = orb;
  ProjectedGroup P = project(G, orbit);
  Outcome o;
  H1Condition c = h1_condition(P.group);
  bool rm = relative_minimality(P.group);
  o.result = {{"orbit", P.orbit},
              {"target_rank", P.target_rank},
              {"appended_flag", P.appended_flag},
              {"order", P.group.order()},
              {"generators", elements_json(P.group.generators())},
              {"h1_condition", to_string(c.verdict)},
              {"relative_minimality", rm}};
  o.ok = c.verdict == Verdict::holds && rm;
  return o;
}

Outcome cmd_enumerate(int n, EnumMode mode) {
  EnumerationResult R = enumerate(n, mode);
  auto missing = match_rows(R);
  Outcome o;
  json passing = json::array();
  bool extras = false;
  for (const auto& e : R.passing) {
    json j{{"order", e.group.order()},
           {"name", e.name},
           {"description", description_json(e.description)},
           {"generators", elements_json(e.group.generators())},
           {"orbit_profile", e.orbit_profile}};
    if (e.key) {
      json codes = json::array();
      for (auto c : e.key->codes) codes.push_back(c);
      j["canonical_key"] = codes;
    }
    j["table_row"] = e.table_row.empty() ? json(nullptr) : json(e.table_row);
    j["matched_class"] = e.matched_class ? spec_json(*e.matched_class) : json(nullptr);
    if (e.table_row.empty()) extras = true;
    passing.push_back(j);
  }
  o.result = {{"n", n}, {"mode", to_string(mode)}, {"count", R.passing.size()},
              {"expected", table_rows(n).size()}, {"missing_rows", missing}, {"passing", passing}};
  o.stats = {{"classes_explored", R.stats.classes_explored},
             {"closures", R.stats.closures},
             {"conjugacy_tests", R.stats.conjugacy_tests}};
  o.ok = missing.empty() && !extras;
  return o;
}

Outcome cmd_verify_tables(const std::vector<int>& ns) {
  Outcome o;
  json tables = json::array();
  for (int n : ns) {
    TableReport T = verify_tables(n);
    json rows = json::array();
    for (const auto& c : T.rows) {
      json r{{"label", c.row.label}, {"name", c.row.name}};
      r["class"] = c.row.spec ? spec_json(*c.row.spec) : json(nullptr);
      if (!c.row.fixture.empty()) r["fixture"] = c.row.fixture;
      r.update({{"order", c.order},
                {"rank_ok", c.rank_ok},
                {"h1_condition", to_string(c.h1)},
                {"relative_minimality", c.relmin_ok},
                {"fiber_pair_condition", c.fiber_pair_ok},
                {"distinct", c.distinct},
                {"verified", c.ok()}});
      rows.push_back(r);
    }
    tables.push_back({{"n", n}, {"rows", rows}, {"verified", T.ok()}});
    o.ok = o.ok && T.ok();
  }
  o.result = {{"tables", tables}, {"verified", o.ok}};
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois cohomology of conic bundle Picard lattices"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "add elapsed_ms to stats (breaks byte-identical output)");

  int n = 0;
  std::vector<std::string> gens;
  std::string elem, method = "cross-check", mode = "guided";
  bool all_route = false;
  int rep = 1;
  ClassSpec spec;
  std::vector<int> ns;

  auto* eval = app.add_subcommand("eval", "normal form, cycles and Phi matrix of an element");
  eval->add_option("-n", n, "rank")->required();
  eval->add_option("element", elem)->required();

  auto* h1 = app.add_subcommand("h1", "H^1 of the group generated by the arguments");
  h1->add_option("-n", n, "rank")->required();
  h1->add_option("generators", gens)->required();
  h1->add_option("--method", method)->check(CLI::IsMember({"oracle", "halfsum", "cyclic", "cross-check"}));

  auto* check = app.add_subcommand("check", "(H1), relative minimality and orbits");
  check->add_option("-n", n, "rank")->required();
  check->add_option("generators", gens)->required();
  check->add_flag("--all-subgroups", all_route, "test every subgroup instead of the Sylow 2-subgroup");

  auto* cls = app.add_subcommand("class", "build and verify a class instance");
  cls->add_option("--id", spec.id)->required()->check(CLI::Range(1, 24));
  cls->add_option("--n", spec.n);
  cls->add_option("--n1", spec.n1);
  cls->add_option("--n2", spec.n2);
  cls->add_option("--n3", spec.n3);
  cls->add_option("--p", spec.p);
  cls->add_option("--r", spec.r);

  auto* proj = app.add_subcommand("project", "restrict the group to one orbit");
  proj->add_option("-n", n, "rank")->required();
  proj->add_option("generators", gens)->required();
  proj->add_option("--orbit-rep", rep, "an index in the orbit");

  auto* en = app.add_subcommand("enumerate", "conjugacy classes of (H1) groups in W(D_n)");
  en->add_option("-n", n, "rank")->required()->check(CLI::Range(4, 7));
  en->add_option("--mode", mode)->check(CLI::IsMember({"full", "guided"}));

  auto* vt = app.add_subcommand("verify-tables", "check the tabulated groups for the given ranks");
  vt->add_option("-n", ns, "ranks (default 4..9)")->check(CLI::Range(4, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  json input = json::object();
  for (const auto* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string key = opt->get_name();
    while (!key.empty() && key[0] == '-') key.erase(0, 1);
    json vals = json::array();
    for (const auto& v : opt->results()) {
      bool numeric = !v.empty() && v.find_first_not_of("-0123456789") == std::string::npos && v.size() < 18;
      vals.push_back(numeric ? json(std::stoll(v)) : json(v));
    }
    input[key] = vals.size() == 1 && opt->get_items_expected_max() == 1 ? vals[0] : vals;
  }

  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    const std::string name = sub->get_name();
    if (name == "eval") out = cmd_eval(n, elem);
    else if (name == "h1") out = cmd_h1(group_from(n, gens), method);
    else if (name == "check") out = cmd_check(group_from(n, gens), all_route);
    else if (name == "class") out = cmd_class(spec);
    else if (name == "project") out = cmd_project(group_from(n, gens), rep);
    else if (name == "enumerate") out = cmd_enumerate(n, mode == "full" ? EnumMode::full : EnumMode::generator_guided);
    else if (name == "verify-tables") {
      if (ns.empty()) ns = {4, 5, 6, 7, 8, 9};
      out = cmd_verify_tables(ns);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const TorsionViolation& e) {
    std::cerr << "torsion violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (timing)
    out.stats["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

  json report{{"version", kVersion}, {"command", sub->get_name()}, {"input", input}, {"result", out.result},
              {"stats", out.stats}};
  std::cout << report.dump(2) << "\n";
  if (!out.ok) std::cerr << sub->get_name() << ": verification failed\n";
  return out.ok ? 0 : 1;
}
