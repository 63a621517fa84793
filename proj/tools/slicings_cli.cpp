#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "slicings/io.hpp"
#include "slicings/verify.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kObjectCap = 9;
constexpr int kSeriesCap = 30;

using namespace slicings;

struct FamilyId {
  enum Kind {
    Cat,
    Sch,
    Bax,
    Skinny,
    RowRes,
    PermS,
    Pfp,
    SchPfp,
    CatPfp,
    Nilp,
    SchNilp
  };
  Kind kind = Bax;
  int m = 0;
};

bool parse_family(const std::string& s, FamilyId& out) {
  if (s == "cat") out = {FamilyId::Cat, 0};
  else if (s == "sch") out = {FamilyId::Sch, 0};
  else if (s == "bax") out = {FamilyId::Bax, 0};
  else if (s == "perm-s") out = {FamilyId::PermS, 0};
  else if (s == "pfp") out = {FamilyId::Pfp, 0};
  else if (s == "sch-pfp") out = {FamilyId::SchPfp, 0};
  else if (s == "cat-pfp") out = {FamilyId::CatPfp, 0};
  else if (s == "nilp") out = {FamilyId::Nilp, 0};
  else if (s == "sch-nilp") out = {FamilyId::SchNilp, 0};
  else if (s.rfind("skinny:", 0) == 0)
    out = {FamilyId::Skinny, std::stoi(s.substr(7))};
  else if (s.rfind("rowres:", 0) == 0)
    out = {FamilyId::RowRes, std::stoi(s.substr(7))};
  else return false;
  if (out.kind == FamilyId::Skinny && out.m < 0) return false;
  if (out.kind == FamilyId::RowRes && out.m < 0) return false;
  return true;
}

// Counting through the succession-rule DP where one applies; otherwise the
// objects themselves are generated.
bool family_rule(const FamilyId& f, RuleId& rule) {
  switch (f.kind) {
    case FamilyId::Cat: rule = RuleId::cat(); return true;
    case FamilyId::Sch: rule = RuleId::new_sch(); return true;
    case FamilyId::Bax: rule = RuleId::bax(); return true;
    case FamilyId::Skinny: rule = RuleId::skinny(f.m); return true;
    case FamilyId::RowRes:
      if (f.m >= 1) rule = RuleId::row_restricted(f.m);
      return f.m >= 1;
    case FamilyId::PermS: rule = RuleId::new_sch(); return true;
    case FamilyId::Pfp: rule = RuleId::bax(); return true;
    case FamilyId::SchPfp: rule = RuleId::new_sch(); return true;
    case FamilyId::CatPfp: rule = RuleId::cat(); return true;
    case FamilyId::Nilp: rule = RuleId::bax(); return true;
    case FamilyId::SchNilp: rule = RuleId::new_sch(); return true;
  }
  return false;
}

Int count_objects(const FamilyId& f, int n) {
  switch (f.kind) {
    case FamilyId::Cat: return Int(family_level(RuleId::cat(), n).size());
    case FamilyId::Sch: return Int(family_level(RuleId::new_sch(), n).size());
    case FamilyId::Bax: return Int(family_level(RuleId::bax(), n).size());
    case FamilyId::Skinny:
      return Int(family_level(RuleId::skinny(f.m), n).size());
    case FamilyId::RowRes:
      // rowres:0 admits no row move at all, leaving the single column.
      if (f.m == 0) return Int(1);
      return Int(family_level(RuleId::row_restricted(f.m), n).size());
    case FamilyId::PermS: return Int(class_s_level(n).size());
    case FamilyId::Pfp: return Int(pfp_level(n).size());
    case FamilyId::SchPfp: return Int(schroeder_pfp_level(n).size());
    case FamilyId::CatPfp: {
      Int c = 0;
      for (const PackedFloorplan& p : pfp_level(n))
        if (is_catalan_pfp(p)) ++c;
      return c;
    }
    case FamilyId::Nilp: return Int(enumerate_triples(n).size());
    case FamilyId::SchNilp: {
      Int c = 0;
      for (const NilpTriple& t : enumerate_triples(n))
        if (is_schroeder_triple(t)) ++c;
      return c;
    }
  }
  return 0;
}

// The rowres:0 rule degenerates: no row move is ever allowed, so the only
// object of each size is the single column and every level counts 1.
bool rule_counts(const FamilyId& f, int n_max, std::vector<Int>& out) {
  if (f.kind == FamilyId::RowRes && f.m == 0) {
    out.assign(n_max, Int(1));
    return true;
  }
  RuleId rule = RuleId::bax();
  if (!family_rule(f, rule)) return false;
  out = level_counts(rule, n_max);
  return true;
}

int run_count(const FamilyId& f, int n_max, const std::string& method,
              bool no_cap) {
  std::vector<Int> counts;
  if (method == "rule") {
    if (!rule_counts(f, n_max, counts)) return kExitUsage;
  } else {
    if (n_max > kObjectCap && !no_cap) {
      std::cerr << "object counting capped at size " << kObjectCap
                << " (override with --unsafe-no-cap)\n";
      return kExitCap;
    }
    for (int n = 1; n <= n_max; ++n) counts.push_back(count_objects(f, n));
  }
  for (int n = 1; n <= n_max; ++n)
    std::cout << n << "\t" << counts[n - 1] << "\n";
  return 0;
}

int run_enumerate(const FamilyId& f, int n, bool no_cap) {
  if (n > kObjectCap && !no_cap) {
    std::cerr << "enumeration capped at size " << kObjectCap
              << " (override with --unsafe-no-cap)\n";
    return kExitCap;
  }
  const auto print_slicings = [&](const RuleId& rule) {
    for (const BaxterSlicing& s : family_level(rule, n))
      std::cout << to_json(s).dump() << "\n";
  };
  switch (f.kind) {
    case FamilyId::Cat: print_slicings(RuleId::cat()); break;
    case FamilyId::Sch: print_slicings(RuleId::new_sch()); break;
    case FamilyId::Bax: print_slicings(RuleId::bax()); break;
    case FamilyId::Skinny: print_slicings(RuleId::skinny(f.m)); break;
    case FamilyId::RowRes:
      if (f.m < 1) return kExitUsage;
      print_slicings(RuleId::row_restricted(f.m));
      break;
    case FamilyId::PermS:
      for (const Permutation& p : class_s_level(n))
        std::cout << to_json(p).dump() << "\n";
      break;
    case FamilyId::Pfp:
      for (const PackedFloorplan& p : pfp_level(n))
        std::cout << to_json(p).dump() << "\n";
      break;
    case FamilyId::SchPfp:
      for (const PackedFloorplan& p : schroeder_pfp_level(n))
        std::cout << to_json(p).dump() << "\n";
      break;
    case FamilyId::CatPfp:
      for (const PackedFloorplan& p : pfp_level(n))
        if (is_catalan_pfp(p)) std::cout << to_json(p).dump() << "\n";
      break;
    case FamilyId::Nilp:
      for (const NilpTriple& t : enumerate_triples(n))
        std::cout << to_json(t).dump() << "\n";
      break;
    case FamilyId::SchNilp:
      for (const NilpTriple& t : enumerate_triples(n))
        if (is_schroeder_triple(t)) std::cout << to_json(t).dump() << "\n";
      break;
  }
  return 0;
}

int run_bijection_check(const FamilyId& f, int n_max, bool no_cap) {
  if (n_max > kObjectCap && !no_cap) {
    std::cerr << "bijection checking capped at size " << kObjectCap
              << " (override with --unsafe-no-cap)\n";
    return kExitCap;
  }
  if (f.kind != FamilyId::Nilp && f.kind != FamilyId::SchNilp) {
    std::cerr << "bijection-check supports the nilp and sch-nilp families\n";
    return kExitUsage;
  }
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) {
    for (const NilpTriple& t : enumerate_triples(n)) {
      if (f.kind == FamilyId::SchNilp && !is_schroeder_triple(t)) continue;
      const BaxterSlicing s = nilp_to_slicing(t);
      if (slicing_to_nilp(s) != t) ok = false;
      if (f.kind == FamilyId::SchNilp && !is_member(s, RuleId::new_sch()))
        ok = false;
    }
    const RuleId rule =
        f.kind == FamilyId::Nilp ? RuleId::bax() : RuleId::new_sch();
    for (const BaxterSlicing& s : family_level(rule, n)) {
      const NilpTriple t = slicing_to_nilp(s);
      if (nilp_to_slicing(t).moves() != s.moves()) ok = false;
      if (f.kind == FamilyId::SchNilp && !is_schroeder_triple(t)) ok = false;
    }
  }
  std::cout << "CHECK bijection-roundtrip " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : kExitCheckFailure;
}

bool parse_system(const std::string& s, SystemId& out) {
  try {
    if (s == "0sk") {
      out = SystemId::zero_skinny();
      return true;
    }
    if (s.rfind("sk:", 0) == 0) {
      out = SystemId::skinny(std::stoi(s.substr(3)));
      return true;
    }
    if (s.rfind("rr:", 0) == 0) {
      out = SystemId::row_restricted(std::stoi(s.substr(3)));
      return true;
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

int run_series(const std::string& system, int order, bool no_cap,
               const std::string& check_poly) {
  if (order > kSeriesCap && !no_cap) {
    std::cerr << "series order capped at " << kSeriesCap
              << " (override with --unsafe-no-cap)\n";
    return kExitCap;
  }
  TruncatedSeries s(order + 1, Rat(0));
  // m = 1 instances have classical closed forms and are served from them.
  if (system == "sk:1") {
    const auto sch = schroeder_numbers(order + 1);
    for (int i = 1; i <= order; ++i) s[i] = Rat(sch[i]);
  } else if (system == "rr:1") {
    const auto cat = catalan_numbers(order + 1);
    for (int i = 1; i <= order; ++i) s[i] = Rat(cat[i]);
  } else {
    SystemId sys = SystemId::zero_skinny();
    if (!parse_system(system, sys)) {
      std::cerr << "unknown system id: " << system << "\n";
      return kExitUsage;
    }
    s = solve_system(sys, order);
  }
  for (int i = 1; i <= order; ++i) {
    if (i > 1) std::cout << " ";
    std::cout << s[i];
  }
  std::cout << "\n";
  if (!check_poly.empty()) {
    std::vector<PolyTerm> poly;
    try {
      poly = parse_poly(check_poly);
    } catch (const std::exception& e) {
      std::cerr << "bad polynomial: " << e.what() << "\n";
      return kExitUsage;
    }
    const bool ok = check_algebraic(poly, s);
    std::cout << "CHECK algebraic " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : kExitCheckFailure;
  }
  return 0;
}

int run_verify(const std::string& suite) {
  bool all = true;
  for (const CheckResult& r : run_suite(suite)) {
    std::cout << "CHECK " << r.name << " " << (r.pass ? "PASS" : "FAIL")
              << "\n";
    if (!r.pass) all = false;
  }
  return all ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generating trees for Baxter, Schroeder and Catalan families of "
      "slicings, paths, permutations and floorplans.\n"
      "Polynomials for identity checks use the grammar: terms c*x^i*y^j "
      "joined by + or -, e.g. \"1*x^1*y^2 - 1*x^0*y^1 + 1\"."};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads,
                 "Worker threads (accepted for interface stability; "
                 "execution is sequential and output is identical for any "
                 "value)");

  std::string family = "bax";
  std::string method = "rule";
  std::string format = "json";
  std::string system = "rr:2";
  std::string suite = "all";
  int max_size = 1;
  int size = 1;
  int order = 10;
  bool no_cap = false;

  CLI::App* count = app.add_subcommand("count", "Print n<TAB>count lines");
  count->add_option("--family", family,
                    "cat|sch|bax|skinny:m|rowres:m|perm-s|pfp|sch-pfp|"
                    "cat-pfp|nilp|sch-nilp")
      ->required();
  count->add_option("--max-size", max_size, "Largest size n")->required();
  count->add_option("--method", method, "rule|objects");
  count->add_flag("--unsafe-no-cap", no_cap, "Ignore the size cap");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Print one JSON object per line");
  enumerate->add_option("--family", family, "Family id")->required();
  enumerate->add_option("--size", size, "Object size")->required();
  enumerate->add_option("--format", format, "json (svg is not provided)");
  enumerate->add_flag("--unsafe-no-cap", no_cap, "Ignore the size cap");

  CLI::App* bijection = app.add_subcommand(
      "bijection-check", "Round-trip the slicing/path-triple bijection");
  bijection->add_option("--family", family, "nilp|sch-nilp")->required();
  bijection->add_option("--max-size", max_size, "Largest size n")->required();
  bijection->add_flag("--unsafe-no-cap", no_cap, "Ignore the size cap");

  std::string check_poly;
  CLI::App* series =
      app.add_subcommand("series", "Print series coefficients a1..aN");
  series->add_option("--system", system, "0sk|sk:m|rr:m")->required();
  series->add_option("--order", order, "Truncation order")->required();
  series->add_option(
      "--check-poly", check_poly,
      "Verify P(x, F) = 0 through x^N; grammar: c*x^i*y^j terms joined by "
      "+/-, y standing for the series");
  series->add_flag("--unsafe-no-cap", no_cap, "Ignore the order cap");

  CLI::App* verify =
      app.add_subcommand("verify", "Run named checks, print CHECK lines");
  verify->add_option("--suite", suite, "all|rules|bijections|series|kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed() || enumerate->parsed() || bijection->parsed()) {
      FamilyId f;
      if (!parse_family(family, f)) {
        std::cerr << "unknown family: " << family << "\n";
        return kExitUsage;
      }
      if (count->parsed()) {
        if (max_size < 1 || (method != "rule" && method != "objects"))
          return kExitUsage;
        return run_count(f, max_size, method, no_cap);
      }
      if (enumerate->parsed()) {
        if (size < 1 || format != "json") return kExitUsage;
        return run_enumerate(f, size, no_cap);
      }
      return run_bijection_check(f, max_size, no_cap);
    }
    if (series->parsed()) {
      if (order < 1) return kExitUsage;
      return run_series(system, order, no_cap, check_poly);
    }
    if (suite != "all" && suite != "rules" && suite != "bijections" &&
        suite != "series" && suite != "kernel") {
      std::cerr << "unknown suite: " << suite << "\n";
      return kExitUsage;
    }
    return run_verify(suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
