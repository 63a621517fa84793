#ifndef SLICINGS_VERIFY_HPP
#define SLICINGS_VERIFY_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "slicings/floorplan.hpp"
#include "slicings/kernel.hpp"
#include "slicings/nilp.hpp"
#include "slicings/numeric.hpp"
#include "slicings/perm.hpp"
#include "slicings/polyomino.hpp"
#include "slicings/rules.hpp"
#include "slicings/series.hpp"

namespace slicings {

struct CheckResult {
  std::string name;
  bool pass = false;
};

namespace detail {

inline bool counts_match(const std::vector<Int>& got,
                         const std::vector<Int>& expect_from_index1, int n) {
  if (static_cast<int>(got.size()) < n) return false;
  for (int i = 0; i < n; ++i)
    if (got[i] != expect_from_index1[i + 1]) return false;
  return true;
}

inline bool series_equals_counts(const TruncatedSeries& s,
                                 const std::vector<Int>& counts, int n) {
  if (static_cast<int>(s.size()) < n + 1 ||
      static_cast<int>(counts.size()) < n)
    return false;
  for (int i = 1; i <= n; ++i)
    if (s[i] != Rat(counts[i - 1])) return false;
  return true;
}

inline std::vector<PolyTerm> make_poly(
    std::initializer_list<std::tuple<long, int, int>> terms) {
  std::vector<PolyTerm> p;
  for (const auto& [c, i, j] : terms) p.push_back(PolyTerm{Int(c), i, j});
  return p;
}

}  // namespace detail

inline std::vector<CheckResult> rules_checks() {
  std::vector<CheckResult> out;
  const auto add = [&](std::string name, bool pass) {
    out.push_back(CheckResult{std::move(name), pass});
  };
  add("cat-counts-n9",
      detail::counts_match(level_counts(RuleId::cat(), 9),
                           catalan_numbers(10), 9));
  {
    // Size-n Schroeder objects are counted by the (n-1)-st large Schroeder
    // number.
    const auto sch = schroeder_numbers(9);
    std::vector<Int> expect(10);
    for (int n = 1; n <= 9; ++n) expect[n] = sch[n - 1];
    add("sch-counts-n9",
        detail::counts_match(level_counts(RuleId::sch_west(), 9), expect, 9) &&
            detail::counts_match(level_counts(RuleId::new_sch(), 9), expect,
                                 9));
  }
  add("bax-counts-n9",
      detail::counts_match(level_counts(RuleId::bax(), 9),
                           baxter_numbers(10), 9));
  add("skinny1-eq-sch-n12",
      level_counts(RuleId::skinny(1), 12) ==
          level_counts(RuleId::sch_west(), 12));
  add("rowres1-eq-cat-n12",
      detail::counts_match(level_counts(RuleId::row_restricted(1), 12),
                           catalan_numbers(13), 12));
  add("skinny0-eq-rowres2-n14",
      level_counts(RuleId::skinny(0), 14) ==
          level_counts(RuleId::row_restricted(2), 14));
  add("newsch-sch-iso-d12", check_newsch_sch_isomorphism(12));
  add("sch-in-bax-embed-d8", check_sch_in_bax_embedding(8));
  {
    std::set<Permutation> missing;
    for (const auto& path : scan_sch_in_bax_embedding(5).missing_bax_paths)
      missing.insert(bax_tree_permutation(path));
    add("embed-complement-d5",
        missing == std::set<Permutation>{{1, 3, 2, 5, 4}, {2, 3, 1, 5, 4}});
  }
  return out;
}

inline std::vector<CheckResult> bijections_checks() {
  std::vector<CheckResult> out;
  const auto add = [&](std::string name, bool pass) {
    out.push_back(CheckResult{std::move(name), pass});
  };
  {
    bool round = true, star = true;
    for (int n = 1; n <= 7 && (round || star); ++n) {
      for (const NilpTriple& t : enumerate_triples(n))
        if (slicing_to_nilp(nilp_to_slicing(t)) != t) round = false;
      for (const BaxterSlicing& s : family_level(RuleId::bax(), n)) {
        const NilpTriple t = slicing_to_nilp(s);
        if (nilp_to_slicing(t).moves() != s.moves()) round = false;
        if (is_schroeder_triple(t) != is_member(s, RuleId::new_sch()))
          star = false;
      }
    }
    add("nilp-roundtrip-n7", round);
    add("star-equiv-lr1-n7", star);
  }
  {
    bool ok = true;
    const auto bax = baxter_numbers(9);
    for (int n = 1; n <= 8 && ok; ++n) {
      const Int expect = bax[n];
      if (Int(family_level(RuleId::bax(), n).size()) != expect) ok = false;
      if (Int(baxter_level(n).size()) != expect) ok = false;
      if (Int(pfp_level(n).size()) != expect) ok = false;
      if (n <= 7 && Int(enumerate_triples(n).size()) != expect) ok = false;
    }
    add("baxter-families-n8", ok);
  }
  {
    bool ok = true;
    const auto sch = schroeder_numbers(7);
    for (int n = 1; n <= 7 && ok; ++n) {
      const Int expect = sch[n - 1];
      if (Int(family_level(RuleId::new_sch(), n).size()) != expect)
        ok = false;
      if (Int(class_s_level(n).size()) != expect) ok = false;
      if (Int(schroeder_pfp_level(n).size()) != expect) ok = false;
      Int sch_triples = 0;
      for (const NilpTriple& t : enumerate_triples(n))
        if (is_schroeder_triple(t)) ++sch_triples;
      if (sch_triples != expect) ok = false;
    }
    add("schroeder-families-n7", ok);
  }
  {
    bool ok = true;
    const auto cat = catalan_numbers(10);
    for (int n = 1; n <= 9 && ok; ++n) {
      Int cnt = 0;
      for (const PackedFloorplan& f : pfp_level(n))
        if (is_catalan_pfp(f)) ++cnt;
      if (cnt != cat[n]) ok = false;
      if (Int(family_level(RuleId::cat(), n).size()) != cat[n]) ok = false;
    }
    add("catalan-families-n9", ok);
  }
  {
    const auto lvl = class_s_level(5);
    std::set<Permutation> have(lvl.begin(), lvl.end());
    std::set<Permutation> missing;
    for (const Permutation& p : baxter_level(5))
      if (!have.count(p)) missing.insert(p);
    add("class-s-complement-n5",
        missing == std::set<Permutation>{{5, 1, 3, 2, 4}, {5, 2, 3, 1, 4}} &&
            !in_class_s({5, 1, 3, 2, 4}) && !in_class_s({5, 2, 3, 1, 4}));
  }
  {
    const auto lvl = schroeder_pfp_level(5);
    std::set<PackedFloorplan> have(lvl.begin(), lvl.end());
    int missing = 0;
    bool flagged = true;
    for (const PackedFloorplan& f : pfp_level(5))
      if (!have.count(f)) {
        ++missing;
        if (is_schroeder_pfp(f)) flagged = false;
      }
    add("sch-pfp-complement-n5", missing == 2 && flagged);
  }
  {
    bool ok = true;
    for (int k = 1; k <= 8 && ok; ++k)
      for (int l = 1; l <= 8 && ok; ++l) {
        std::vector<ColumnSpan> cols(l, ColumnSpan{0, k});
        if (count_slicings_of_shape(ParallelogramPolyomino(cols)) !=
            binomial(k + l - 2, l - 1))
          ok = false;
      }
    add("rectangle-binomials-k8", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= 10 && ok; ++n)
      for (const ParallelogramPolyomino& sh : shapes_of_size(n))
        if (is_snake(sh) && count_slicings_of_shape(sh) != 1) ok = false;
    add("snake-unique-n10", ok);
  }
  return out;
}

inline std::vector<CheckResult> series_checks() {
  std::vector<CheckResult> out;
  const auto add = [&](std::string name, bool pass) {
    out.push_back(CheckResult{std::move(name), pass});
  };
  const auto ints = [](std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.push_back(Int(c));
    return v;
  };
  add("printed-gf-0sk",
      detail::series_equals_counts(solve_system(SystemId::zero_skinny(), 6),
                                   ints({1, 2, 6, 21, 80, 322}), 6));
  add("printed-gf-rr3",
      detail::series_equals_counts(
          solve_system(SystemId::row_restricted(3), 10),
          ints({1, 2, 6, 22, 91, 405, 1893, 9163, 45531, 230902}), 10));
  add("printed-gf-rr4",
      detail::series_equals_counts(
          solve_system(SystemId::row_restricted(4), 10),
          ints({1, 2, 6, 22, 92, 421, 2051, 10449, 55023, 297139}), 10));
  add("printed-gf-rr5",
      detail::series_equals_counts(
          solve_system(SystemId::row_restricted(5), 10),
          ints({1, 2, 6, 22, 92, 422, 2073, 10724, 57716, 320312}), 10));
  add("printed-gf-sk2",
      detail::series_equals_counts(
          solve_system(SystemId::skinny(2), 10),
          ints({1, 2, 6, 22, 92, 419, 2022, 10168, 52718, 279820}), 10));
  add("printed-gf-sk3",
      detail::series_equals_counts(
          solve_system(SystemId::skinny(3), 10),
          ints({1, 2, 6, 22, 92, 422, 2070, 10668, 57061, 314061}), 10));
  {
    bool ok = true;
    const std::vector<std::pair<SystemId, RuleId>> pairs{
        {SystemId::zero_skinny(), RuleId::skinny(0)},
        {SystemId::skinny(2), RuleId::skinny(2)},
        {SystemId::skinny(3), RuleId::skinny(3)},
        {SystemId::row_restricted(2), RuleId::row_restricted(2)},
        {SystemId::row_restricted(3), RuleId::row_restricted(3)},
        {SystemId::row_restricted(4), RuleId::row_restricted(4)},
        {SystemId::row_restricted(5), RuleId::row_restricted(5)}};
    for (const auto& [sys, rule] : pairs)
      if (!detail::series_equals_counts(solve_system(sys, 20),
                                        level_counts(rule, 20), 20))
        ok = false;
    add("series-eq-rules-n20", ok);
  }
  add("thm71-0sk-eq-rr2-n14",
      solve_system(SystemId::zero_skinny(), 14) ==
          solve_system(SystemId::row_restricted(2), 14));
  {
    // (dagger) rearranged: H(1 - x(H+1)^2) - x(H+1) = 0, expanded as
    // H - xH^3 - 2xH^2 - 2xH - x = 0.
    const TruncatedSeries h = solve_system(SystemId::row_restricted(2), 12);
    add("dagger-prime-rr2",
        check_algebraic(detail::make_poly({{1, 1, 3},
                                           {2, 1, 2},
                                           {2, 1, 1},
                                           {-1, 0, 1},
                                           {1, 1, 0}}),
                        h));
    TruncatedSeries s = h;
    s[0] += 1;
    add("a106228-cubic",
        check_algebraic(detail::make_poly({{1, 1, 3},
                                           {-1, 1, 2},
                                           {1, 1, 1},
                                           {-1, 0, 1},
                                           {1, 0, 0}}),
                        s));
  }
  add("alg3rr-cubic",
      check_algebraic(
          detail::make_poly({{1, 1, 0},    {2, 2, 0},  {1, 3, 0},
                             {-1, 0, 1},   {-2, 1, 1}, {2, 2, 1},
                             {3, 3, 1},    {2, 0, 2},  {-2, 2, 2},
                             {3, 3, 2},    {-1, 0, 3}, {3, 1, 3},
                             {-2, 2, 3},   {1, 3, 3}}),
          solve_system(SystemId::row_restricted(3), 12)));
  add("sk2-quintic",
      check_algebraic(
          detail::make_poly({{1, 3, 0},   {-1, 2, 1},  {6, 3, 1},
                             {-6, 2, 2},  {15, 3, 2},  {2, 1, 3},
                             {-13, 2, 3}, {19, 3, 3},  {5, 1, 4},
                             {-12, 2, 4}, {12, 3, 4},  {-1, 0, 5},
                             {3, 1, 5},   {-4, 2, 5},  {3, 3, 5}}),
          solve_system(SystemId::skinny(2), 12)));
  {
    const auto cat = catalan_numbers(13);
    TruncatedSeries c(13, Rat(0));
    for (int i = 0; i < 13; ++i) c[i] = Rat(cat[i]);
    add("catalan-quadratic",
        check_algebraic(
            detail::make_poly({{1, 1, 2}, {-1, 0, 1}, {1, 0, 0}}), c));
    const auto sch = schroeder_numbers(13);
    TruncatedSeries s(13, Rat(0));
    for (int i = 0; i < 13; ++i) s[i] = Rat(sch[i]);
    add("schroeder-quadratic",
        check_algebraic(
            detail::make_poly({{1, 1, 2}, {1, 1, 1}, {-1, 0, 1}, {1, 0, 0}}),
            s));
  }
  return out;
}

inline std::vector<CheckResult> kernel_checks() {
  std::vector<CheckResult> out;
  const auto add = [&](std::string name, bool pass) {
    out.push_back(CheckResult{std::move(name), pass});
  };
  {
    const BiPoly e1 =
        bp::add(bp::one_minus_v(), bp::term(PolyX{Rat(0), Rat(1)}, 2));
    const BiPoly sq = bp::mul(bp::one_minus_xv(), bp::one_minus_xv());
    const RationalFnV e2 =
        rf_add(RationalFnV::from(sq), RationalFnV::from(bp::xv(), 1));
    add("det-k1-k2-printed", kernel_det(1) == RationalFnV::from(e1, 1) &&
                                 kernel_det(2) == e2);
  }
  add("det-rec-m5", check_det_recurrences(5));
  add("det-rec-m8", check_det_recurrences(8));
  {
    bool ok = true;
    for (int m = 3; m <= 5; ++m)
      for (int r = 1; r <= m - 2; ++r)
        if (!verify_kernel_root(m, r, printed_kernel_root(m, r))) ok = false;
    add("kernel-roots-x5", ok);
  }
  add("cofactors-m6", check_cofactor_forms(6));
  {
    bool ok = true;
    for (int m = 3; m <= 5; ++m)
      if (!check_regular_root_count(m)) ok = false;
    add("regular-roots-m5", ok);
  }
  add("kernel-consistency-3-10", verify_kernel_solution_consistency(3, 10));
  return out;
}

inline std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  const auto append = [&](std::vector<CheckResult> more) {
    for (CheckResult& r : more) out.push_back(std::move(r));
  };
  if (suite == "rules" || suite == "all") append(rules_checks());
  if (suite == "bijections" || suite == "all") append(bijections_checks());
  if (suite == "series" || suite == "all") append(series_checks());
  if (suite == "kernel" || suite == "all") append(kernel_checks());
  return out;
}

}  // namespace slicings

#endif
