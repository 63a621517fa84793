#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "slicings/numeric.hpp"
#include "slicings/perm.hpp"

using namespace slicings;

namespace {

std::vector<Permutation> all_permutations(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation validity") {
  CHECK(is_permutation({1}));
  CHECK(is_permutation({2, 4, 1, 3}));
  CHECK_FALSE(is_permutation({1, 1, 2}));
  CHECK_FALSE(is_permutation({0, 1}));
  CHECK_FALSE(is_permutation({1, 3}));
}

TEST_CASE("baxter membership examples") {
  CHECK(is_baxter({1}));
  CHECK(is_baxter({3, 1, 4, 2}) == false);
  CHECK(is_baxter({2, 4, 1, 3}) == false);
  CHECK(is_baxter({2, 1, 4, 3}));
  CHECK(is_baxter({5, 1, 3, 2, 4}));
}

TEST_CASE("baxter growth matches the brute force filter") {
  const auto bax = baxter_numbers(7);
  for (int n = 1; n <= 6; ++n) {
    const auto grown = baxter_level(n);
    CHECK(Int(grown.size()) == bax[n]);
    std::set<Permutation> grown_set(grown.begin(), grown.end());
    CHECK(grown_set.size() == grown.size());
    std::set<Permutation> filtered;
    for (const Permutation& p : all_permutations(n))
      if (is_baxter(p)) filtered.insert(p);
    CHECK(grown_set == filtered);
  }
}

TEST_CASE("class s counts") {
  const auto sch = schroeder_numbers(7);
  for (int n = 1; n <= 7; ++n) {
    const auto level = class_s_level(n);
    CHECK(Int(level.size()) == sch[n - 1]);
    std::set<Permutation> unique(level.begin(), level.end());
    CHECK(unique.size() == level.size());
  }
}

TEST_CASE("class s equals the pattern filter") {
  for (int n = 1; n <= 6; ++n) {
    const auto level = class_s_level(n);
    std::set<Permutation> grown(level.begin(), level.end());
    std::set<Permutation> filtered;
    for (const Permutation& p : all_permutations(n))
      if (in_class_s(p)) filtered.insert(p);
    CHECK(grown == filtered);
  }
}

TEST_CASE("baxter permutations outside class s at size five") {
  std::set<Permutation> complement;
  const auto in_s = class_s_level(5);
  const std::set<Permutation> s_set(in_s.begin(), in_s.end());
  for (const Permutation& p : baxter_level(5))
    if (!s_set.count(p)) complement.insert(p);
  CHECK(complement ==
        std::set<Permutation>{{5, 1, 3, 2, 4}, {5, 2, 3, 1, 4}});
  for (const Permutation& p : complement) {
    CHECK(is_baxter(p));
    CHECK((contains_bivincular(p, BivincularPattern::P41323) ||
           contains_bivincular(p, BivincularPattern::P42313)));
  }
}

TEST_CASE("bivincular pattern occurrences") {
  CHECK(contains_bivincular({5, 1, 3, 2, 4}, BivincularPattern::P41323));
  CHECK_FALSE(contains_bivincular({5, 1, 3, 2, 4}, BivincularPattern::P42313));
  CHECK(contains_bivincular({5, 2, 3, 1, 4}, BivincularPattern::P42313));
  CHECK_FALSE(contains_bivincular({5, 2, 3, 1, 4}, BivincularPattern::P41323));
  CHECK_FALSE(contains_bivincular({1, 2, 3, 4, 5}, BivincularPattern::P41323));
}

TEST_CASE("class s children follow the rule productions") {
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& p : class_s_level(n)) {
      const Label lab = class_s_label(p);
      const auto expect = productions(RuleId::new_sch(), lab);
      const auto kids = children_s(p);
      REQUIRE(kids.size() == expect.size());
      for (size_t i = 0; i < kids.size(); ++i) {
        CHECK(in_class_s(kids[i]));
        CHECK(class_s_label(kids[i]) == expect[i]);
      }
    }
}

TEST_CASE("baxter children follow the rule productions") {
  const auto label = [](const Permutation& p) {
    int h = 0, k = 0, best = 0;
    for (int v : p)
      if (v > best) {
        best = v;
        ++h;
      }
    best = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
      if (*it > best) {
        best = *it;
        ++k;
      }
    return Label::binary(h, k);
  };
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& p : baxter_level(n)) {
      const auto expect = productions(RuleId::bax(), label(p));
      const auto kids = children_baxter(p);
      REQUIRE(kids.size() == expect.size());
      for (size_t i = 0; i < kids.size(); ++i)
        CHECK(label(kids[i]) == expect[i]);
    }
}

TEST_CASE("tree paths address permutations") {
  CHECK(bax_tree_permutation({}) == Permutation{1});
  CHECK(bax_tree_permutation({0}) == Permutation{2, 1});
  CHECK(bax_tree_permutation({1}) == Permutation{1, 2});
  // Always inserting at the first left site builds the decreasing
  // permutation, always at the last right site the increasing one.
  CHECK(bax_tree_permutation({0, 0, 0}) == Permutation{4, 3, 2, 1});
  CHECK(bax_tree_permutation({1, 2, 3}) == Permutation{1, 2, 3, 4});
  CHECK_THROWS_AS(bax_tree_permutation({5}), std::invalid_argument);
}

TEST_CASE("active sites require class membership") {
  CHECK_THROWS_AS(active_sites_s({5, 1, 3, 2, 4}), NotInS);
  const ActiveSites sites = active_sites_s({1, 2});
  CHECK(sites.left.size() + sites.right.size() ==
        children_s({1, 2}).size());
}

TEST_CASE("printing") {
  CHECK(to_string({5, 1, 3, 2, 4}) == "51324");
  CHECK(to_string({10, 1, 2, 3, 4, 5, 6, 7, 8, 9}) ==
        "10,1,2,3,4,5,6,7,8,9");
}
