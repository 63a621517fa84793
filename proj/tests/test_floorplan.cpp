#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "slicings/floorplan.hpp"
#include "slicings/numeric.hpp"

using namespace slicings;

TEST_CASE("the unit floorplan") {
  const PackedFloorplan unit = PackedFloorplan::unit();
  CHECK(unit.size() == 1);
  CHECK(is_packed(unit));
  CHECK(label_pfp(unit) == Label::binary(1, 1));
  CHECK(children_pfp(unit).size() == 2);
}

TEST_CASE("partition validation") {
  PackedFloorplan gap{2, 1, {Rect{0, 0, 1, 1}}};
  CHECK_THROWS_AS(validate_partition(gap), NotAPartition);
  PackedFloorplan overlap{1, 2, {Rect{0, 0, 2, 1}, Rect{1, 0, 2, 1}}};
  CHECK_THROWS_AS(validate_partition(overlap), NotAPartition);
  PackedFloorplan outside{1, 1, {Rect{0, 0, 2, 1}}};
  CHECK_THROWS_AS(validate_partition(outside), NotAPartition);
}

TEST_CASE("packedness rejects the corner pattern") {
  // A 3 x 3 square cut into five blocks where block C's top-right region
  // leaves a bottom-right corner weakly below-left of a top-left corner.
  PackedFloorplan f{3,
                    3,
                    {Rect{0, 1, 1, 3}, Rect{1, 0, 3, 1}, Rect{0, 0, 1, 1},
                     Rect{1, 1, 2, 3}, Rect{2, 1, 3, 3}}};
  f.canonicalize();
  validate_partition(f);
  CHECK_FALSE(is_packed(f));
}

TEST_CASE("floorplan counts are the baxter numbers") {
  const auto bax = baxter_numbers(8);
  for (int n = 1; n <= 7; ++n) {
    const auto level = pfp_level(n);
    CHECK(Int(level.size()) == bax[n]);
    std::set<PackedFloorplan> unique(level.begin(), level.end());
    CHECK(unique.size() == level.size());
    for (const PackedFloorplan& f : level) CHECK(is_packed(f));
  }
}

TEST_CASE("floorplan children follow the rule productions") {
  for (int n = 1; n <= 5; ++n)
    for (const PackedFloorplan& f : pfp_level(n)) {
      const auto expect = productions(RuleId::bax(), label_pfp(f));
      const auto kids = children_pfp(f);
      REQUIRE(kids.size() == expect.size());
      for (size_t i = 0; i < kids.size(); ++i)
        CHECK(label_pfp(kids[i]) == expect[i]);
    }
}

TEST_CASE("schroeder floorplan counts are the schroeder numbers") {
  const auto sch = schroeder_numbers(7);
  for (int n = 1; n <= 7; ++n) {
    const auto level = schroeder_pfp_level(n);
    CHECK(Int(level.size()) == sch[n - 1]);
    std::set<PackedFloorplan> unique(level.begin(), level.end());
    CHECK(unique.size() == level.size());
    for (const PackedFloorplan& f : level) CHECK(is_schroeder_pfp(f));
  }
}

TEST_CASE("schroeder floorplan growth equals the configuration filter") {
  for (int n = 1; n <= 6; ++n) {
    const auto grown = schroeder_pfp_level(n);
    std::set<PackedFloorplan> grown_set(grown.begin(), grown.end());
    std::set<PackedFloorplan> filtered;
    for (const PackedFloorplan& f : pfp_level(n))
      if (is_schroeder_pfp(f)) filtered.insert(f);
    CHECK(grown_set == filtered);
  }
}

TEST_CASE("schroeder floorplan children follow the rule productions") {
  for (int n = 1; n <= 5; ++n)
    for (const PackedFloorplan& f : schroeder_pfp_level(n)) {
      const auto expect =
          productions(RuleId::new_sch(), label_schroeder_pfp(f));
      const auto kids = children_schroeder_pfp(f);
      REQUIRE(kids.size() == expect.size());
      for (size_t i = 0; i < kids.size(); ++i)
        CHECK(label_schroeder_pfp(kids[i]) == expect[i]);
    }
}

TEST_CASE("size five floorplans outside the schroeder class") {
  std::set<PackedFloorplan> complement;
  for (const PackedFloorplan& f : pfp_level(5))
    if (!is_schroeder_pfp(f)) complement.insert(f);
  CHECK(complement.size() == 2);
  for (const PackedFloorplan& f : complement)
    CHECK(has_schroeder_forbidden_config(f));
}

TEST_CASE("catalan floorplan counts are the catalan numbers") {
  const auto cat = catalan_numbers(8);
  for (int n = 1; n <= 7; ++n) {
    Int cnt = 0;
    for (const PackedFloorplan& f : pfp_level(n))
      if (is_catalan_pfp(f)) ++cnt;
    CHECK(cnt == cat[n]);
  }
}

TEST_CASE("catalan floorplans are schroeder floorplans") {
  for (int n = 1; n <= 6; ++n)
    for (const PackedFloorplan& f : pfp_level(n))
      if (is_catalan_pfp(f)) CHECK(is_schroeder_pfp(f));
}

TEST_CASE("non schroeder floorplans cannot be labelled or grown") {
  PackedFloorplan bad;
  for (const PackedFloorplan& f : pfp_level(5))
    if (!is_schroeder_pfp(f)) {
      bad = f;
      break;
    }
  CHECK_THROWS_AS(label_schroeder_pfp(bad), NotSchroeder);
  CHECK_THROWS_AS(children_schroeder_pfp(bad), NotSchroeder);
}

TEST_CASE("every floorplan has a unique parent") {
  for (int n = 1; n <= 6; ++n) {
    const auto level = pfp_level(n);
    std::set<PackedFloorplan> parents(level.begin(), level.end());
    std::set<PackedFloorplan> kids;
    size_t produced = 0;
    for (const PackedFloorplan& f : parents)
      for (const PackedFloorplan& c : children_pfp(f)) {
        kids.insert(c);
        ++produced;
      }
    CHECK(kids.size() == produced);
  }
}
