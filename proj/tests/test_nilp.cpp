#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "slicings/nilp.hpp"
#include "slicings/numeric.hpp"

using namespace slicings;

namespace {

BaxterSlicing make(std::initializer_list<Move> moves) {
  return BaxterSlicing::from_moves(std::vector<Move>(moves));
}

}  // namespace

TEST_CASE("triple validity") {
  CHECK(is_valid_triple(NilpTriple{"", "", "", 1}));
  CHECK(is_valid_triple(NilpTriple{"N", "N", "N", 2}));
  CHECK(is_valid_triple(NilpTriple{"E", "E", "E", 2}));
  // Length mismatch.
  CHECK_FALSE(is_valid_triple(NilpTriple{"N", "NN", "N", 2}));
  // Different numbers of east steps.
  CHECK_FALSE(is_valid_triple(NilpTriple{"E", "N", "N", 2}));
  // Intersecting paths: u through (1,2), m through (1,2).
  CHECK_FALSE(is_valid_triple(NilpTriple{"EN", "NE", "NN", 3}));
  // Bad alphabet.
  CHECK_FALSE(is_valid_triple(NilpTriple{"X", "N", "N", 2}));
  CHECK_THROWS_AS(require_valid(NilpTriple{"N", "NN", "N", 2}),
                  InvalidTriple);
}

TEST_CASE("triple counts are the baxter numbers") {
  const auto bax = baxter_numbers(8);
  for (int n = 1; n <= 7; ++n)
    CHECK(Int(enumerate_triples(n).size()) == bax[n]);
}

TEST_CASE("schroeder triple counts are the schroeder numbers") {
  const auto sch = schroeder_numbers(7);
  for (int n = 1; n <= 7; ++n) {
    Int cnt = 0;
    for (const NilpTriple& t : enumerate_triples(n))
      if (is_schroeder_triple(t)) ++cnt;
    CHECK(cnt == sch[n - 1]);
  }
}

TEST_CASE("round trip from triples") {
  for (int n = 1; n <= 6; ++n)
    for (const NilpTriple& t : enumerate_triples(n)) {
      const BaxterSlicing s = nilp_to_slicing(t);
      CHECK(s.size() == n);
      CHECK(slicing_to_nilp(s) == t);
    }
}

TEST_CASE("round trip from slicings") {
  for (int n = 1; n <= 6; ++n)
    for (const BaxterSlicing& s : family_level(RuleId::bax(), n)) {
      const NilpTriple t = slicing_to_nilp(s);
      CHECK(is_valid_triple(t));
      CHECK(nilp_to_slicing(t).moves() == s.moves());
    }
}

TEST_CASE("step statistics on a small slicing") {
  // Staircase of three blocks: unit, column, row.
  const BaxterSlicing s =
      make({Move{Move::Col, 1}, Move{Move::Row, 1}});
  const NilpTriple t = slicing_to_nilp(s);
  CHECK(t.n == 3);
  const StepStats st = step_stats(t);
  CHECK(st.h_u.size() == st.h_m.size());
  for (size_t i = 0; i < st.h_u.size(); ++i) CHECK(st.h_m[i] >= st.h_u[i]);
}

TEST_CASE("schroeder condition matches slicing membership") {
  for (int n = 1; n <= 6; ++n)
    for (const BaxterSlicing& s : family_level(RuleId::bax(), n))
      CHECK(is_schroeder_triple(slicing_to_nilp(s)) ==
            is_member(s, RuleId::new_sch()));
}

TEST_CASE("the remark triples violate the schroeder condition") {
  const BaxterSlicing r1 = make({Move{Move::Row, 1}, Move{Move::Col, 2},
                                 Move{Move::Col, 1}, Move{Move::Row, 3}});
  const BaxterSlicing r2 = make({Move{Move::Col, 1}, Move{Move::Row, 2},
                                 Move{Move::Col, 1}, Move{Move::Row, 3}});
  CHECK_FALSE(is_schroeder_triple(slicing_to_nilp(r1)));
  CHECK_FALSE(is_schroeder_triple(slicing_to_nilp(r2)));
}

TEST_CASE("invalid triples cannot be inverted") {
  CHECK_THROWS_AS(nilp_to_slicing(NilpTriple{"EN", "NE", "NN", 3}),
                  InvalidTriple);
}

TEST_CASE("enumeration is deterministic and duplicate free") {
  for (int n = 1; n <= 5; ++n) {
    const auto triples = enumerate_triples(n);
    std::set<NilpTriple> unique(triples.begin(), triples.end());
    CHECK(unique.size() == triples.size());
    CHECK(std::is_sorted(triples.begin(), triples.end()));
  }
}
