#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "slicings/numeric.hpp"
#include "slicings/perm.hpp"
#include "slicings/rules.hpp"

using namespace slicings;

namespace {

std::vector<Label> prods(const RuleId& rule, const Label& lab) {
  return productions(rule, lab);
}

}  // namespace

TEST_CASE("root labels") {
  CHECK(root(RuleId::cat()) == Label::unary(1));
  CHECK(root(RuleId::sch_west()) == Label::unary(2));
  CHECK(root(RuleId::bax()) == Label::binary(1, 1));
  CHECK(root(RuleId::new_sch()) == Label::binary(1, 1));
  CHECK(root(RuleId::skinny(3)) == Label::binary(1, 1));
  CHECK(root(RuleId::row_restricted(2)) == Label::binary(1, 1));
}

TEST_CASE("catalan productions") {
  CHECK(prods(RuleId::cat(), Label::unary(1)) ==
        std::vector<Label>{Label::unary(1), Label::unary(2)});
  CHECK(prods(RuleId::cat(), Label::unary(3)) ==
        std::vector<Label>{Label::unary(1), Label::unary(2), Label::unary(3),
                           Label::unary(4)});
}

TEST_CASE("western schroeder productions") {
  CHECK(prods(RuleId::sch_west(), Label::unary(2)) ==
        std::vector<Label>{Label::unary(3), Label::unary(3)});
  CHECK(prods(RuleId::sch_west(), Label::unary(4)) ==
        std::vector<Label>{Label::unary(3), Label::unary(4), Label::unary(5),
                           Label::unary(5)});
}

TEST_CASE("baxter productions") {
  CHECK(prods(RuleId::bax(), Label::binary(1, 1)) ==
        std::vector<Label>{Label::binary(1, 2), Label::binary(2, 1)});
  CHECK(prods(RuleId::bax(), Label::binary(2, 3)) ==
        std::vector<Label>{Label::binary(1, 4), Label::binary(2, 4),
                           Label::binary(3, 1), Label::binary(3, 2),
                           Label::binary(3, 3)});
}

TEST_CASE("new schroeder productions") {
  CHECK(prods(RuleId::new_sch(), Label::binary(1, 1)) ==
        std::vector<Label>{Label::binary(1, 2), Label::binary(2, 1)});
  CHECK(prods(RuleId::new_sch(), Label::binary(2, 3)) ==
        std::vector<Label>{Label::binary(1, 4), Label::binary(2, 4),
                           Label::binary(2, 1), Label::binary(2, 2),
                           Label::binary(3, 3)});
}

TEST_CASE("skinny and row restricted productions cap the row coordinate") {
  CHECK(prods(RuleId::skinny(1), Label::binary(2, 3)) ==
        prods(RuleId::new_sch(), Label::binary(2, 3)));
  CHECK(prods(RuleId::skinny(2), Label::binary(3, 2)) ==
        std::vector<Label>{Label::binary(1, 3), Label::binary(2, 3),
                           Label::binary(3, 3), Label::binary(3, 1),
                           Label::binary(4, 2)});
  CHECK(prods(RuleId::row_restricted(2), Label::binary(2, 2)) ==
        std::vector<Label>{Label::binary(1, 3), Label::binary(2, 3),
                           Label::binary(2, 1), Label::binary(2, 2)});
}

TEST_CASE("arity mismatches are rejected") {
  CHECK_THROWS_AS(prods(RuleId::cat(), Label::binary(1, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(prods(RuleId::bax(), Label::unary(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(RuleId::row_restricted(0), std::invalid_argument);
  CHECK_THROWS_AS(RuleId::skinny(-1), std::invalid_argument);
}

TEST_CASE("level counts match the classical sequences") {
  const auto cat = catalan_numbers(13);
  const auto sch = schroeder_numbers(13);
  const auto bax = baxter_numbers(13);
  const auto counts = [](const RuleId& r) { return level_counts(r, 12); };
  const auto cat_counts = counts(RuleId::cat());
  const auto schw_counts = counts(RuleId::sch_west());
  const auto news_counts = counts(RuleId::new_sch());
  const auto bax_counts = counts(RuleId::bax());
  for (int n = 1; n <= 12; ++n) {
    CHECK(cat_counts[n - 1] == cat[n]);
    CHECK(schw_counts[n - 1] == sch[n - 1]);
    CHECK(news_counts[n - 1] == sch[n - 1]);
    CHECK(bax_counts[n - 1] == bax[n]);
  }
}

TEST_CASE("boundary instances collapse to known rules") {
  CHECK(level_counts(RuleId::skinny(1), 12) ==
        level_counts(RuleId::sch_west(), 12));
  CHECK(level_counts(RuleId::row_restricted(1), 12) ==
        level_counts(RuleId::cat(), 12));
}

TEST_CASE("zero skinny equals two row restricted") {
  CHECK(level_counts(RuleId::skinny(0), 14) ==
        level_counts(RuleId::row_restricted(2), 14));
}

TEST_CASE("interpolation counts are monotone in the restriction") {
  std::vector<std::vector<Int>> sk, rr;
  for (int m = 0; m <= 6; ++m) sk.push_back(level_counts(RuleId::skinny(m), 10));
  for (int m = 1; m <= 6; ++m)
    rr.push_back(level_counts(RuleId::row_restricted(m), 10));
  const auto bax = level_counts(RuleId::bax(), 10);
  for (int i = 0; i + 1 < static_cast<int>(sk.size()); ++i)
    for (int n = 0; n < 10; ++n) {
      CHECK(sk[i][n] <= sk[i + 1][n]);
      CHECK(sk[i + 1][n] <= bax[n]);
    }
  for (int i = 0; i + 1 < static_cast<int>(rr.size()); ++i)
    for (int n = 0; n < 10; ++n) {
      CHECK(rr[i][n] <= rr[i + 1][n]);
      CHECK(rr[i + 1][n] <= bax[n]);
    }
}

TEST_CASE("large restrictions agree with the unrestricted rule on small sizes") {
  const auto bax = level_counts(RuleId::bax(), 8);
  CHECK(level_counts(RuleId::skinny(8), 8) == bax);
  CHECK(level_counts(RuleId::row_restricted(8), 8) == bax);
}

TEST_CASE("new schroeder tree collapses onto the western schroeder tree") {
  CHECK(check_newsch_sch_isomorphism(1));
  CHECK(check_newsch_sch_isomorphism(12));
}

TEST_CASE("schroeder tree embeds into the baxter tree") {
  CHECK(check_sch_in_bax_embedding(8));
  const EmbeddingScan scan = scan_sch_in_bax_embedding(5);
  CHECK(scan.ok);
  const auto sch = schroeder_numbers(5);
  for (int n = 1; n <= 5; ++n)
    CHECK(scan.image_level_sizes[n - 1] == sch[n - 1]);
  std::set<Permutation> missing;
  for (const auto& path : scan.missing_bax_paths)
    missing.insert(bax_tree_permutation(path));
  CHECK(missing ==
        std::set<Permutation>{{1, 3, 2, 5, 4}, {2, 3, 1, 5, 4}});
}

TEST_CASE("label profiles account for every node") {
  for (const RuleId& rule : {RuleId::bax(), RuleId::skinny(2),
                             RuleId::row_restricted(3)}) {
    const auto profiles = level_profiles(rule, 10);
    const auto counts = level_counts(rule, 10);
    for (int n = 0; n < 10; ++n) {
      Int total = 0;
      for (const auto& [lab, cnt] : profiles[n]) total += cnt;
      CHECK(total == counts[n]);
    }
  }
}
