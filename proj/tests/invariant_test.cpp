#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "relhfk/invariant.hpp"

#include "corpus.hpp"

using namespace relhfk;

namespace {

CyclicRelator load(const char* text) { return cyclically_reduce(parse_relator(text)); }

Laurent poly(std::initializer_list<std::pair<int, long long>> terms) {
  Laurent p;
  for (auto [e, c] : terms) p.add(e, c);
  return p;
}

}  // namespace

TEST_CASE("laurent polynomial basics") {
  Laurent p = poly({{2, 1}, {1, -1}, {0, 1}});
  CHECK(p.str() == "1 - t + t^2");
  p.add(1, 1);
  CHECK(p.coeff(1) == 0);  // zero coefficients are dropped
  CHECK(p.str() == "1 + t^2");
  CHECK(Laurent{}.str() == "0");
}

TEST_CASE("laurent equivalence") {
  CHECK(laurent_equiv(poly({{2, 1}, {1, -1}, {0, 1}}),
                      poly({{0, -1}, {-1, 1}, {-2, -1}})));  // -(t^-2)(t^2-t+1)... sign+shift
  CHECK_FALSE(laurent_equiv(poly({{1, 1}, {0, 1}}), poly({{1, 1}, {0, -1}})));
  CHECK(laurent_equiv(Laurent{}, Laurent{}));
  CHECK_FALSE(laurent_equiv(Laurent{}, poly({{0, 1}})));
}

TEST_CASE("symmetrized representative") {
  CHECK(poly({{3, 1}, {2, -1}, {1, 1}}).symmetrized().value() ==
        poly({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK_FALSE(poly({{1, 1}, {0, 1}, {-1, -1}}).symmetrized().has_value());
}

TEST_CASE("trefoil homology") {
  BigradedRank table = compute_hfk(load(corpus::kTrefoil));
  CHECK(table.total() == 3);
  std::set<std::pair<int, int>> support;
  for (auto& [k, c] : table.ranks) {
    CHECK(c == 1);
    support.insert(k);
  }
  const std::set<std::pair<int, int>> expected{{1, 0}, {0, -1}, {-1, -2}};
  std::set<std::pair<int, int>> mirrored;
  for (auto [s, m] : expected) mirrored.insert({-s, -m});
  CHECK((support == expected || support == mirrored));
}

TEST_CASE("poincare polynomial printing") {
  BigradedRank variant = compute_hfk(load(corpus::kDoubledTrefoilVariant));
  CHECK(poincare_polynomial(variant).str() == "6t^-1 q^-1 + 13 + 6t q");

  CHECK(poincare_polynomial(BigradedRank{}).str() == "0");
  BigradedRank one;
  one.ranks[{0, 0}] = 1;
  CHECK(poincare_polynomial(one).str() == "1");
}

TEST_CASE("euler characteristic of the published tables") {
  BigradedRank ten = compute_hfk(load(corpus::kTenOneSixtyOne));
  CHECK(euler_characteristic(ten) ==
        poly({{3, 1}, {1, -2}, {0, 3}, {-1, -2}, {-3, 1}}));

  BigradedRank dplus = compute_hfk(load(corpus::kDoubledTrefoil));
  CHECK(euler_characteristic(dplus) == poly({{-1, -6}, {0, 13}, {1, -6}}));

  BigradedRank trefoil = compute_hfk(load(corpus::kTrefoil));
  CHECK(laurent_equiv(euler_characteristic(trefoil), poly({{1, 1}, {0, -1}, {-1, 1}})));
}

TEST_CASE("alexander polynomial via abelianization") {
  // trefoil, k = 1: scan gives t + t^3 - t^2
  CHECK(alexander_via_abelianization(load(corpus::kTrefoil)) ==
        poly({{1, 1}, {3, 1}, {2, -1}}));
  CHECK(laurent_equiv(alexander_via_abelianization(load(corpus::kTrefoil)),
                      poly({{2, 1}, {1, -1}, {0, 1}})));

  // T_{2,7}
  CHECK(laurent_equiv(
      alexander_via_abelianization(load(corpus::kTorus27)),
      poly({{6, 1}, {5, -1}, {4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}})));

  CHECK_THROWS_AS(alexander_via_abelianization(parse_relator("YyY")), analysis_error);
  CHECK_THROWS_AS(alexander_via_abelianization(parse_relator("XYXy")), analysis_error);
}

TEST_CASE("euler matches alexander across the corpus") {
  for (const char* text : corpus::kAll) {
    CAPTURE(text);
    EulerAlexanderReport report = verify_euler_matches_alexander(load(text));
    REQUIRE(report.computed);
    CHECK(report.match);
    CHECK(report.alexander_at_one == 1);  // the recipe sums the X-signs at t = 1
    CHECK(std::abs(report.euler_at_one) == 1);
  }
}

TEST_CASE("the stalling presentation still matches on relative gradings") {
  EulerAlexanderReport report = verify_euler_matches_alexander(load(corpus::kStallTrefoil));
  REQUIRE(report.computed);
  CHECK_FALSE(report.absolute);
  CHECK(report.match);
}

TEST_CASE("total rank equals the X-letter count") {
  for (const char* text :
       {corpus::kTrefoil, corpus::kFiveTwo, corpus::kTenOneSixtyOne, corpus::kDoubledTrefoil}) {
    CyclicRelator w = load(text);
    CHECK(compute_hfk(w).total() == w.x_count());
  }
}

TEST_CASE("5_2 has rank 7 and the right euler characteristic") {
  CyclicRelator w = load(corpus::kFiveTwo);
  BigradedRank table = compute_hfk(w);
  CHECK(table.total() == 7);
  CHECK(laurent_equiv(euler_characteristic(table), poly({{1, 2}, {0, -3}, {-1, 2}})));
}
