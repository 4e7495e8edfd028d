#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relhfk/prestool.hpp"

#include "corpus.hpp"

using namespace relhfk;

namespace {

CyclicRelator load(const char* text) { return cyclically_reduce(parse_relator(text)); }

Laurent2 poincare(const char* text) { return analyze(load(text), AnalysisOptions{}).poincare; }

}  // namespace

TEST_CASE("classification tiers of the corpus") {
  CHECK(classify(load(corpus::kTrefoil)).tier == Tier::PseudoGeometric);
  CHECK(classify(load(corpus::kTenOneSixtyOne)).tier == Tier::PseudoGeometric);
  CHECK(classify(load(corpus::kDoubledTrefoilVariant)).tier == Tier::PseudoGeometric);
  CHECK(classify(load(corpus::kTorus27)).tier == Tier::PseudoGeometric);

  Classification stall = classify(load(corpus::kStallTrefoil));
  CHECK(stall.tier == Tier::QuasiGeometric);
  REQUIRE_FALSE(stall.failures.empty());
  CHECK(stall.failures.front().rule == "pg-reduction-stall");
  CHECK(stall.failures.front().witness.find("{x2, x3, x4}") != std::string::npos);
}

TEST_CASE("rule violations demote to not-quasi-geometric") {
  Classification c = classify(load("XYXy"));  // signed count 2
  CHECK(c.tier == Tier::NotQuasiGeometric);
  CHECK(c.failures.front().rule == "qg1-signed-count");

  c = classify(load("XY^2xYXY"));  // |k| = 2 between opposite letters, signed count 1
  CHECK(c.tier == Tier::NotQuasiGeometric);
  CHECK(c.failures.front().rule == "qg2-adjacent-run");
}

TEST_CASE("all primitive disk words of the T_{2,7} presentation are elementary") {
  CyclicRelator w = load(corpus::kTorus27);
  for (const PrimitiveBigon& b : enumerate_primitive_bigons(w, w.x_count() + 1))
    CHECK(b.elementary);
}

TEST_CASE("l_1 carries the Figure-7 relator to its handleslide image") {
  CHECK(serialize(transform(load("xYXyXY"), {TransformKind::L, 1})) == "xYXXY");
}

TEST_CASE("transformations compose and invert as expected") {
  CyclicRelator w = load(corpus::kTenOneSixtyOne);

  // tau is an involution
  CHECK(transform(transform(w, {TransformKind::Tau, 0}), {TransformKind::Tau, 0}) == w);

  // l_0 and r_0 are the identity
  CHECK(transform(w, {TransformKind::L, 0}) == w);
  CHECK(transform(w, {TransformKind::R, 0}) == w);

  // l_k . l_j = l_{k+j} as cyclic words, and the same for r
  for (int k = -3; k <= 3; ++k) {
    for (int j = -3; j <= 3; ++j) {
      CHECK(cyclic_equal(transform(transform(w, {TransformKind::L, j}), {TransformKind::L, k}),
                         transform(w, {TransformKind::L, k + j})));
      CHECK(cyclic_equal(transform(transform(w, {TransformKind::R, j}), {TransformKind::R, k}),
                         transform(w, {TransformKind::R, k + j})));
    }
  }
}

TEST_CASE("the trefoil pair of Figure 7 has one Poincare polynomial") {
  CHECK(poincare("xYXyXY") == poincare("xYXXY"));
}

TEST_CASE("tau mirrors the Poincare polynomial") {
  for (const char* text :
       {corpus::kTrefoil, corpus::kFiveTwo, corpus::kTenOneSixtyOne, corpus::kTorus27}) {
    CyclicRelator w = load(text);
    Laurent2 base = analyze(w, AnalysisOptions{}).poincare;
    Laurent2 tau = analyze(transform(w, {TransformKind::Tau, 0}), AnalysisOptions{}).poincare;
    CHECK(tau == base.mirrored());
  }
}

TEST_CASE("covariance report passes on diagram presentations") {
  CovarianceReport report = verify_transformation_covariance(load(corpus::kDoubledTrefoil));
  CHECK(report.base_ok);
  CHECK(report.all_pass());
  CHECK(report.entries.size() == 5);
}

TEST_CASE("covariance report flags an unusable base") {
  CovarianceReport report = verify_transformation_covariance(load(corpus::kStallTrefoil));
  CHECK_FALSE(report.base_ok);
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("classification is rotation invariant") {
  const std::string text = serialize(load(corpus::kStallTrefoil));
  for (size_t by = 0; by < text.size(); ++by) {
    std::string rotated = text.substr(by) + text.substr(0, by);
    CHECK(classify(parse_relator(rotated)).tier == Tier::QuasiGeometric);
  }
}
