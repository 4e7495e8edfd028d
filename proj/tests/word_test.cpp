#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "relhfk/word.hpp"

#include "corpus.hpp"

using namespace relhfk;

namespace {

std::vector<Letter> letters_of(const char* text) { return parse_relator(text).letters(); }

CyclicRelator random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  const Letter alphabet[4] = {{Axis::X, +1}, {Axis::X, -1}, {Axis::Y, +1}, {Axis::Y, -1}};
  std::vector<Letter> w;
  const int m = len(rng);
  for (int i = 0; i < m; ++i) w.push_back(alphabet[pick(rng)]);
  return CyclicRelator(w);
}

}  // namespace

TEST_CASE("parse expands tokens and keeps positions") {
  CHECK(letters_of("XyXYxY") ==
        std::vector<Letter>{{Axis::X, 1}, {Axis::Y, -1}, {Axis::X, 1},
                            {Axis::Y, 1}, {Axis::X, -1}, {Axis::Y, 1}});
  CHECK(letters_of("X^3") == std::vector<Letter>{{Axis::X, 1}, {Axis::X, 1}, {Axis::X, 1}});
  CHECK(serialize(parse_relator("X y^2 X")) == "XyyX");
  CHECK(serialize(parse_relator("Xy^2XyxYx")) == "XyyXyxYx");  // documented grammar example
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(parse_relator("XZ"), analysis_error);
  CHECK_THROWS_AS(parse_relator("X^"), analysis_error);
  CHECK_THROWS_AS(parse_relator("X^0"), analysis_error);
  CHECK_THROWS_AS(parse_relator(""), analysis_error);
  CHECK_THROWS_AS(parse_relator("  \t"), analysis_error);
}

TEST_CASE("cyclic reduction") {
  // the l_1 image of the trefoil relator reduces to xYXXY
  CHECK(serialize(cyclically_reduce(parse_relator("xyYYXyYXY"))) == "xYXXY");
  // already reduced words are fixed
  CHECK(cyclically_reduce(parse_relator(corpus::kTrefoil)) == parse_relator(corpus::kTrefoil));
  // seam cancellation
  CHECK(serialize(cyclically_reduce(parse_relator("YXXy"))) == "XX");
  // everything cancels
  CHECK_THROWS_AS(cyclically_reduce(parse_relator("XYyx")), analysis_error);
}

TEST_CASE("cyclic reduction is idempotent on random words") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    CyclicRelator w = random_word(rng, 12);
    CyclicRelator once;
    try {
      once = cyclically_reduce(w);
    } catch (const analysis_error&) {
      continue;  // fully cancelling word
    }
    CHECK(cyclically_reduce(once) == once);
    CHECK(once.cyclically_reduced());
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("parse/serialize round-trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    CyclicRelator w = random_word(rng, 16);
    CHECK(parse_relator(serialize(w)) == w);
  }
}

TEST_CASE("validate") {
  ValidationReport r = validate(parse_relator(corpus::kTrefoil), 1);
  CHECK(r.ok());
  CHECK(r.signed_x_count == 1);
  CHECK(r.x_letter_count == 3);
  CHECK(r.reduced);

  r = validate(parse_relator("XYXy"), 2);
  CHECK(r.ok());
  CHECK(r.signed_x_count == 2);

  r = validate(parse_relator("XxY"), 1);  // adjacent inverse pair
  CHECK_FALSE(r.reduced);
  CHECK_FALSE(r.ok());

  r = validate(parse_relator("XY"), 1);  // too few X-letters
  CHECK_FALSE(r.ok());
}

TEST_CASE("phi") {
  CyclicRelator trefoil = parse_relator(corpus::kTrefoil);
  CHECK(phi(trefoil, DiskSpan{0, 3}) == 1);  // whole X-letter range
  CHECK(phi(trefoil, DiskSpan{0, 1}) == 1);
  CHECK(phi(trefoil, DiskSpan{2, 1}) == -1);

  CyclicRelator five2 = parse_relator(corpus::kFiveTwo);
  CHECK(phi(five2, DiskSpan{0, 4}) == 0);  // X1 Y x2 Y X3 y x4
}

TEST_CASE("phi over one full period equals the signed count from every start") {
  for (const char* text : corpus::kAll) {
    CyclicRelator w = cyclically_reduce(parse_relator(text));
    for (int s = 0; s < w.x_count(); ++s)
      CHECK(phi(w, DiskSpan{s, w.x_count()}) == w.signed_x_count());
  }
}

TEST_CASE("height profile") {
  // X Y x
  CyclicRelator w1 = parse_relator("XYxY");
  CHECK(height_profile(w1, DiskSpan{0, 2}) == std::vector<int>{0, 0});

  // the first deleted disk word of the doubled-trefoil variant: x^3 Y X^3
  CyclicRelator w2 = parse_relator(corpus::kDoubledTrefoilVariant);
  CHECK(height_profile(w2, DiskSpan{4, 6}) == std::vector<int>{0, -1, -2, -2, -1, 0});

  // X Y X Y x y x
  CyclicRelator w3 = parse_relator("XYXYxyx");
  CHECK(height_profile(w3, DiskSpan{0, 4}) == std::vector<int>{0, 1, 1, 0});

  // not a disk word
  CHECK_THROWS_AS(height_profile(w3, DiskSpan{0, 2}), analysis_error);
}
