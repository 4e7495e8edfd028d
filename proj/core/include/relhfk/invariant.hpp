#pragma once

#include "relhfk/pipeline.hpp"

namespace relhfk {

// Rank of the bigraded homology: (Alexander grading s, Maslov grading m) ->
// number of generators. The differential vanishes, so this is the whole
// invariant; total rank equals the X-letter count.
struct BigradedRank {
  std::map<std::pair<int, int>, long long> ranks;

  long long total() const;
  friend bool operator==(const BigradedRank&, const BigradedRank&) = default;
};

// Full pipeline for a knot in S^3 (p = 1). Throws on any failure.
BigradedRank compute_hfk(const CyclicRelator& relator);

// Sum of rank * t^s q^m.
Laurent2 poincare_polynomial(const BigradedRank& table);

// Substitute q = -1.
Laurent euler_characteristic(const BigradedRank& table);

// The (unnormalized) Alexander polynomial read off the abelianized relator:
// with R -> X + kY under abelianization, substitute X = Y^-k a, X~ = a~ Y^k
// and record +-t^-E for each a-occurrence, E being the Y-exponent
// accumulated so far. Requires signed X-count 1.
Laurent alexander_via_abelianization(const CyclicRelator& relator);

// f == +- t^c g.
bool laurent_equiv(const Laurent& f, const Laurent& g);

struct EulerAlexanderReport {
  bool computed = false;   // both sides were available
  bool match = false;      // euler == +- t^c alexander
  bool absolute = false;   // euler taken from fully normalized gradings
  Laurent euler;
  Laurent alexander;
  std::optional<Laurent> alexander_symmetrized;
  long long alexander_at_one = 0;
  long long euler_at_one = 0;
  std::string detail;
};

// Differential test of Euler characteristic against the abelianization
// recipe. Works with relative gradings, so it also applies to
// quasi-geometric presentations where the absolute steps fail.
EulerAlexanderReport verify_euler_matches_alexander(const CyclicRelator& relator);

}  // namespace relhfk
