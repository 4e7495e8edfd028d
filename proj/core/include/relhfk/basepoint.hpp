#pragma once

#include <optional>
#include <unordered_map>

#include "relhfk/bigon.hpp"

namespace relhfk {

// Signed count of z- and w-basepoint lifts inside a bigon, read from its
// start letter towards its end letter.
struct BasepointPair {
  int nz = 0;
  int nw = 0;

  friend bool operator==(const BasepointPair&, const BasepointPair&) = default;
  BasepointPair operator+(const BasepointPair& o) const { return {nz + o.nz, nw + o.nw}; }
  BasepointPair operator-() const { return {-nz, -nw}; }
  BasepointPair swapped() const { return {nw, nz}; }
};

enum class SquareCase : unsigned char {
  DiffTable,               // |l - l'| = 1
  SingleChildZero,         // l = l', one height-one child
  SameOrientationOneOne,   // l = l', d >= 2, first and last children co-oriented with D
  ZeroZero,                // l = l', d >= 2, otherwise
};

struct SquareContribution {
  BasepointPair value;
  SquareCase case_tag{};
};

// Basepoint counts of the four elementary patterns, keyed by the sign of the
// first X-letter and the sign of the middle Y-run:
//   X Y X~ -> (0,-1)    X Y~ X~ -> (0,1)    X~ Y X -> (1,0)    X~ Y~ X -> (-1,0)
// Thickened patterns X^k Y^e X~^k count the same as X Y^e X~.
BasepointPair elementary_P(int first_sign, int run_sign);

// Basepoints of the square domain between the two boundary arcs of an
// upward-positive primitive span with boundary words X Y^l X and X~ Y~^l' X~:
// (1,0) when l - l' = 1, (0,1) when l - l' = -1; for l = l' it is (1,1) only
// when d >= 2 and both outer children match D's orientation, else (0,0).
// |l - l'| > 1 is a quasi-geometric violation.
SquareContribution square_contribution(int l, int l_prime, int d, bool first_child_positive,
                                       bool last_child_positive);

// Memoized P(D) computation for the spans of one relator.
class BasepointSession {
 public:
  explicit BasepointSession(const CyclicRelator& relator, ViolationLog* log = nullptr)
      : relator_(&relator), log_(log) {}

  // nullopt only in collect mode, after logging the violation.
  std::optional<BasepointPair> count(const DiskSpan& span);

 private:
  std::optional<BasepointPair> count_rec(const DiskSpan& span, int depth);

  const CyclicRelator* relator_;
  ViolationLog* log_;
  std::unordered_map<long long, std::optional<BasepointPair>> memo_;
};

// One-shot wrapper; throws on any violation.
BasepointPair count_basepoints(const CyclicRelator& relator, const DiskSpan& span);

}  // namespace relhfk
