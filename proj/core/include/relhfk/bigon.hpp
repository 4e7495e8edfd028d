#pragma once

#include <optional>
#include <vector>

#include "relhfk/word.hpp"

namespace relhfk {

enum class Direction : unsigned char { Upward, Downward };
enum class Orientation : unsigned char { Positive, Negative };

const char* to_string(Direction d);
const char* to_string(Orientation o);

// A primitive disk word of the relator, fully classified. `children` are the
// spans between consecutive height +-1 X-letters (empty iff elementary);
// l / l_prime are the boundary Y-run exponents of the upward-positive normal
// form, in the W_1^2 = X Y^l X / W_{n-1}^n = X~ Y~^l' X~ convention.
struct PrimitiveBigon {
  DiskSpan span;
  Direction direction{};
  Orientation orientation{};
  bool elementary = false;
  int l = 0;
  int l_prime = 0;
  std::vector<DiskSpan> children;
};

// Both endpoints of opposite sign and signed X-count zero.
bool is_disk_word(const CyclicRelator& relator, const DiskSpan& span);

// Disk word with no proper prefix of signed X-count zero.
bool is_primitive(const CyclicRelator& relator, const DiskSpan& span);

// Tallies the elementary subwords (opposite-sign adjacent X-letters with a
// +-1 Y-run between them): X Y X~ and X~ Y~ X count negative, X Y~ X~ and
// X~ Y X positive. A realizable span has tally difference exactly +-1 and its
// orientation is the sign of that difference. Logs instead of throwing when
// `log` is given; returns nullopt in that case.
std::optional<Orientation> orientation_of(const CyclicRelator& relator, const DiskSpan& span,
                                          ViolationLog* log = nullptr);

struct Decomposition {
  int l = 0;
  int l_prime = 0;
  std::vector<DiskSpan> children;
};

// Height-one cut of an upward-positive, non-elementary primitive span.
Decomposition decompose(const CyclicRelator& relator, const DiskSpan& span);

// All primitive spans with wrap_count <= wrap_bound, ordered by start label.
// Each X-letter starts at most one primitive span (the first return of the
// signed prefix sum to zero), so the list has at most x_count() entries.
std::vector<PrimitiveBigon> enumerate_primitive_bigons(const CyclicRelator& relator,
                                                       int wrap_bound,
                                                       ViolationLog* log = nullptr);

// Classification of a single primitive span (used by enumeration and by the
// basepoint recursion). Returns nullopt only in collect mode.
std::optional<PrimitiveBigon> classify_span(const CyclicRelator& relator, const DiskSpan& span,
                                            ViolationLog* log = nullptr);

}  // namespace relhfk
