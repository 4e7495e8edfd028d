#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "relhfk/errors.hpp"

namespace relhfk {

enum class Axis : unsigned char { X, Y };

// One signed generator symbol of the relator: X, X^-1, Y or Y^-1.
struct Letter {
  Axis axis{Axis::X};
  int sign{+1};  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  Letter inverse() const { return Letter{axis, -sign}; }
  char symbol() const;  // 'X', 'x', 'Y', 'y'
};

// A run of consecutive X-letters of a relator, addressed cyclically: the
// span starts at X-letter `start` (0-based) and covers `x_len` X-letters
// walking forward, wrapping past the seam as needed. `x_len` may exceed the
// number of X-letters in one period.
struct DiskSpan {
  int start{};
  int x_len{};

  friend bool operator==(const DiskSpan&, const DiskSpan&) = default;
  int end_label(int x_count) const { return (start + x_len - 1) % x_count; }
  int wrap_count(int x_count) const { return (start + x_len - 1) / x_count; }
};

// A cyclic word over {X, X^-1, Y, Y^-1} with stable positions. Index i and
// i + period refer to the same letter. X-letters carry 0-based labels in
// textual order (printed 1-based to match the usual tables).
class CyclicRelator {
 public:
  CyclicRelator() = default;
  explicit CyclicRelator(std::vector<Letter> letters);

  int period() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const std::vector<int>& x_positions() const { return x_positions_; }
  int x_count() const { return static_cast<int>(x_positions_.size()); }

  // Sign of the i-th X-letter; i is taken cyclically (i >= 0).
  int x_sign(int i) const { return x_signs_[i % x_signs_.size()]; }
  // Net Y-exponent strictly between X-letter i and X-letter i+1.
  int y_run(int i) const { return y_runs_[i % y_runs_.size()]; }

  int signed_x_count() const { return signed_x_count_; }
  bool cyclically_reduced() const;

  // Letters of a span, both endpoint X-letters included. Y-runs are emitted
  // as sign-uniform blocks, which is faithful for reduced words.
  std::vector<Letter> span_word(const DiskSpan& span) const;

  friend bool operator==(const CyclicRelator&, const CyclicRelator&) = default;

 private:
  std::vector<Letter> letters_;
  std::vector<int> x_positions_;
  std::vector<int> x_signs_;
  std::vector<int> y_runs_;
  int signed_x_count_ = 0;
};

struct ValidationReport {
  int signed_x_count = 0;  // #X - #X^-1
  int x_letter_count = 0;
  bool reduced = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Generous bound for any realistic presentation; keeps the quadratic
// enumeration bounded on adversarial input.
inline constexpr std::size_t kMaxRelatorLength = 20000;

// Grammar: tokens X, x (= X^-1), Y, y (= Y^-1), each optionally followed by
// ^<positive integer>; ASCII whitespace ignored. No reduction is performed.
CyclicRelator parse_relator(std::string_view text);

// Inverse of parse_relator up to exponent expansion: plain letters, no '^'.
std::string serialize(const CyclicRelator& relator);
std::string word_text(const std::vector<Letter>& letters);

// Cancels adjacent inverse pairs, including across the seam, until the fixed
// point. Fails if everything cancels.
CyclicRelator cyclically_reduce(const CyclicRelator& relator);

// Equality as cyclic words (the stored rotation is ignored).
bool cyclic_equal(const CyclicRelator& a, const CyclicRelator& b);

ValidationReport validate(const CyclicRelator& relator, int expected_p);

// Signed X-count of the subword spanned by `span`, both endpoints included.
int phi(const CyclicRelator& relator, const DiskSpan& span);

// Heights of the X-letters of a disk word relative to its endpoints:
// h(i) = phi(prefix through i) - s1 * [sign(i) == s1], where s1 is the sign
// of the first letter. Both endpoints sit at height 0; interior heights of a
// primitive span share one sign (positive iff the span is upward).
std::vector<int> height_profile(const CyclicRelator& relator, const DiskSpan& span);

}  // namespace relhfk
