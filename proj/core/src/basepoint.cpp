#include "relhfk/basepoint.hpp"

#include <sstream>

namespace relhfk {

namespace {

std::string span_label(const CyclicRelator& r, const DiskSpan& span) {
  std::ostringstream os;
  os << word_text(r.span_word(span)) << " (x" << span.start + 1 << "..x"
     << span.end_label(r.x_count()) + 1 << ")";
  return os.str();
}

}  // namespace

BasepointPair elementary_P(int first_sign, int run_sign) {
  if (first_sign > 0) return run_sign > 0 ? BasepointPair{0, -1} : BasepointPair{0, 1};
  return run_sign > 0 ? BasepointPair{1, 0} : BasepointPair{-1, 0};
}

SquareContribution square_contribution(int l, int l_prime, int d, bool first_child_positive,
                                       bool last_child_positive) {
  const int diff = l - l_prime;
  if (diff > 1 || diff < -1)
    fail(errc::not_quasi_geometric, "qg3-square-pair",
         "boundary words X Y^" + std::to_string(l) + " X and X~ Y~^" + std::to_string(l_prime) +
             " X~ differ by more than one");
  if (diff == 1) return {BasepointPair{1, 0}, SquareCase::DiffTable};
  if (diff == -1) return {BasepointPair{0, 1}, SquareCase::DiffTable};
  if (d == 1) return {BasepointPair{0, 0}, SquareCase::SingleChildZero};
  if (first_child_positive && last_child_positive)
    return {BasepointPair{1, 1}, SquareCase::SameOrientationOneOne};
  return {BasepointPair{0, 0}, SquareCase::ZeroZero};
}

std::optional<BasepointPair> BasepointSession::count(const DiskSpan& span) {
  return count_rec(span, 0);
}

std::optional<BasepointPair> BasepointSession::count_rec(const DiskSpan& span, int depth) {
  const CyclicRelator& r = *relator_;
  const int n = r.x_count();
  if (depth > n)
    fail(errc::inconsistent, "count_basepoints",
         "recursion exceeded the X-letter count at span " + span_label(r, span));

  const long long key = static_cast<long long>(span.x_len) * n + span.start % n;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::optional<BasepointPair> result;
  auto b = classify_span(r, span, log_);
  if (!b) {
    memo_[key] = std::nullopt;
    return std::nullopt;
  }

  if (b->elementary) {
    // orientation_of has already verified the middle run is +-1
    result = elementary_P(r.x_sign(span.start), b->l);
    memo_[key] = result;
    return result;
  }

  // Normalize to the upward-positive frame. The frame map sends an original
  // P-value to its normalized counterpart and is its own inverse:
  //   upward negative    invert Y    p -> -p
  //   downward negative  invert X    p -> -swap(p)
  //   downward positive  invert XY   p -> swap(p)
  const bool up = b->direction == Direction::Upward;
  const bool pos = b->orientation == Orientation::Positive;
  auto to_frame = [&](BasepointPair p) -> BasepointPair {
    if (up && pos) return p;
    if (up) return -p;
    if (pos) return p.swapped();
    return -p.swapped();
  };

  BasepointPair child_sum{0, 0};
  bool first_pos = false, last_pos = false;
  for (size_t i = 0; i < b->children.size(); ++i) {
    auto child_p = count_rec(b->children[i], depth + 1);
    if (!child_p) {
      memo_[key] = std::nullopt;
      return std::nullopt;
    }
    child_sum = child_sum + to_frame(*child_p);
    auto child_orient = orientation_of(r, b->children[i], log_);
    if (!child_orient) {
      memo_[key] = std::nullopt;
      return std::nullopt;
    }
    // a child is positive in the normalized frame iff it is co-oriented with D
    const bool co = (*child_orient == b->orientation);
    if (i == 0) first_pos = co;
    if (i + 1 == b->children.size()) last_pos = co;
  }

  const int diff = b->l - b->l_prime;
  if (diff > 1 || diff < -1) {
    const std::string msg = "boundary pair (X Y^" + std::to_string(b->l) + " X, X~ Y~^" +
                            std::to_string(b->l_prime) + " X~) violates |l - l'| <= 1 in " +
                            span_label(r, span);
    if (log_) {
      log_->push_back({"qg3-square-pair", msg});
      memo_[key] = std::nullopt;
      return std::nullopt;
    }
    fail(errc::not_quasi_geometric, "qg3-square-pair", msg);
  }
  SquareContribution square = square_contribution(
      b->l, b->l_prime, static_cast<int>(b->children.size()), first_pos, last_pos);

  result = to_frame(square.value + child_sum);
  memo_[key] = result;
  return result;
}

BasepointPair count_basepoints(const CyclicRelator& relator, const DiskSpan& span) {
  if (!is_primitive(relator, span))
    fail(errc::inconsistent, "count_basepoints", "span is not a primitive disk word");
  BasepointSession session(relator);
  return *session.count(span);
}

}  // namespace relhfk
