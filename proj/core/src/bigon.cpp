#include "relhfk/bigon.hpp"

#include <sstream>

namespace relhfk {

const char* to_string(Direction d) { return d == Direction::Upward ? "upward" : "downward"; }
const char* to_string(Orientation o) { return o == Orientation::Positive ? "positive" : "negative"; }

namespace {

std::string span_text(const CyclicRelator& r, const DiskSpan& span) {
  std::ostringstream os;
  os << word_text(r.span_word(span)) << " (x" << span.start + 1 << "..x"
     << span.end_label(r.x_count()) + 1;
  if (span.wrap_count(r.x_count()) > 0) os << ", wraps " << span.wrap_count(r.x_count());
  os << ")";
  return os.str();
}

bool report(ViolationLog* log, errc code, const std::string& rule, const std::string& witness) {
  if (log) {
    log->push_back({rule, witness});
    return false;
  }
  fail(code, rule, witness);
}

}  // namespace

bool is_disk_word(const CyclicRelator& relator, const DiskSpan& span) {
  if (span.x_len < 2) return false;
  return relator.x_sign(span.start) != relator.x_sign(span.start + span.x_len - 1) &&
         phi(relator, span) == 0;
}

bool is_primitive(const CyclicRelator& relator, const DiskSpan& span) {
  if (!is_disk_word(relator, span)) return false;
  int prefix = 0;
  for (int k = 0; k + 1 < span.x_len; ++k) {
    prefix += relator.x_sign(span.start + k);
    if (k > 0 && prefix == 0) return false;
  }
  return true;
}

std::optional<Orientation> orientation_of(const CyclicRelator& relator, const DiskSpan& span,
                                          ViolationLog* log) {
  int tally = 0;
  bool bad_run = false;
  for (int k = 0; k + 1 < span.x_len; ++k) {
    int s = relator.x_sign(span.start + k);
    int t = relator.x_sign(span.start + k + 1);
    if (s == t) continue;
    int run = relator.y_run(span.start + k);
    if (run != 1 && run != -1) {
      bad_run = true;
      report(log, errc::not_quasi_geometric, "qg2-adjacent-run",
             "opposite-sign X-letters x" + std::to_string((span.start + k) % relator.x_count() + 1) +
                 ", x" + std::to_string((span.start + k + 1) % relator.x_count() + 1) +
                 " joined by Y-run of exponent " + std::to_string(run));
      continue;
    }
    // X Y~ X~ and X~ Y X are positive, X Y X~ and X~ Y~ X negative
    tally += (s * run == -1) ? +1 : -1;
  }
  if (bad_run) return std::nullopt;
  if (tally != 1 && tally != -1) {
    report(log, errc::not_quasi_geometric, "orientation-tally",
           "elementary tally " + std::to_string(tally) + " for span " + span_text(relator, span));
    return std::nullopt;
  }
  return tally == 1 ? Orientation::Positive : Orientation::Negative;
}

std::optional<PrimitiveBigon> classify_span(const CyclicRelator& relator, const DiskSpan& span,
                                            ViolationLog* log) {
  PrimitiveBigon b;
  b.span = span;
  b.direction = relator.x_sign(span.start) > 0 ? Direction::Upward : Direction::Downward;
  auto orient = orientation_of(relator, span, log);
  if (!orient) return std::nullopt;
  b.orientation = *orient;

  // group boundaries: sign change or nonzero Y-run between adjacent X-letters
  int boundaries = 0;
  for (int k = 0; k + 1 < span.x_len; ++k) {
    if (relator.x_sign(span.start + k) != relator.x_sign(span.start + k + 1) ||
        relator.y_run(span.start + k) != 0)
      ++boundaries;
  }
  b.elementary = (boundaries == 1);

  const int r_first = relator.y_run(span.start);
  const int r_last = relator.y_run(span.start + span.x_len - 2);
  if (b.elementary) {
    // single middle run, recorded in the same l / l-prime convention
    for (int k = 0; k + 1 < span.x_len; ++k) {
      if (relator.x_sign(span.start + k) != relator.x_sign(span.start + k + 1)) {
        b.l = relator.y_run(span.start + k);
        b.l_prime = -b.l;
      }
    }
    return b;
  }

  // The normal form inverts Y-letters for upward-negative spans, X-letters
  // for downward-negative, and both for downward-positive. Only a Y-inversion
  // changes the boundary runs.
  const bool invert_y = (b.direction == Direction::Upward) ==
                        (b.orientation == Orientation::Negative);
  const int sy = invert_y ? -1 : +1;
  b.l = sy * r_first;
  b.l_prime = -sy * r_last;

  const int delta = b.direction == Direction::Upward ? +1 : -1;
  std::vector<int> h = height_profile(relator, span);
  std::vector<int> cuts;
  for (int k = 1; k + 1 < span.x_len; ++k) {
    if (h[k] == delta) cuts.push_back(k);
  }
  if (cuts.size() < 2 || cuts.front() != 1 || cuts.back() != span.x_len - 2) {
    report(log, errc::inconsistent, "height-cut",
           "height-one cut points malformed for span " + span_text(relator, span));
    return std::nullopt;
  }
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    DiskSpan child{(span.start + cuts[i]) % relator.x_count(), cuts[i + 1] - cuts[i] + 1};
    if (!is_primitive(relator, child)) {
      report(log, errc::inconsistent, "child-not-primitive",
             "decomposition child " + span_text(relator, child) + " is not primitive");
      return std::nullopt;
    }
    b.children.push_back(child);
  }
  return b;
}

Decomposition decompose(const CyclicRelator& relator, const DiskSpan& span) {
  if (!is_primitive(relator, span))
    fail(errc::inconsistent, "decompose", "span is not a primitive disk word");
  auto b = classify_span(relator, span);
  if (b->elementary) fail(errc::inconsistent, "decompose", "span is elementary");
  if (b->direction != Direction::Upward || b->orientation != Orientation::Positive)
    fail(errc::inconsistent, "decompose", "span is not in upward-positive form");
  return Decomposition{b->l, b->l_prime, b->children};
}

std::vector<PrimitiveBigon> enumerate_primitive_bigons(const CyclicRelator& relator,
                                                       int wrap_bound, ViolationLog* log) {
  const int n = relator.x_count();
  std::vector<PrimitiveBigon> out;
  if (n == 0) return out;
  // When the signed X-count is positive, a first return always happens
  // within one period if it happens at all (the prefix sum gains p per
  // period), so the walk can stop early regardless of the wrap bound.
  const bool one_period = relator.signed_x_count() >= 1;
  for (int s = 0; s < n; ++s) {
    int psi = relator.x_sign(s);
    for (int j = s + 1; j / n <= wrap_bound && (!one_period || j <= s + n); ++j) {
      psi += relator.x_sign(j);
      if (psi == 0) {
        // first return: endpoints oppose automatically, no interior zero
        auto b = classify_span(relator, DiskSpan{s, j - s + 1}, log);
        if (b) out.push_back(std::move(*b));
        break;
      }
    }
  }
  return out;
}

}  // namespace relhfk
