#include "relhfk/word.hpp"

#include <cctype>
#include <sstream>

namespace relhfk {

const char* errc_name(errc code) {
  switch (code) {
    case errc::parse: return "parse";
    case errc::validation: return "validation";
    case errc::not_quasi_geometric: return "not-quasi-geometric";
    case errc::not_pseudo_geometric: return "not-pseudo-geometric";
    case errc::inconsistent: return "inconsistent";
  }
  return "unknown";
}

char Letter::symbol() const {
  if (axis == Axis::X) return sign > 0 ? 'X' : 'x';
  return sign > 0 ? 'Y' : 'y';
}

CyclicRelator::CyclicRelator(std::vector<Letter> letters) : letters_(std::move(letters)) {
  const int m = static_cast<int>(letters_.size());
  for (int i = 0; i < m; ++i) {
    if (letters_[i].axis == Axis::X) {
      x_positions_.push_back(i);
      x_signs_.push_back(letters_[i].sign);
      signed_x_count_ += letters_[i].sign;
    }
  }
  const int n = static_cast<int>(x_positions_.size());
  y_runs_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int pos = x_positions_[i];
    int next = x_positions_[(i + 1) % n];
    for (int j = (pos + 1) % m; j != next; j = (j + 1) % m) y_runs_[i] += letters_[j].sign;
  }
}

bool CyclicRelator::cyclically_reduced() const {
  const int m = period();
  if (m < 2) return true;
  for (int i = 0; i < m; ++i) {
    if (letters_[i] == letters_[(i + 1) % m].inverse()) return false;
  }
  return true;
}

std::vector<Letter> CyclicRelator::span_word(const DiskSpan& span) const {
  std::vector<Letter> out;
  const int n = x_count();
  for (int k = 0; k + 1 < span.x_len; ++k) {
    int i = (span.start + k) % n;
    out.push_back(Letter{Axis::X, x_signs_[i]});
    int run = y_runs_[i];
    for (int j = 0; j < (run < 0 ? -run : run); ++j) out.push_back(Letter{Axis::Y, run < 0 ? -1 : +1});
  }
  out.push_back(Letter{Axis::X, x_sign(span.start + span.x_len - 1)});
  return out;
}

CyclicRelator parse_relator(std::string_view text) {
  std::vector<Letter> letters;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Letter letter;
    switch (c) {
      case 'X': letter = {Axis::X, +1}; break;
      case 'x': letter = {Axis::X, -1}; break;
      case 'Y': letter = {Axis::Y, +1}; break;
      case 'y': letter = {Axis::Y, -1}; break;
      default:
        fail(errc::parse, "parse_relator",
             "unknown symbol '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
    ++i;
    long repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i || i - start > 6)
        fail(errc::parse, "parse_relator", "malformed exponent at offset " + std::to_string(start));
      repeat = std::stol(std::string(text.substr(start, i - start)));
      if (repeat <= 0)
        fail(errc::parse, "parse_relator", "malformed exponent at offset " + std::to_string(start));
    }
    for (long r = 0; r < repeat; ++r) letters.push_back(letter);
    if (letters.size() > kMaxRelatorLength)
      fail(errc::parse, "parse_relator",
           "relator longer than " + std::to_string(kMaxRelatorLength) + " letters");
  }
  if (letters.empty()) fail(errc::parse, "parse_relator", "empty word");
  return CyclicRelator(std::move(letters));
}

std::string word_text(const std::vector<Letter>& letters) {
  std::string s;
  s.reserve(letters.size());
  for (const Letter& l : letters) s.push_back(l.symbol());
  return s;
}

std::string serialize(const CyclicRelator& relator) { return word_text(relator.letters()); }

CyclicRelator cyclically_reduce(const CyclicRelator& relator) {
  std::vector<Letter> w = relator.letters();
  bool changed = true;
  while (changed && w.size() >= 2) {
    changed = false;
    const int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i) {
      int j = (i + 1) % m;
      if (w[i] == w[j].inverse()) {
        if (j > i) {
          w.erase(w.begin() + j);
          w.erase(w.begin() + i);
        } else {  // pair straddles the seam
          w.erase(w.begin() + i);
          w.erase(w.begin());
        }
        changed = true;
        break;
      }
    }
  }
  if (w.empty())
    fail(errc::validation, "cyclically_reduce", "relator reduces to the empty word");
  return CyclicRelator(std::move(w));
}

bool cyclic_equal(const CyclicRelator& a, const CyclicRelator& b) {
  const int m = a.period();
  if (m != b.period()) return false;
  for (int shift = 0; shift < m; ++shift) {
    bool match = true;
    for (int i = 0; i < m && match; ++i) match = a.letters()[i] == b.letters()[(i + shift) % m];
    if (match) return true;
  }
  return false;
}

ValidationReport validate(const CyclicRelator& relator, int expected_p) {
  ValidationReport report;
  report.signed_x_count = relator.signed_x_count();
  report.x_letter_count = relator.x_count();
  report.reduced = relator.cyclically_reduced();
  if (relator.empty()) report.violations.push_back("empty relator");
  if (!report.reduced) report.violations.push_back("relator is not cyclically reduced");
  if (report.x_letter_count < 2)
    report.violations.push_back("fewer than 2 X-letters (unknotted or degenerate input)");
  if (report.signed_x_count != expected_p) {
    std::ostringstream os;
    os << "signed X-count is " << report.signed_x_count << ", expected " << expected_p;
    report.violations.push_back(os.str());
  }
  return report;
}

int phi(const CyclicRelator& relator, const DiskSpan& span) {
  if (relator.x_count() == 0)
    fail(errc::validation, "phi", "relator has no X-letters");
  int sum = 0;
  for (int k = 0; k < span.x_len; ++k) sum += relator.x_sign(span.start + k);
  return sum;
}

std::vector<int> height_profile(const CyclicRelator& relator, const DiskSpan& span) {
  if (relator.x_count() == 0)
    fail(errc::validation, "height_profile", "relator has no X-letters");
  const int s1 = relator.x_sign(span.start);
  const int last = relator.x_sign(span.start + span.x_len - 1);
  if (span.x_len < 2 || s1 == last || phi(relator, span) != 0)
    fail(errc::validation, "height_profile", "span is not a disk word");
  std::vector<int> h(span.x_len);
  int prefix = 0;
  for (int k = 0; k < span.x_len; ++k) {
    int sk = relator.x_sign(span.start + k);
    prefix += sk;
    h[k] = prefix - (sk == s1 ? s1 : 0);
  }
  return h;
}

}  // namespace relhfk
