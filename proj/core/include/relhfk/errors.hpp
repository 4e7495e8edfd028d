#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relhfk {

// Failure categories surfaced by the library. The CLI maps each to a
// distinct exit code.
enum class errc {
  parse,                 // malformed relator text
  validation,            // word-level precondition failed (empty word, wrong p, ...)
  not_quasi_geometric,   // a |k| = 1 or |l - l'| <= 1 constraint failed
  not_pseudo_geometric,  // grading normalization or relator reduction failed
  inconsistent,          // contradictory grading data or a broken internal invariant
};

const char* errc_name(errc code);

class analysis_error : public std::runtime_error {
 public:
  analysis_error(errc code, std::string stage, const std::string& what)
      : std::runtime_error(what), code_(code), stage_(std::move(stage)) {}

  errc code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  errc code_;
  std::string stage_;
};

[[noreturn]] inline void fail(errc code, const std::string& stage, const std::string& what) {
  throw analysis_error(code, stage, what);
}

// One rule violation observed while analyzing a word. In "collect" mode the
// pipeline records these instead of throwing, so a classifier can report
// every failure at once.
struct Violation {
  std::string rule;     // e.g. "qg2-adjacent-run", "pg-reduction-stall"
  std::string witness;  // human-readable witness (subword, labels, shifts, ...)
};

using ViolationLog = std::vector<Violation>;

}  // namespace relhfk
