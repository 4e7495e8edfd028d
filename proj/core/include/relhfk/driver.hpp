#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>  // system package (nlohmann-json3-dev)

#include "relhfk/prestool.hpp"

namespace relhfk {

using json = nlohmann::ordered_json;

enum class Mode : unsigned char { Hfk, Classify, Alexander, Transform, Lens, Verify };

const char* to_string(Mode mode);

struct JobSpec {
  std::string relator_text;
  Mode mode = Mode::Hfk;
  int p = 1;                          // lens mode
  std::optional<TransformOp> op;      // transform mode
  int wrap_bound = 0;                 // 0 = automatic
  bool verify = false;                // add verification section to hfk/lens output
  enum class Format : unsigned char { Text, Machine } format = Format::Text;
};

// Exit codes, stable across releases.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBatchFailure = 1;  // also CLI usage errors
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitNotQuasiGeometric = 4;
inline constexpr int kExitNotPseudoGeometric = 5;
inline constexpr int kExitInconsistent = 6;

int exit_code_for(errc code);

struct RunResult {
  int exit_code = kExitOk;
  json doc;
};

// Executes one job and produces the machine-readable document. Never throws:
// failures are encoded in the document and the exit code.
RunResult run(const JobSpec& job);

// Renders the machine document as the human-readable report. The text output
// of the CLI is exactly render_text(run(job).doc).
std::string render_text(const json& doc);

std::string format_output(const JobSpec& job, const json& doc);

// One relator per line; blank lines and '#' comments skipped. Lines are
// processed by a small worker pool, output order follows line order. Returns
// kExitOk when every line succeeded, kExitBatchFailure otherwise.
int run_batch(std::istream& lines, const JobSpec& base, std::ostream& out);

}  // namespace relhfk
