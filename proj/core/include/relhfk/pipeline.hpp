#pragma once

#include <string>
#include <vector>

#include "relhfk/grading.hpp"
#include "relhfk/laurent.hpp"

namespace relhfk {

struct AnalysisOptions {
  int p = 1;            // expected signed X-count (= Spin^c class count)
  int wrap_bound = 0;   // 0 = automatic: x_count + 1, escalating up to 4 * x_count
  bool collect = false; // record violations instead of throwing
};

struct BigonRecord {
  PrimitiveBigon bigon;
  BasepointPair P;
  std::string word;
};

// One connected component of the primitive-bigon graph. Ids are assigned by
// the smallest member label.
struct SpincClass {
  int id = 0;
  std::vector<int> members;  // 0-based X-letter labels, ascending
  int survivor = -1;         // 0-based label of the reduction survivor, -1 if unresolved
};

struct Analysis {
  CyclicRelator relator;           // the analyzed (cyclically reduced) word
  bool input_was_reduced = false;
  int p = 1;
  ValidationReport validation;

  std::vector<BigonRecord> bigons;
  GradingGraph graph;
  GradingTable table;              // relative, normalized in place when possible
  std::vector<SpincClass> classes;
  ReductionResult reduction;

  bool absolute_ok = false;        // shift found per class and one survivor per class
  std::vector<int> alexander_shift;  // per class (only meaningful entries when normalized)
  int wrap_bound_used = 0;

  std::vector<std::string> warnings;
  ViolationLog violations;         // populated in collect mode

  std::vector<Laurent2> class_poincare;  // per class, from the final table
  Laurent2 poincare;                     // sum over classes
  bool euler_ok = false;
  Laurent euler;                         // graded Euler characteristic (p = 1 only)
};

// Runs the whole pipeline: cyclic reduction, validation, primitive-bigon
// enumeration with basepoint counts, grading solve, Spin^c partition,
// Alexander normalization, relator reduction and Maslov pinning. In strict
// mode the first failure throws; in collect mode failures are logged and the
// later stages run on whatever data is available.
Analysis analyze(const CyclicRelator& input, const AnalysisOptions& options = {});

}  // namespace relhfk
