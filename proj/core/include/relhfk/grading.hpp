#pragma once

#include <string>
#include <vector>

#include "relhfk/basepoint.hpp"

namespace relhfk {

// One primitive bigon seen as a grading constraint between its endpoints:
//   F(from) - F(to) = dF,  M(from) - M(to) = dM,  w(from) - w(to) = dw
// with dF = nz - nw, dM = +-1 - 2 nw (+ for positive spans), dw = nw.
struct GradingEdge {
  int from = 0;
  int to = 0;
  int dF = 0;
  int dM = 0;
  int dw = 0;
  DiskSpan span;
};

struct GradingGraph {
  int nodes = 0;
  std::vector<GradingEdge> edges;
};

struct GradingTable {
  std::vector<int> F, M, w;
  std::vector<int> component;  // component id per X-letter, ids ordered by smallest member
  int component_count = 0;
};

GradingGraph build_grading_graph(const CyclicRelator& relator,
                                 const std::vector<PrimitiveBigon>& bigons,
                                 const std::vector<BasepointPair>& counts);

// Breadth-first potential assignment, smallest-label node of each component
// pinned at 0. Throws errc::inconsistent on a contradictory cycle.
GradingTable solve_relative(const GradingGraph& graph);

// The unique shift c making #{F = i} == #{F = -i} (mod 2) on one component.
// Applies the shift and returns it. Fails when no shift works or when every
// shift works (all multiplicities even).
int normalize_alexander(GradingTable& table, int component_id);

// The cyclic word left after the reduction: X-tokens keep their 0-based
// label, Y-tokens their sign; tokens stay in original position order.
struct ReducedRelator {
  struct Token {
    int position = 0;    // position in the original relator
    Letter letter;
    int x_label = -1;    // 0-based X-letter label, -1 for Y-tokens
  };
  std::vector<Token> tokens;
  std::string text() const;  // e.g. "y Y X25" (labels printed 1-based)
};

struct ReductionResult {
  ReducedRelator word;
  std::vector<int> survivors;                    // 0-based labels of surviving X-letters
  std::vector<std::pair<int, int>> deletions;    // (start,end) labels of each deleted span
  std::vector<std::string> trace;                // word after each deletion, final included
};

// Deletes, shortest span first, primitive disk words of the current cyclic
// word whose endpoints carry equal w-grading (taken from the original
// relator), until no such span remains. Deleting removes the whole
// contiguous subword; Y-letters outside deleted spans survive verbatim.
ReductionResult reduce_relator(const CyclicRelator& relator, const GradingTable& table,
                               int wrap_bound);

// Pins M = 0 at the given survivor of each component (survivors[c] is an
// X-letter label in component c).
void absolute_maslov(GradingTable& table, const std::vector<int>& survivors);

}  // namespace relhfk
