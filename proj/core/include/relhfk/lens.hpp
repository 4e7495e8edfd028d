#pragma once

#include "relhfk/invariant.hpp"

namespace relhfk {

// Generators grouped by Spin^c structure: the connected components of the
// primitive-bigon graph, ids by smallest member label.
struct SpincPartition {
  std::vector<SpincClass> classes;
};

// Partition alone (survivors unresolved when reduction fails). Throws when
// the component count differs from p after maximal wrap escalation.
SpincPartition spinc_partition(const CyclicRelator& relator, int p);

// Per-class bigraded ranks for a (1,1) knot in a lens space L(p,q): gradings
// solved per class, Alexander shift and Maslov pin applied per class. For
// p = 1 the single entry coincides with compute_hfk.
std::vector<BigradedRank> compute_hfk_lens(const CyclicRelator& relator, int p);

}  // namespace relhfk
