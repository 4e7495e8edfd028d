#include "relhfk/lens.hpp"

namespace relhfk {

SpincPartition spinc_partition(const CyclicRelator& relator, int p) {
  if (p < 1) fail(errc::validation, "spinc_partition", "p must be at least 1");
  AnalysisOptions options;
  options.p = p;
  options.collect = true;  // a stalled reduction still leaves a usable partition
  Analysis a = analyze(relator, options);
  for (const Violation& v : a.violations) {
    if (v.rule == "validation") fail(errc::validation, v.rule, v.witness);
    if (v.rule.rfind("qg", 0) == 0 || v.rule == "orientation-tally")
      fail(errc::not_quasi_geometric, v.rule, v.witness);
    if (v.rule == "spinc-partition" || v.rule == "graph-inconsistent")
      fail(errc::inconsistent, v.rule, v.witness);
  }
  return SpincPartition{a.classes};
}

std::vector<BigradedRank> compute_hfk_lens(const CyclicRelator& relator, int p) {
  if (p < 1) fail(errc::validation, "compute_hfk_lens", "p must be at least 1");
  AnalysisOptions options;
  options.p = p;
  Analysis a = analyze(relator, options);
  std::vector<BigradedRank> out(a.classes.size());
  for (size_t c = 0; c < a.classes.size(); ++c) {
    for (auto& [k, v] : a.class_poincare[c].terms()) out[c].ranks[k] = v;
  }
  return out;
}

}  // namespace relhfk
