#include "relhfk/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace relhfk {

namespace {

std::string survivor_set(const std::vector<int>& labels) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << "x" << labels[i] + 1;
  os << "}";
  return os.str();
}

}  // namespace

Analysis analyze(const CyclicRelator& input, const AnalysisOptions& options) {
  Analysis a;
  a.p = options.p;
  a.relator = cyclically_reduce(input);
  a.input_was_reduced = !(a.relator == input);
  if (a.input_was_reduced)
    a.warnings.push_back("input was not cyclically reduced; analyzing the reduced word " +
                         serialize(a.relator));

  a.validation = validate(a.relator, options.p);
  if (!a.validation.ok()) {
    if (!options.collect)
      fail(errc::validation, "validate", a.validation.violations.front());
    for (const std::string& v : a.validation.violations) a.violations.push_back({"validation", v});
    if (a.validation.signed_x_count != options.p || a.relator.x_count() == 0)
      return a;  // nothing downstream is meaningful with the wrong p
  }

  const int n = a.relator.x_count();
  int wrap = options.wrap_bound > 0 ? options.wrap_bound : n + 1;
  const int wrap_max = options.wrap_bound > 0 ? options.wrap_bound : 4 * n;

  // Enumerate bigons and solve gradings, escalating the wrap bound until the
  // bigon graph has the expected p components.
  for (;;) {
    a.bigons.clear();
    ViolationLog attempt_log;
    ViolationLog* log = options.collect ? &attempt_log : nullptr;
    std::vector<PrimitiveBigon> bigons = enumerate_primitive_bigons(a.relator, wrap, log);
    BasepointSession session(a.relator, log);
    std::vector<PrimitiveBigon> counted;
    std::vector<BasepointPair> counts;
    for (const PrimitiveBigon& b : bigons) {
      auto p = session.count(b.span);
      if (!p) continue;  // collect mode: violation already logged
      counted.push_back(b);
      counts.push_back(*p);
      a.bigons.push_back({b, *p, word_text(a.relator.span_word(b.span))});
    }
    a.graph = build_grading_graph(a.relator, counted, counts);
    if (options.collect) {
      try {
        a.table = solve_relative(a.graph);
      } catch (const analysis_error& e) {
        attempt_log.push_back({"graph-inconsistent", e.what()});
        a.violations.insert(a.violations.end(), attempt_log.begin(), attempt_log.end());
        return a;
      }
    } else {
      a.table = solve_relative(a.graph);
    }
    if (a.table.component_count == options.p) {
      a.violations.insert(a.violations.end(), attempt_log.begin(), attempt_log.end());
      break;
    }
    if (wrap >= wrap_max) {
      std::ostringstream os;
      os << "primitive-bigon graph has " << a.table.component_count << " components, expected "
         << options.p << " (wrap bound " << wrap << ")";
      if (!options.collect) fail(errc::inconsistent, "spinc-partition", os.str());
      attempt_log.push_back({"spinc-partition", os.str()});
      a.violations.insert(a.violations.end(), attempt_log.begin(), attempt_log.end());
      break;
    }
    wrap = std::min(wrap_max, wrap * 2);
    std::ostringstream os;
    os << "wrap bound escalated to " << wrap << " to reconnect the grading graph";
    a.warnings.push_back(os.str());
  }
  a.wrap_bound_used = wrap;

  // Spin^c classes = graph components; solve_relative assigns component ids
  // in ascending order of their smallest member.
  a.classes.assign(a.table.component_count, {});
  for (int c = 0; c < a.table.component_count; ++c) a.classes[c].id = c;
  for (int i = 0; i < n; ++i) a.classes[a.table.component[i]].members.push_back(i);

  // Absolute Alexander grading: the mod-2 symmetric shift, per class.
  bool norm_ok = true;
  a.alexander_shift.assign(a.classes.size(), 0);
  for (const SpincClass& cls : a.classes) {
    try {
      a.alexander_shift[cls.id] = normalize_alexander(a.table, cls.id);
    } catch (const analysis_error& e) {
      norm_ok = false;
      if (!options.collect) throw;
      a.violations.push_back({e.stage(), e.what()});
    }
  }

  // Relator reduction; every class must keep exactly one X-letter.
  a.reduction = reduce_relator(a.relator, a.table, wrap);
  bool survivors_ok = a.reduction.survivors.size() == a.classes.size();
  for (SpincClass& cls : a.classes) {
    std::vector<int> in_class;
    for (int s : a.reduction.survivors) {
      if (a.table.component[s] == cls.id) in_class.push_back(s);
    }
    if (in_class.size() == 1) {
      cls.survivor = in_class.front();
    } else {
      survivors_ok = false;
    }
  }
  if (!survivors_ok) {
    std::ostringstream os;
    os << "reduction stalled with surviving X-letters " << survivor_set(a.reduction.survivors);
    if (!options.collect) fail(errc::not_pseudo_geometric, "pg-reduction-stall", os.str());
    a.violations.push_back({"pg-reduction-stall", os.str()});
  }

  if (survivors_ok) {
    std::vector<int> survivors;
    for (const SpincClass& cls : a.classes) survivors.push_back(cls.survivor);
    absolute_maslov(a.table, survivors);
  }
  a.absolute_ok = norm_ok && survivors_ok;

  a.class_poincare.assign(a.classes.size(), Laurent2{});
  for (int i = 0; i < n; ++i)
    a.class_poincare[a.table.component[i]].add(a.table.F[i], a.table.M[i], 1);
  for (const Laurent2& cp : a.class_poincare) {
    for (auto& [k, c] : cp.terms()) a.poincare.add(k.first, k.second, c);
  }
  if (a.poincare.total() != n)
    fail(errc::inconsistent, "pipeline", "total rank differs from the X-letter count");

  if (options.p == 1 && a.table.component_count == 1) {
    a.euler_ok = true;
    a.euler = a.poincare.at_q(-1);
  }

  a.warnings.push_back(
      "gradings are determined up to the mirror involution (s,m) -> (-s,-m); the output may "
      "describe the mirror knot");
  return a;
}

}  // namespace relhfk
