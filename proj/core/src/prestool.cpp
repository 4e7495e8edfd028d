#include "relhfk/prestool.hpp"

#include <sstream>

namespace relhfk {

const char* to_string(Tier tier) {
  switch (tier) {
    case Tier::NotQuasiGeometric: return "not-quasi-geometric";
    case Tier::QuasiGeometric: return "quasi-geometric";
    case Tier::PseudoGeometric: return "pseudo-geometric";
  }
  return "unknown";
}

Classification classify(const CyclicRelator& input) {
  Classification result;
  CyclicRelator relator = cyclically_reduce(input);
  const int n = relator.x_count();

  if (relator.signed_x_count() != 1) {
    result.failures.push_back({"qg1-signed-count",
                               "signed X-count is " + std::to_string(relator.signed_x_count()) +
                                   ", must be +1"});
  }
  for (int i = 0; i < n; ++i) {
    if (relator.x_sign(i) == relator.x_sign(i + 1)) continue;
    int run = relator.y_run(i);
    if (run != 1 && run != -1) {
      std::ostringstream os;
      os << "opposite-sign X-letters x" << i + 1 << ", x" << (i + 1) % n + 1
         << " joined by Y-run of exponent " << run;
      result.failures.push_back({"qg2-adjacent-run", os.str()});
    }
  }
  if (!result.failures.empty()) {
    result.tier = Tier::NotQuasiGeometric;
    return result;
  }

  AnalysisOptions options;
  options.p = 1;
  options.collect = true;
  Analysis a = analyze(relator, options);

  bool quasi = true;
  for (const Violation& v : a.violations) {
    if (v.rule == "validation" && v.witness.find("fewer than 2 X-letters") != std::string::npos)
      continue;  // unknotted inputs still classify
    result.failures.push_back(v);
    if (v.rule.rfind("qg", 0) == 0 || v.rule == "orientation-tally") quasi = false;
  }
  if (!quasi) {
    result.tier = Tier::NotQuasiGeometric;
  } else if (a.absolute_ok && result.failures.empty()) {
    result.tier = Tier::PseudoGeometric;
  } else {
    result.tier = Tier::QuasiGeometric;
  }
  return result;
}

CyclicRelator transform(const CyclicRelator& relator, const TransformOp& op) {
  std::vector<Letter> out;
  auto push_y = [&out](int exponent) {
    for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
      out.push_back(Letter{Axis::Y, exponent < 0 ? -1 : +1});
  };
  for (const Letter& l : relator.letters()) {
    if (l.axis == Axis::Y) {
      out.push_back(op.kind == TransformKind::Tau ? l.inverse() : l);
      continue;
    }
    switch (op.kind) {
      case TransformKind::Tau:
        out.push_back(l);
        break;
      case TransformKind::L:
        // X -> Y^k X, so X~ -> X~ Y^-k
        if (l.sign > 0) {
          push_y(op.k);
          out.push_back(l);
        } else {
          out.push_back(l);
          push_y(-op.k);
        }
        break;
      case TransformKind::R:
        // X -> X Y^k, so X~ -> Y^-k X~
        if (l.sign > 0) {
          out.push_back(l);
          push_y(op.k);
        } else {
          push_y(-op.k);
          out.push_back(l);
        }
        break;
    }
  }
  return cyclically_reduce(CyclicRelator(std::move(out)));
}

bool CovarianceReport::all_pass() const {
  if (!base_ok) return false;
  for (const Entry& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

CovarianceReport verify_transformation_covariance(const CyclicRelator& relator) {
  CovarianceReport report;
  Analysis base;
  try {
    base = analyze(relator, AnalysisOptions{});
  } catch (const analysis_error& e) {
    report.entries.push_back({"base", false, std::string("pipeline failed: ") + e.what()});
    return report;
  }
  report.base_ok = true;
  report.base = base.poincare;

  auto check = [&](const std::string& name, const TransformOp& op, bool mirror) {
    CovarianceReport::Entry entry;
    entry.op = name;
    try {
      CyclicRelator image = transform(relator, op);
      Analysis a = analyze(image, AnalysisOptions{});
      const Laurent2 expected = mirror ? base.poincare.mirrored() : base.poincare;
      entry.pass = (a.poincare == expected);
      entry.detail = entry.pass ? "P matches" : "P(" + name + " R) = " + a.poincare.str() +
                                                   ", expected " + expected.str();
    } catch (const analysis_error& e) {
      entry.pass = false;
      entry.detail = std::string("pipeline failed on the transformed word: ") + e.what();
    }
    report.entries.push_back(entry);
  };
  check("l1", {TransformKind::L, 1}, false);
  check("l-1", {TransformKind::L, -1}, false);
  check("r1", {TransformKind::R, 1}, false);
  check("r-1", {TransformKind::R, -1}, false);
  check("tau", {TransformKind::Tau, 0}, true);
  return report;
}

}  // namespace relhfk
