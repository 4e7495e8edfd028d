#include "relhfk/driver.hpp"

#include <atomic>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "relhfk/invariant.hpp"
#include "relhfk/lens.hpp"

namespace relhfk {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::Hfk: return "hfk";
    case Mode::Classify: return "classify";
    case Mode::Alexander: return "alexander";
    case Mode::Transform: return "transform";
    case Mode::Lens: return "lens";
    case Mode::Verify: return "verify";
  }
  return "unknown";
}

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse: return kExitParse;
    case errc::validation: return kExitValidation;
    case errc::not_quasi_geometric: return kExitNotQuasiGeometric;
    case errc::not_pseudo_geometric: return kExitNotPseudoGeometric;
    case errc::inconsistent: return kExitInconsistent;
  }
  return kExitInconsistent;
}

namespace {

json poly_json(const Laurent& poly) {
  json terms = json::array();
  for (auto [e, c] : poly.terms()) terms.push_back({e, c});
  return json{{"text", poly.str()}, {"terms", terms}};
}

json poly2_json(const Laurent2& poly) {
  json terms = json::array();
  for (auto& [k, c] : poly.terms()) terms.push_back({k.first, k.second, c});
  return json{{"text", poly.str()}, {"terms", terms}};
}

json violations_json(const std::vector<Violation>& list) {
  json out = json::array();
  for (const Violation& v : list) out.push_back({{"rule", v.rule}, {"witness", v.witness}});
  return out;
}

json analysis_json(const Analysis& a) {
  json doc;
  doc["relator"] = serialize(a.relator);
  doc["p"] = a.p;
  doc["x_letters"] = a.relator.x_count();
  doc["wrap_bound"] = a.wrap_bound_used;

  // the table can be absent when a collect-mode run stops early
  const bool solved = a.table.F.size() == static_cast<size_t>(a.relator.x_count());

  json generators = json::array();
  for (int i = 0; solved && i < a.relator.x_count(); ++i) {
    generators.push_back({{"label", i + 1},
                          {"sign", a.relator.x_sign(i)},
                          {"F", a.table.F[i]},
                          {"M", a.table.M[i]},
                          {"w", a.table.w[i]},
                          {"class", a.table.component[i]}});
  }
  doc["generators"] = generators;

  json bigons = json::array();
  for (const BigonRecord& r : a.bigons) {
    bigons.push_back({{"from", r.bigon.span.start % a.relator.x_count() + 1},
                      {"to", r.bigon.span.end_label(a.relator.x_count()) + 1},
                      {"wrap", r.bigon.span.wrap_count(a.relator.x_count())},
                      {"word", r.word},
                      {"direction", to_string(r.bigon.direction)},
                      {"orientation", to_string(r.bigon.orientation)},
                      {"nz", r.P.nz},
                      {"nw", r.P.nw}});
  }
  doc["bigons"] = bigons;

  json classes = json::array();
  for (const SpincClass& cls : a.classes) {
    json members = json::array();
    for (int m : cls.members) members.push_back(m + 1);
    classes.push_back({{"id", cls.id},
                       {"members", members},
                       {"survivor", cls.survivor >= 0 ? json(cls.survivor + 1) : json()},
                       {"poincare", a.class_poincare.empty()
                                        ? json()
                                        : json(a.class_poincare[cls.id].str())}});
  }
  doc["classes"] = classes;

  json deletions = json::array();
  for (auto [s, e] : a.reduction.deletions) deletions.push_back({s + 1, e + 1});
  doc["reduction"] = {{"deletions", deletions}, {"trace", a.reduction.trace}};

  if (solved) doc["poincare"] = poly2_json(a.poincare);
  if (a.euler_ok) doc["euler_characteristic"] = poly_json(a.euler);
  doc["absolute_gradings"] = a.absolute_ok;
  return doc;
}

json error_json(const analysis_error& e) {
  return json{{"code", errc_name(e.code())}, {"stage", e.stage()}, {"message", e.what()}};
}

void add_warnings(json& doc, const std::vector<std::string>& warnings) {
  doc["warnings"] = warnings;
}

json verification_json(const CyclicRelator& relator) {
  json v;
  EulerAlexanderReport ea = verify_euler_matches_alexander(relator);
  v["euler_matches_alexander"] = ea.computed ? json(ea.match) : json();
  if (ea.computed) {
    v["euler_characteristic"] = ea.euler.str();
    v["alexander"] = ea.alexander.str();
    v["alexander_at_1"] = ea.alexander_at_one;
    v["euler_at_1"] = ea.euler_at_one;
    v["absolute_gradings"] = ea.absolute;
  }
  v["detail"] = ea.detail;

  CovarianceReport cov = verify_transformation_covariance(relator);
  json entries = json::array();
  for (const auto& e : cov.entries)
    entries.push_back({{"op", e.op}, {"pass", e.pass}, {"detail", e.detail}});
  v["transformations"] = {{"base_ok", cov.base_ok}, {"checks", entries}};
  return v;
}

RunResult run_impl(const JobSpec& job) {
  RunResult result;
  json& doc = result.doc;
  doc["schema_version"] = 1;
  doc["mode"] = to_string(job.mode);
  doc["input"] = job.relator_text;

  CyclicRelator input;
  try {
    input = parse_relator(job.relator_text);
  } catch (const analysis_error& e) {
    doc["status"] = "error";
    doc["error"] = error_json(e);
    result.exit_code = exit_code_for(e.code());
    return result;
  }

  try {
    switch (job.mode) {
      case Mode::Hfk:
      case Mode::Verify:
      case Mode::Lens: {
        AnalysisOptions options;
        options.p = job.mode == Mode::Lens ? job.p : 1;
        options.wrap_bound = job.wrap_bound;
        Analysis a = analyze(input, options);
        doc["status"] = "ok";
        doc["classification"] = options.p == 1 ? to_string(Tier::PseudoGeometric) : json();
        doc.update(analysis_json(a));
        if (options.p == 1) {
          Laurent alex = alexander_via_abelianization(a.relator);
          doc["alexander"] = poly_json(alex);
          if (auto sym = alex.symmetrized()) doc["alexander_symmetrized"] = sym->str();
        }
        std::vector<std::string> warnings = a.warnings;
        if (options.p == 1)
          warnings.push_back(
              "pseudo-geometric certifies only that every step was executable; the result is "
              "knot Floer homology when the presentation comes from a (1,1) diagram");
        if (job.mode == Mode::Verify || job.verify) doc["verification"] = verification_json(input);
        add_warnings(doc, warnings);
        break;
      }
      case Mode::Classify: {
        Classification c = classify(input);
        AnalysisOptions options;
        options.p = 1;
        options.collect = true;
        options.wrap_bound = job.wrap_bound;
        Analysis a = analyze(input, options);
        doc["status"] = "ok";
        doc["classification"] = to_string(c.tier);
        doc["classification_failures"] = violations_json(c.failures);
        doc["rank"] = a.relator.x_count();
        doc.update(analysis_json(a));
        if (a.euler_ok) {
          EulerAlexanderReport ea = verify_euler_matches_alexander(input);
          if (ea.computed) {
            doc["alexander"] = poly_json(ea.alexander);
            doc["verification"] = {{"euler_matches_alexander", ea.match}, {"detail", ea.detail}};
          }
        }
        add_warnings(doc, a.warnings);
        break;
      }
      case Mode::Alexander: {
        Laurent alex = alexander_via_abelianization(cyclically_reduce(input));
        doc["status"] = "ok";
        doc["alexander"] = poly_json(alex);
        if (auto sym = alex.symmetrized()) doc["alexander_symmetrized"] = sym->str();
        break;
      }
      case Mode::Transform: {
        if (!job.op)
          fail(errc::validation, "transform", "transform mode requires --transform l<k>|r<k>|tau");
        CyclicRelator image = transform(input, *job.op);
        doc["status"] = "ok";
        doc["transformed"] = serialize(image);
        break;
      }
    }
  } catch (const analysis_error& e) {
    doc["status"] = "error";
    doc["error"] = error_json(e);
    result.exit_code = exit_code_for(e.code());
  }
  return result;
}

}  // namespace

RunResult run(const JobSpec& job) {
  try {
    return run_impl(job);
  } catch (const std::exception& e) {  // never leak exceptions to the caller
    RunResult result;
    result.doc["schema_version"] = 1;
    result.doc["mode"] = to_string(job.mode);
    result.doc["input"] = job.relator_text;
    result.doc["status"] = "error";
    result.doc["error"] = {{"code", "inconsistent"}, {"stage", "internal"}, {"message", e.what()}};
    result.exit_code = kExitInconsistent;
    return result;
  }
}

namespace {

void render_generators(std::ostream& os, const json& doc) {
  if (!doc.contains("generators") || doc["generators"].empty()) return;
  os << "  generator    F    M    w  class\n";
  for (const json& g : doc["generators"]) {
    os << "  x" << std::left << std::setw(10) << g["label"].get<int>() << std::right
       << std::setw(5) << g["F"].get<int>() << std::setw(5) << g["M"].get<int>() << std::setw(5)
       << g["w"].get<int>() << std::setw(7) << g["class"].get<int>() << "\n";
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  os << "relator: " << doc["input"].get<std::string>() << "\n";
  if (doc["status"] == "error") {
    const json& e = doc["error"];
    os << "error (" << e["code"].get<std::string>() << ", stage " << e["stage"].get<std::string>()
       << "): " << e["message"].get<std::string>() << "\n";
    return os.str();
  }
  if (doc.contains("relator") && doc["relator"] != doc["input"])
    os << "analyzed word: " << doc["relator"].get<std::string>() << "\n";
  if (doc.contains("classification") && doc["classification"].is_string())
    os << "classification: " << doc["classification"].get<std::string>() << "\n";
  if (doc.contains("classification_failures"))
    for (const json& f : doc["classification_failures"])
      os << "  failure [" << f["rule"].get<std::string>() << "] " << f["witness"].get<std::string>()
         << "\n";
  if (doc.contains("transformed"))
    os << "transformed: " << doc["transformed"].get<std::string>() << "\n";
  render_generators(os, doc);
  if (doc.contains("bigons") && !doc["bigons"].empty()) {
    os << "  primitive bigons:\n";
    for (const json& b : doc["bigons"]) {
      os << "    x" << b["from"].get<int>() << " -> x" << b["to"].get<int>() << "  "
         << b["word"].get<std::string>() << "  " << b["orientation"].get<std::string>()
         << "  P = (" << b["nz"].get<int>() << ", " << b["nw"].get<int>() << ")\n";
    }
  }
  if (doc.contains("reduction") && !doc["reduction"]["trace"].empty()) {
    os << "  reduction:\n";
    for (const json& t : doc["reduction"]["trace"])
      os << "    " << t.get<std::string>() << "\n";
  }
  if (doc.contains("classes") && doc["classes"].size() > 1) {
    for (const json& c : doc["classes"]) {
      os << "  class " << c["id"].get<int>() << ": P = "
         << (c["poincare"].is_string() ? c["poincare"].get<std::string>() : "-") << "\n";
    }
  }
  if (doc.contains("poincare"))
    os << "Poincare polynomial: " << doc["poincare"]["text"].get<std::string>() << "\n";
  if (doc.contains("euler_characteristic"))
    os << "Euler characteristic: " << doc["euler_characteristic"]["text"].get<std::string>()
       << "\n";
  if (doc.contains("alexander"))
    os << "Alexander polynomial: " << doc["alexander"]["text"].get<std::string>() << "\n";
  if (doc.contains("alexander_symmetrized"))
    os << "  symmetrized: " << doc["alexander_symmetrized"].get<std::string>() << "\n";
  if (doc.contains("verification")) {
    const json& v = doc["verification"];
    if (v.contains("euler_matches_alexander"))
      os << "verify euler = alexander (up to units): "
         << (v["euler_matches_alexander"].is_boolean()
                 ? (v["euler_matches_alexander"].get<bool>() ? "pass" : "FAIL")
                 : "unavailable")
         << "\n";
    if (v.contains("transformations"))
      for (const json& c : v["transformations"]["checks"])
        os << "verify " << c["op"].get<std::string>() << " covariance: "
           << (c["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  }
  if (doc.contains("warnings"))
    for (const json& w : doc["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  return os.str();
}

std::string format_output(const JobSpec& job, const json& doc) {
  if (job.format == JobSpec::Format::Machine) return doc.dump();
  return render_text(doc);
}

int run_batch(std::istream& lines, const JobSpec& base, std::ostream& out) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(lines, line)) {
    const auto head = line.find_first_not_of(" \t\r");
    if (head == std::string::npos || line[head] == '#') continue;
    const auto tail = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(head, tail - head + 1));
  }

  std::vector<RunResult> results(words.size());
  std::atomic<size_t> next{0};
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) {
    pool.emplace_back([&] {
      for (size_t j = next.fetch_add(1); j < words.size(); j = next.fetch_add(1)) {
        JobSpec job = base;
        job.relator_text = words[j];
        results[j] = run(job);
      }
    });
  }
  for (std::thread& t : pool) t.join();

  int ok = 0, failed = 0;
  for (size_t j = 0; j < words.size(); ++j) {
    results[j].exit_code == kExitOk ? ++ok : ++failed;
    if (base.format == JobSpec::Format::Machine) {
      out << results[j].doc.dump() << "\n";
    } else {
      out << format_output(base, results[j].doc) << "\n";
    }
  }
  if (base.format == JobSpec::Format::Machine) {
    json summary{{"schema_version", 1}, {"summary", true},  {"lines", words.size()},
                 {"ok", ok},            {"failed", failed}};
    out << summary.dump() << "\n";
  } else {
    out << "processed " << words.size() << " relators: " << ok << " ok, " << failed
        << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitBatchFailure;
}

}  // namespace relhfk
