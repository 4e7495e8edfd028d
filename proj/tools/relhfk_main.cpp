// Command-line front end: computes the bigraded knot invariant of a (1,1)
// presentation directly from its relator word.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "relhfk/driver.hpp"

namespace {

bool parse_transform(const std::string& text, relhfk::TransformOp& op) {
  if (text == "tau") {
    op = {relhfk::TransformKind::Tau, 0};
    return true;
  }
  if (text.size() < 2 || (text[0] != 'l' && text[0] != 'r')) return false;
  try {
    op.kind = text[0] == 'l' ? relhfk::TransformKind::L : relhfk::TransformKind::R;
    size_t used = 0;
    op.k = std::stoi(text.substr(1), &used);
    return used == text.size() - 1;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot Floer homology of (1,1) knots from a two-generator one-relator presentation"};
  app.require_subcommand(1);

  std::string relator, transform_text, format = "text", batch_file;
  int lens_p = 1, wrap_bound = 0;
  bool verify_flag = false;

  auto add_common = [&](CLI::App* cmd, bool needs_relator) {
    if (needs_relator)
      cmd->add_option("relator", relator, "relator word (X, x, Y, y, optional ^n)")->required();
    cmd->add_option("--format", format, "output format: text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--wrap-bound", wrap_bound, "override the primitive-bigon wrap bound");
    cmd->add_flag("--verify", verify_flag, "append Euler/Alexander and covariance checks");
    return cmd;
  };

  auto* hfk = add_common(app.add_subcommand("hfk", "bigraded homology of a knot in S^3"), true);
  auto* classify =
      add_common(app.add_subcommand("classify", "quasi/pseudo-geometric classification"), true);
  auto* alexander =
      add_common(app.add_subcommand("alexander", "Alexander polynomial via abelianization"), true);
  auto* transform = add_common(app.add_subcommand("transform", "apply l_k, r_k or tau"), true);
  transform->add_option("--transform", transform_text, "l<k>|r<k>|tau")->required();
  auto* lens = add_common(app.add_subcommand("lens", "per-Spin^c homology in a lens space"), true);
  lens->add_option("--lens", lens_p, "signed X-count p of the presentation")->required();
  auto* verify =
      add_common(app.add_subcommand("verify", "hfk plus all verification checks"), true);
  auto* batch = add_common(app.add_subcommand("batch", "process a corpus file line by line"), false);
  batch->add_option("file", batch_file, "one relator per line, '#' comments")->required();
  batch->add_option("--lens", lens_p, "run every line with this p");

  CLI11_PARSE(app, argc, argv);

  relhfk::JobSpec job;
  job.relator_text = relator;
  job.wrap_bound = wrap_bound;
  job.verify = verify_flag;
  job.p = lens_p;
  job.format = format == "machine" ? relhfk::JobSpec::Format::Machine
                                   : relhfk::JobSpec::Format::Text;
  if (hfk->parsed()) job.mode = relhfk::Mode::Hfk;
  if (classify->parsed()) job.mode = relhfk::Mode::Classify;
  if (alexander->parsed()) job.mode = relhfk::Mode::Alexander;
  if (transform->parsed()) {
    job.mode = relhfk::Mode::Transform;
    relhfk::TransformOp op;
    if (!parse_transform(transform_text, op)) {
      std::cerr << "invalid --transform value '" << transform_text << "'\n";
      return relhfk::kExitBatchFailure;
    }
    job.op = op;
  }
  if (lens->parsed()) job.mode = relhfk::Mode::Lens;
  if (verify->parsed()) job.mode = relhfk::Mode::Verify;

  if (batch->parsed()) {
    job.mode = lens_p > 1 ? relhfk::Mode::Lens : relhfk::Mode::Verify;
    std::ifstream in(batch_file);
    if (!in) {
      std::cerr << "cannot read corpus file " << batch_file << "\n";
      return relhfk::kExitBatchFailure;
    }
    return relhfk::run_batch(in, job, std::cout);
  }

  relhfk::RunResult result = relhfk::run(job);
  std::cout << relhfk::format_output(job, result.doc);
  if (job.format == relhfk::JobSpec::Format::Machine) std::cout << "\n";
  return result.exit_code;
}
