// tnncert: build change-of-basis matrices M_{e->a}, decide total
// non-negativity and emit / check certificates.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tnncert/cli.hpp"

namespace {

using namespace tnncert;
using namespace tnncert::cli;

struct InputOptions {
  std::string a;
  std::string e;
  std::string input_file;
  std::string family;
  std::size_t n = 0;
  std::string b;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("--a", opts.a, "sequence a, comma-separated rationals (e.g. 3,8,-1/2)");
  cmd->add_option("--e", opts.e, "sequence e, comma-separated rationals");
  cmd->add_option("-i,--input", opts.input_file,
                  "file with a and e: two lines, or JSON {\"a\": [...], \"e\": [...]}");
  cmd->add_option("--family", opts.family,
                  "named family: binomial, stirling2, stirling1, lah, ferrers_rook, "
                  "central_factorial");
  cmd->add_option("-n,--n", opts.n, "family size");
  cmd->add_option("--b", opts.b, "Ferrers board column heights (ferrers_rook)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilySpec family_spec(const InputOptions& opts) {
  FamilySpec spec{parse_family_kind(opts.family), opts.n, std::nullopt};
  if (!opts.b.empty()) {
    std::vector<long> b;
    for (const auto& r : parse_sequence(opts.b)) {
      if (!r.is_integer() || !r.get().get_num().fits_slong_p()) {
        throw InputError("column heights must be integers");
      }
      b.push_back(r.get().get_num().get_si());
    }
    spec.b = std::move(b);
  }
  return spec;
}

void fill_input(JobSpec& job, const InputOptions& opts) {
  const int sources = int(!opts.a.empty() || !opts.e.empty()) + int(!opts.input_file.empty()) +
                      int(!opts.family.empty());
  if (sources > 1) throw InputError("give exactly one of --a/--e, --input, --family");
  if (!opts.a.empty() || !opts.e.empty()) {
    if (opts.a.empty() || opts.e.empty()) throw InputError("--a and --e go together");
    job.pair = SequencePair(parse_sequence(opts.a), parse_sequence(opts.e));
  } else if (!opts.input_file.empty()) {
    job.pair = parse_pair_document(read_file(opts.input_file));
  } else if (!opts.family.empty()) {
    job.family = family_spec(opts);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total non-negativity certificates for change-of-basis matrices M_{e->a}"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"dot", OutputFormat::dot}};
  const std::map<std::string, VerifyLevel> levels{{"none", VerifyLevel::none},
                                                  {"oracle", VerifyLevel::oracle}};
  const std::map<std::string, RenderStage> stages{{"initial", RenderStage::initial},
                                                  {"final", RenderStage::final}};

  JobSpec job;
  InputOptions opts;
  std::string certificate_file;

  auto* build = app.add_subcommand("build", "print the matrix M_{e->a}");
  auto* check = app.add_subcommand("check", "run the restricted-growth scan (exit 2 if rejected)");
  auto* certify = app.add_subcommand("certify", "decide TNN and emit a certificate (exit 2 if NOT_TNN)");
  auto* verify = app.add_subcommand("verify", "re-check a JSON certificate (exit 3 if invalid)");
  auto* family = app.add_subcommand("family", "print the (a,e) pair of a named family");
  auto* render = app.add_subcommand("render", "draw the planar network as DOT or text");

  for (auto* cmd : {build, check, certify, render}) add_input_options(cmd, opts);
  for (auto* cmd : {build, check, certify, verify, family, render}) {
    cmd->add_option("-f,--format", job.format, "output format: text, json, dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  }
  certify->add_option("--verify", job.verify_level,
                      "none, or oracle to cross-check against independent routes")
      ->transform(CLI::CheckedTransformer(levels, CLI::ignore_case));
  render->add_option("--stage", job.stage, "initial array A(a,e) or final certificate network")
      ->transform(CLI::CheckedTransformer(stages, CLI::ignore_case));
  verify->add_option("certificate", certificate_file, "certificate file ('-' for stdin)")
      ->required();
  family->add_option("kind", opts.family, "family name")->required();
  family->add_option("-n,--n", opts.n, "size")->required();
  family->add_option("--b", opts.b, "Ferrers board column heights (ferrers_rook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) job.command = Command::build;
    if (check->parsed()) job.command = Command::check;
    if (certify->parsed()) job.command = Command::certify;
    if (render->parsed()) job.command = Command::render;
    if (family->parsed()) {
      job.command = Command::family;
      job.family = family_spec(opts);
    } else if (verify->parsed()) {
      job.command = Command::verify;
      if (certificate_file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        job.certificate_text = ss.str();
      } else {
        job.certificate_text = read_file(certificate_file);
      }
    } else {
      fill_input(job, opts);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  }

  return run(job, std::cout, std::cerr);
}
