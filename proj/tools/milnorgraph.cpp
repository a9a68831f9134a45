#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "milnor/io.hpp"
#include "milnor/pipeline.hpp"
#include "oracles/instance_checks.hpp"

namespace {

using milnor::ErrorCode;

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw milnor::PipelineError(ErrorCode::Malformed, "input", "cannot read " + path);
    os << in.rdbuf();
  }
  return os.str();
}

int exit_code(ErrorCode c) { return static_cast<int>(c); }

int report(const milnor::PipelineError& e) {
  std::cerr << "error [" << e.stage() << "]: " << e.what() << "\n";
  return exit_code(e.code());
}

int cmd_check(const std::string& path) {
  auto pi = milnor::parse_input(read_input(path));
  std::cout << "hypotheses: ok\n";
  auto nnd = milnor::check_nnd(pi.f);
  for (const auto& f : nnd.faces) {
    std::cout << "face dim " << f.dim << " {";
    for (std::size_t i = 0; i < f.points.size(); ++i) std::cout << (i ? " " : "") << milnor::to_string(f.points[i]);
    std::cout << "}: " << milnor::to_string(f.verdict) << "\n";
  }
  std::cout << "nondegenerate: " << (nnd.nondegenerate() ? "yes" : "no") << "\n";
  return exit_code(nnd.nondegenerate() ? ErrorCode::Ok : ErrorCode::Degenerate);
}

int run_oracle(const milnor::ProblemInput& pi, const milnor::Artifacts& a, std::ostream& out) {
  auto results = oracle::instance_checks(pi, a);
  for (const auto& r : results) out << oracle::status_name(r.status) << " " << r.name << ": " << r.detail << "\n";
  return exit_code(oracle::all_passed(results) ? ErrorCode::Ok : ErrorCode::OracleMismatch);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plumbing graphs of Milnor-fiber boundaries of Newton-nondegenerate toric surface germs"};
  app.require_subcommand(1);

  std::string check_path;
  auto* check = app.add_subcommand("check", "Check the hypotheses and Newton nondegeneracy");
  check->add_option("input", check_path, "Input document, or - for stdin")->required();

  std::string compute_path, stage_name, emit_name;
  std::optional<std::size_t> budget;
  bool check_nnd = false;
  auto* compute = app.add_subcommand("compute", "Run the pipeline and print one stage");
  compute->add_option("input", compute_path, "Input document, or - for stdin")->required();
  compute->add_option("--stage", stage_name, "fan, gcdt, gmult, gplomb or reduced")
      ->check(CLI::IsMember({"fan", "gcdt", "gmult", "gplomb", "reduced"}));
  compute->add_option("--emit", emit_name, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  compute->add_option("--budget", budget, "Subdivision budget");
  compute->add_flag("--check-nnd", check_nnd, "Fail on degenerate compact faces");

  std::string oracle_path;
  auto* orc = app.add_subcommand("oracle", "Run the pipeline and every brute-force cross-check");
  orc->add_option("input", oracle_path, "Input document, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(ErrorCode::Usage);
  }

  try {
    if (*check) return cmd_check(check_path);
    if (*compute) {
      auto pi = milnor::parse_input(read_input(compute_path));
      if (!stage_name.empty()) pi.options.stage = *milnor::parse_stage(stage_name);
      if (!emit_name.empty()) pi.options.emit = emit_name == "dot" ? milnor::Emit::Dot : milnor::Emit::Json;
      if (budget) pi.options.subdivision_budget = *budget;
      if (check_nnd) pi.options.check_nnd = true;
      auto a = milnor::run(pi);
      std::cout << milnor::render(a, pi.options.stage, pi.options.emit);
      if (pi.options.oracle) return run_oracle(pi, a, std::cerr);
      return 0;
    }
    if (*orc) {
      auto pi = milnor::parse_input(read_input(oracle_path));
      pi.options.oracle = true;
      auto a = milnor::run(pi);
      return run_oracle(pi, a, std::cout);
    }
  } catch (const milnor::PipelineError& e) {
    return report(e);
  } catch (const std::exception& e) {
    std::cerr << "error [internal]: " << e.what() << "\n";
    return exit_code(ErrorCode::InternalInvariant);
  }
  return 0;
}
