// toral: period sets of linear toral endomorphisms on the 2-torus.

#include "toral/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period sets Per(f_A) and MPer(f_A) of linear endomorphisms of the 2-torus"};
  app.require_subcommand(1);

  std::vector<std::string> matrix_tokens;

  toral::ClassifyOptions classify;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one matrix given as 'alpha beta gamma delta'");
  classify_cmd->add_option("matrix", matrix_tokens, "Four integers, row-major")->required();
  classify_cmd->add_flag("--json", classify.json, "Emit a JSON report");
  classify_cmd->add_option("--window", classify.window, "Truncation window [1..K]")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--nielsen", classify.nielsen, "Include N(f_A^n) for n = 1..limit")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--oracle", classify.oracle, "Include lattice-observed periods for n <= n_max")
      ->check(CLI::Range(2U, 65535U));

  toral::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check classifications against the lattice orbit oracle");
  verify_cmd->add_option("matrix", matrix_tokens, "Single matrix (four integers)");
  verify_cmd->add_option("--range", verify.range, "Scan all matrices with entries in [-r, r]")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--file", verify.file, "Batch file, one matrix per line");
  verify_cmd->add_option("--window", verify.window, "Completeness window [1..K]");
  verify_cmd->add_option("--oracle", verify.n_max, "Largest lattice denominator n_max")->check(CLI::Range(2U, 65535U));
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Scan every n <= n_max instead of stopping at a covered window");
  verify_cmd->add_flag("--json", verify.json, "Emit JSON verdicts");
  verify_cmd->add_flag("--quiet", verify.quiet, "Print failures and the summary only");

  toral::TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Regenerate the circle (1) or torus (2) period-set table");
  table_cmd->add_option("which", table.which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  table_cmd->add_option("--file", table.file, "Corpus file overriding the built-in one (table 2)");

  toral::ConjOptions conj;
  auto* conj_cmd = app.add_subcommand("conj", "Compare two matrices up to local conjugacy");
  conj_cmd->add_option("a", conj.a, "First matrix, quoted: \"alpha beta gamma delta\"")->required();
  conj_cmd->add_option("b", conj.b, "Second matrix, quoted")->required();
  conj_cmd->add_option("-n,--mod", conj.modulus, "Search a conjugator modulo n")->check(CLI::Range(2U, 65535U));
  conj_cmd->add_flag("--json", conj.json, "Emit JSON");

  toral::CircleOptions circle;
  auto* circle_cmd = app.add_subcommand("circle", "Period sets of x -> d x on the circle");
  circle_cmd->add_option("degree", circle.degree, "Degree d")->required();
  circle_cmd->add_option("--oracle", circle.oracle, "Also list {1} ∪ {ord_n(d) : n <= N}")->check(CLI::Range(2UL, 100000000UL));
  circle_cmd->add_option("--window", circle.window, "Truncation window [1..K]")->check(CLI::PositiveNumber);
  circle_cmd->add_flag("--json", circle.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toral::kExitUsage;
  }

  try {
    if (*classify_cmd) {
      classify.matrix = join_tokens(matrix_tokens);
      return toral::cmd_classify(classify, std::cout, std::cerr);
    }
    if (*verify_cmd) {
      if (!matrix_tokens.empty()) verify.matrix = join_tokens(matrix_tokens);
      return toral::cmd_verify(verify, std::cout, std::cerr);
    }
    if (*table_cmd) return toral::cmd_table(table, std::cout, std::cerr);
    if (*conj_cmd) return toral::cmd_conj(conj, std::cout, std::cerr);
    if (*circle_cmd) return toral::cmd_circle(circle, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return toral::kExitFailed;
  }
  return toral::kExitUsage;
}
