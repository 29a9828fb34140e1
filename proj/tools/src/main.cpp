#include <iostream>

#include <CLI11.hpp>

#include "dgap/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace dgap::cli;

  CLI::App app{"dgap: cell census and (n-2)-gap counting for digital n-objects"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "census and g_{n-2} by three methods");
  count_cmd->add_option("file", count.file, ".dvo object file")->required();
  count_cmd->add_flag("--json", count.json, "machine-readable report");
  count_cmd->add_flag("--hubs", count.hubs, "list hub cells (doubled coordinates)");
  count_cmd->add_flag("--histogram", count.histogram, "include the (n-2)-cell classification histogram");

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "histogram of (n-2)-cell configurations");
  classify_cmd->add_option("file", classify.file, ".dvo object file")->required();
  classify_cmd->add_flag("--json", classify.json, "machine-readable output");

  VerifyArgs verify;
  std::string verify_file;
  std::vector<std::string> random_args;
  auto* verify_cmd = app.add_subcommand("verify", "replay every counting identity");
  auto* verify_file_opt = verify_cmd->add_option("file", verify_file, ".dvo object file");
  auto* random_opt = verify_cmd->add_option("--random", random_args, "n extent density seed trials")
                         ->expected(5)
                         ->allow_extra_args(false);
  verify_cmd->add_flag("--corrupt-census", verify.corrupt_census, "test hook: perturb the census")
      ->group("");

  GenArgs gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "write a named or random shape as .dvo");
  gen_cmd->add_option("--shape", gen.shape, "single|box|diagonal_pair|l_block|facet_block|checkerboard|random")
      ->required();
  gen_cmd->add_option("--n", gen.n, "ambient dimension");
  gen_cmd->add_option("--extents", gen.extents, "comma-separated box extents")->delimiter(',');
  gen_cmd->add_option("--density", gen.density, "fraction p/q or decimal, random only");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  auto* gen_out_opt = gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*count_cmd) return cmd_count(count, std::cout, std::cerr);
  if (*classify_cmd) return cmd_classify(classify, std::cout, std::cerr);
  if (*verify_cmd) {
    if (*verify_file_opt) verify.file = verify_file;
    if (*random_opt) {
      try {
        verify.random = RandomTrials{std::stoi(random_args[0]), std::stoll(random_args[1]), random_args[2],
                                     std::stoull(random_args[3]), std::stoll(random_args[4])};
      } catch (const std::exception&) {
        std::cerr << "error: --random expects: n extent density seed trials\n";
        return kInputError;
      }
    }
    return cmd_verify(verify, std::cout, std::cerr);
  }
  if (*gen_cmd) {
    if (*gen_out_opt) gen.out_file = gen_out;
    return cmd_gen(gen, std::cout, std::cerr);
  }
  return kInputError;
}
