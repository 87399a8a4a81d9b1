#include "annulab/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

int main(int argc, char** argv) {
  using namespace annulab::cli;
  CLI::App app{"annulab: exact computations on p-adic annuli, coverings and torsors"};
  app.require_subcommand(1);

  std::string input;
  Options opt;
  std::int64_t n_max = 0;
  int max_iter = 0;
  std::uint64_t seed = 0;

  for (const auto& name : subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", input, "problem document (default: standard input)");
    sub->add_flag("--tsv", opt.tsv, "tab-separated output (fiber-tree)");
    sub->add_flag("--strict", opt.strict, "exit 4 on an Unknown verdict");
    sub->add_option("--n-max", n_max, "truncation of threshold profiles")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", max_iter, "residue refinement iterations")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "seed for randomized test vectors");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kValidation;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--n-max")) opt.n_max = n_max;
  if (sub->count("--max-iter")) opt.max_iter = max_iter;
  if (sub->count("--seed")) opt.seed = seed;

  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "invalid input: cannot read " << input << '\n';
      return kValidation;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return run_text(sub->get_name(), text, opt, std::cout, std::cerr);
}
