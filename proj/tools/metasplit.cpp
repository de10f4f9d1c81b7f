// metasplit: splittings, cocycles and coset tables for Gamma_1(4) in SL(3, Z).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "metaplectic/cli.hpp"

int main(int argc, char** argv) {
  using namespace metaplectic;

  CLI::App app{"Splitting of Gamma_1(4) into the metaplectic double cover of SL(3, R)"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or text");
  };
  auto add_matrix = [&](CLI::App* sub, const char* help, int count) {
    sub->add_option("matrix", cfg.inputs, help)->required()->expected(count);
    add_common(sub);
  };

  add_matrix(app.add_subcommand("plucker", "Pluecker coordinates and Bruhat cell"),
             "matrix literal or file", 1);
  add_matrix(app.add_subcommand("factor", "block parameters of a Gamma_1(4) element"),
             "matrix literal or file", 1);
  add_matrix(app.add_subcommand("cocycle", "sigma(g1, g2) for rational det-1 matrices"),
             "two matrix literals or files", 2);
  add_matrix(app.add_subcommand("split", "s(gamma)"), "matrix literal or file", 1);
  add_matrix(app.add_subcommand("lift", "(gamma, s(gamma))"), "matrix literal or file", 1);
  add_matrix(app.add_subcommand("coset-rep", "canonical double coset representative"),
             "matrix literal or file", 1);

  auto* en = app.add_subcommand("enumerate", "the set S(A1, A2) with s on each element");
  en->add_option("--a1", cfg.a1, "A1")->required();
  en->add_option("--a2", cfg.a2, "A2")->required();
  add_common(en);

  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("suite", cfg.inputs, "suite names, or 'all'");
  ver->add_option("--seed", cfg.seed, "master seed");
  ver->add_option("--trials", cfg.trials, "random trials per suite")
      ->check(CLI::PositiveNumber);
  ver->add_option("--bound", cfg.bound, "enumeration bound")->check(CLI::PositiveNumber);
  ver->add_option("--workers", cfg.workers, "worker threads (0: all cores)");
  ver->add_option("--max-word", cfg.max_word, "longest generator word")
      ->check(CLI::PositiveNumber);
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!format.empty()) {
    cfg.format = parse_format(format);
    if (!cfg.format) {
      std::cerr << "error: unknown format '" << format << "'\n";
      return kUsage;
    }
  }
  return run(cfg, std::cout, std::cerr);
}
