#include "sphereblock/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace sphereblock;

int main(int argc, char** argv) {
  CLI::App app{
      "sphereblock: exact block decomposition of equivariant irreducible "
      "objects on spherical homogeneous spaces"};
  app.require_subcommand(1);

  std::string pair_arg, dot_path;
  int indent = 2, max_n = 8;

  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--pair", pair_arg,
                    "builtin:<family>:<n> or a pair JSON document")
        ->required();
    cmd->add_option("--json-indent", indent, "JSON indent width (0 = compact)")
        ->check(CLI::Range(0, 10));
  };

  CLI::App* describe = app.add_subcommand(
      "describe", "Print lattice and Weyl invariants of a pair");
  add_pair(describe);

  CLI::App* classes = app.add_subcommand(
      "classes", "Monodromy class decomposition of the character group X*(C)");
  add_pair(classes);

  CLI::App* blocks = app.add_subcommand(
      "blocks", "Block decomposition of the irreducible objects");
  add_pair(blocks);
  blocks->add_option("--dot", dot_path,
                     "write the orbit graph as DOT, colored by block");

  CLI::App* verify =
      app.add_subcommand("verify", "Run the built-in release checks");
  verify->add_option("--max-n", max_n, "cap the n sweeps (default 8)")
      ->check(CLI::Range(2, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (describe->parsed())
      return cmd_describe(parse_pair_arg(pair_arg), std::cout, indent);
    if (classes->parsed())
      return cmd_classes(parse_pair_arg(pair_arg), std::cout, indent);
    if (blocks->parsed())
      return cmd_blocks(parse_pair_arg(pair_arg), std::cout, indent, dot_path);
    if (verify->parsed()) return cmd_verify(std::cout, max_n);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
