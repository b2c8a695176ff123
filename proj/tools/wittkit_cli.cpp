#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "wittkit/dispatch.hpp"
#include "wittkit/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Witt-vector, recursive-sequence and linear-system toolkit (NDJSON batch)"};
  wk::RequestDefaults defaults;
  std::string ring;
  std::string file;
  bool list = false;
  app.add_option("--order", defaults.order, "Default truncation order")->check(CLI::Range(1, 4096));
  app.add_option("--ring", ring, "Default base ring")->check(CLI::IsMember({"Z", "Q"}));
  app.add_option("--tol", defaults.tol, "Default tolerance for numeric layers")->check(CLI::PositiveNumber);
  app.add_option("--file", file, "Read requests from PATH instead of stdin");
  app.add_flag("--timings", defaults.timings, "Add wall-clock timings to meta");
  app.add_flag("--list-commands", list, "Print the command names and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& name : wk::command_names()) std::cout << name << '\n';
    return 0;
  }
  if (!ring.empty()) defaults.ring = wk::parse_ring(ring);

  std::ios::sync_with_stdio(false);
  if (file.empty()) return wk::batch(std::cin, std::cout, defaults) ? 0 : 1;
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << '\n';
    return 2;
  }
  return wk::batch(in, std::cout, defaults) ? 0 : 1;
}
