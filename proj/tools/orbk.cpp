#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbk/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"orbk: exact orbifold cohomology computations"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::string command;
  std::string file;
  orbk::CommandOptions opt;
  std::string element, c1a;
  std::size_t dim = 0, genus = 0, marks = 0, order = 0;
  std::int64_t character = 1;

  app.add_option("command", command, "Command to run")->required();
  app.add_option("file", file, "Input description (JSON)");
  app.add_option("--sector", opt.sectors, "Sector index (repeatable)");
  app.add_option("--class", opt.classes, "Conjugacy class index (repeatable)");
  auto* element_opt = app.add_option("--element", element, "Element as a word over generator indices, e.g. 0.1.0");
  auto* c1a_opt = app.add_option("--c1a", c1a, "c_1(TX).A as p/q");
  auto* dim_opt = app.add_option("--dim", dim, "Complex dimension n");
  auto* genus_opt = app.add_option("--genus", genus, "Genus g");
  auto* marks_opt = app.add_option("--marks", marks, "Number of marked points k");
  app.add_option("--iota", opt.iotas, "Degree shift of a marked point as p/q (repeatable)");
  app.add_option("--cap", opt.cap, "Largest group order to enumerate");
  app.add_option("--axis", opt.axes, "Coordinate axis spanning W (repeatable, lifts only)");
  auto* order_opt = app.add_option("--order", order, "Order m of the cyclic group (lifts only)");
  auto* char_opt = app.add_option("--character", character, "Action zeta_m^k on W (lifts only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    const nlohmann::json out{{"error", "InvalidArgument"}, {"message", e.what()}};
    std::cout << out.dump(2) << "\n";
    return orbk::kExitInputError;
  }

  if (*element_opt) opt.element = element;
  if (*c1a_opt) opt.c1a = c1a;
  if (*dim_opt) opt.dim = dim;
  if (*genus_opt) opt.genus = genus;
  if (*marks_opt) opt.marks = marks;
  if (*order_opt) opt.order = order;
  if (*char_opt) opt.character = character;

  const auto result =
      orbk::run_command_on_file(command, file.empty() ? std::nullopt : std::optional<std::string>(file), opt);
  std::cout << result.output;
  return result.exit_code;
}
