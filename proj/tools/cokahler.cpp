// cokahler: verify co-Kahler / cosymplectic statements on left-invariant
// models given as text files (see models/ for the format).
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cokahler/error.hpp"
#include "cokahler/model_file.hpp"
#include "cokahler/report.hpp"

using namespace cokahler;

namespace {

struct Invocation {
  std::vector<std::string> files;
  bool json = false;
  bool informational = false;
  bool all = false;
  std::optional<int> max_degree;
  std::optional<int> order;
  std::optional<int> rotation;
};

CLI::App* add_command(CLI::App& app, Invocation& inv, const std::string& name, const std::string& help) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("models", inv.files, "model files")->required()->check(CLI::ExistingFile);
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of co-Kahler and cosymplectic structures on Lie algebra models"};
  app.require_subcommand(1);
  app.fallthrough();
  Invocation inv;
  app.add_flag("--json", inv.json, "machine-readable output with stable key order");
  app.add_flag("--informational", inv.informational, "report hypothesis violations without failing");

  add_command(app, inv, "classify", "almost contact, cosymplectic, normal, co-Kahler, parallelism");
  add_command(app, inv, "betti", "Betti numbers of the full, invariant, transverse and basic complexes");
  add_command(app, inv, "lefschetz", "Lefschetz maps on the invariant cohomology");
  add_command(app, inv, "verbitsky", "operator identities and the kernel of d_eta");
  add_command(app, inv, "split", "splitting of invariant forms along eta");
  add_command(app, inv, "massey", "degree-one triple Massey products");
  auto* minimal = add_command(app, inv, "minimal", "Sullivan minimal model through a degree");
  minimal->add_option("--max-degree", inv.max_degree, "top generator degree (default: COKAHLER_MAX_DEGREE or 3)")
      ->check(CLI::PositiveNumber);
  auto* torus = add_command(app, inv, "mapping-torus", "model of the mapping torus of a finite-order automorphism");
  torus->add_option("--order", inv.order, "order of the model's automorphism")->check(CLI::PositiveNumber);
  torus->add_option("--rotation", inv.rotation, "use the integral rotation of order 1, 2, 3, 4 or 6")
      ->check(CLI::IsMember({1, 2, 3, 4, 6}));
  auto* report = add_command(app, inv, "report", "run every applicable check");
  report->add_flag("--all", inv.all, "all sections (required)")->required();
  report->add_option("--max-degree", inv.max_degree, "top generator degree for the minimal model")
      ->check(CLI::PositiveNumber);
  report->add_option("--rotation", inv.rotation, "integral rotation for the mapping-torus section")
      ->check(CLI::IsMember({1, 2, 3, 4, 6}));

  CLI11_PARSE(app, argc, argv);

  auto command = parse_command(app.get_subcommands().front()->get_name());
  try {
    RunOptions options;
    options.informational = inv.informational;
    options.max_degree = inv.max_degree ? *inv.max_degree : default_max_degree();
    options.order = inv.order;
    options.rotation = inv.rotation;

    std::vector<LieModel> models;
    for (const auto& f : inv.files) models.push_back(load_model(f));
    Json result = run(*command, models, options);
    std::cout << (inv.json ? render_json(result) : render_text(result));
    return passed(result) ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "cokahler: parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cokahler: " << e.what() << '\n';
    return 2;
  }
}
