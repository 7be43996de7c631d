#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paratrap/config.hpp"
#include "paratrap/scenario.hpp"
#include "paratrap/units.hpp"

namespace {

using namespace paratrap;

void print_summary(const scenario::RunResult& result) {
  std::cout << "# " << result.spec.name << "\n";
  for (const auto& [key, q] : result.summary) {
    std::cout << key << " = " << units::format_number(q.value);
    if (q.unit != "1") std::cout << " " << q.unit;
    std::cout << "\n";
  }
}

scenario::ScenarioSpec resolve_spec(std::string name,
                                    const std::string& config_path) {
  config::Document doc;
  if (!config_path.empty()) doc = config::parse_file(config_path);
  if (name.empty()) {
    auto it = doc.strings.find("scenario");
    if (it == doc.strings.end())
      throw scenario::ScenarioError(
          "no scenario given on the command line or in the config");
    name = it->second;
  }
  scenario::ScenarioSpec spec = scenario::builtin_scenario(name);
  if (!config_path.empty()) scenario::apply_overrides(spec, doc);
  return spec;
}

void run_named(const std::vector<std::string>& names, const std::string& out) {
  for (const auto& name : names) {
    scenario::RunResult result =
        scenario::run_scenario(scenario::builtin_scenario(name));
    if (!out.empty()) scenario::write_outputs(result, out + "/" + name);
    print_summary(result);
  }
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!item.empty()) values.push_back(units::parse_quantity(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.empty())
    throw scenario::ScenarioError("sweep needs a non-empty value list");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paratrap: parametric electron-circuit coupling toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir, scenario_name, sweep_param, sweep_values;
  bool seedless = false;  // accepted for interface parity; core has no RNG
  app.add_option("--config", config_path, "config file with overrides");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--seedless", seedless,
               "deterministic mode (always on; no RNG in the core)");

  auto* simulate = app.add_subcommand("simulate", "run a named scenario");
  simulate->add_option("scenario", scenario_name, "scenario name");

  auto* sweep = app.add_subcommand("sweep", "sweep one parameter");
  sweep->add_option("scenario", scenario_name, "scenario name");
  sweep->add_option("--param", sweep_param, "parameter key")->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")
      ->required();

  auto* design = app.add_subcommand("design", "rate and circuit calculators");
  auto* noise_cmd = app.add_subcommand("noise", "surface-noise calculators");
  auto* trap_cmd = app.add_subcommand("trap", "trap dynamics checks");
  auto* list = app.add_subcommand("scenarios", "list built-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& name : scenario::scenario_names())
        std::cout << name << "\n";
      return 0;
    }
    if (simulate->parsed()) {
      scenario::ScenarioSpec spec = resolve_spec(scenario_name, config_path);
      scenario::RunResult result = scenario::run_scenario(spec);
      if (!out_dir.empty()) scenario::write_outputs(result, out_dir);
      print_summary(result);
      return 0;
    }
    if (sweep->parsed()) {
      scenario::ScenarioSpec spec = resolve_spec(scenario_name, config_path);
      scenario::RunResult result =
          scenario::sweep(spec, sweep_param, parse_values(sweep_values));
      if (!out_dir.empty()) scenario::write_outputs(result, out_dir);
      print_summary(result);
      return 0;
    }
    if (design->parsed()) {
      run_named({"parametric-rate", "impedance", "appendixD-coupling",
                 "appendixE-reduction", "appendixC-pickup"},
                out_dir);
      return 0;
    }
    if (noise_cmd->parsed()) {
      run_named({"heating-rates", "noise-tip-factor", "noise-ring-factor"},
                out_dir);
      return 0;
    }
    if (trap_cmd->parsed()) {
      run_named({"trap-stability", "sidebands"}, out_dir);
      return 0;
    }
  } catch (const scenario::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const config::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const units::UnitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
