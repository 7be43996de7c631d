#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "paratrap/config.hpp"

namespace paratrap::scenario {

// Validation problems (unknown scenario, bad parameter) -> CLI exit 2.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Numerical problems surfaced by the solvers -> CLI exit 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* tool_version = "0.1.0";

struct Quantity {
  double value = 0;
  std::string unit = "1";
};

// Fully-resolved experiment description: every physical input explicit and
// in SI units; no defaults applied at run time.
struct ScenarioSpec {
  std::string name;
  std::string integrator = "rk4-fixed";
  std::map<std::string, Quantity> params;

  double param(const std::string& key) const;
  void set(const std::string& key, double value);
};

struct Table {
  std::string file_name;
  std::vector<std::string> columns;  // "name [unit]"
  std::vector<std::vector<double>> rows;
};

struct RunResult {
  ScenarioSpec spec;
  std::vector<std::pair<std::string, Quantity>> summary;
  std::vector<Table> tables;
  double wall_seconds = 0;
  // (file name, digest) pairs, filled by write_outputs.
  std::vector<std::pair<std::string, std::string>> digests;

  void add_summary(const std::string& key, double value,
                   const std::string& unit = "1");
};

std::vector<std::string> scenario_names();
ScenarioSpec builtin_scenario(const std::string& name);

// Merges `scenario`, `integrator`, and numeric parameter overrides from a
// parsed config document; unknown parameter keys are rejected.
void apply_overrides(ScenarioSpec& spec, const config::Document& doc);

RunResult run_scenario(const ScenarioSpec& spec);

// Independent runs, one summary row per value, rows in input order.
RunResult sweep(const ScenarioSpec& base, const std::string& param_key,
                const std::vector<double>& values);

// Writes each table as CSV plus a `manifest.txt`, filling result.digests.
void write_outputs(RunResult& result, const std::string& out_dir);

std::string csv_text(const Table& table);
std::string manifest_text(const RunResult& result);
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace paratrap::scenario
