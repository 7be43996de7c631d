#include "paratrap/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "paratrap/units.hpp"

namespace paratrap::scenario {

// Implemented in scenario_library.cpp.
RunResult dispatch_scenario(const ScenarioSpec& spec);

double ScenarioSpec::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end())
    throw ScenarioError("scenario '" + name + "' has no parameter '" + key +
                        "'");
  return it->second.value;
}

void ScenarioSpec::set(const std::string& key, double value) {
  auto it = params.find(key);
  if (it == params.end())
    throw ScenarioError("scenario '" + name + "' has no parameter '" + key +
                        "'");
  it->second.value = value;
}

void RunResult::add_summary(const std::string& key, double value,
                            const std::string& unit) {
  summary.push_back({key, Quantity{value, unit}});
}

void apply_overrides(ScenarioSpec& spec, const config::Document& doc) {
  auto strip = [](const std::string& key) {
    if (key.rfind("params.", 0) == 0) return key.substr(7);
    return key;
  };
  for (const auto& [key, value] : doc.strings) {
    if (key == "scenario" || key == "integrator" || key == "tool_version")
      continue;
    if (key.rfind("outputs.", 0) == 0 || key.rfind("summary.", 0) == 0)
      continue;
    throw ScenarioError("config key '" + key + "' is not a number");
  }
  for (const auto& [key, value] : doc.numbers) {
    if (key == "wall_time" || key == "tool_version") continue;
    if (key.rfind("summary.", 0) == 0 || key.rfind("outputs.", 0) == 0)
      continue;
    spec.set(strip(key), value);
  }
  auto integ = doc.strings.find("integrator");
  if (integ != doc.strings.end()) spec.integrator = integ->second;
}

RunResult run_scenario(const ScenarioSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult result = dispatch_scenario(spec);
  result.spec = spec;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

RunResult sweep(const ScenarioSpec& base, const std::string& param_key,
                const std::vector<double>& values) {
  base.param(param_key);  // reject unresolvable paths up front
  RunResult out;
  out.spec = base;
  out.spec.name = base.name + "-sweep";
  Table table;
  table.file_name = "sweep.csv";
  const std::string unit = base.params.at(param_key).unit;
  table.columns.push_back(param_key + " [" + unit + "]");
  bool first = true;
  for (double v : values) {
    ScenarioSpec point = base;
    point.set(param_key, v);
    RunResult r = run_scenario(point);
    if (first) {
      for (const auto& [key, q] : r.summary)
        table.columns.push_back(key + " [" + q.unit + "]");
      first = false;
    }
    std::vector<double> row{v};
    for (const auto& [key, q] : r.summary) row.push_back(q.value);
    table.rows.push_back(std::move(row));
  }
  out.tables.push_back(std::move(table));
  out.add_summary("points", static_cast<double>(values.size()));
  return out;
}

std::string csv_text(const Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ",";
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << units::format_number(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string manifest_text(const RunResult& result) {
  std::ostringstream out;
  out << "# paratrap run manifest\n";
  out << "scenario = " << result.spec.name << "\n";
  out << "tool_version = " << tool_version << "\n";
  out << "integrator = " << result.spec.integrator << "\n";
  out << "wall_time = " << units::format_number(result.wall_seconds) << " s\n";
  out << "\n[params]\n";
  for (const auto& [key, q] : result.spec.params) {
    out << key << " = " << units::format_number(q.value);
    if (q.unit != "1") out << " " << q.unit;
    out << "\n";
  }
  out << "\n[summary]\n";
  for (const auto& [key, q] : result.summary) {
    out << key << " = " << units::format_number(q.value);
    if (q.unit != "1") out << " " << q.unit;
    out << "\n";
  }
  out << "\n[outputs]\n";
  for (const auto& [file, digest] : result.digests)
    out << file << " = " << digest << "\n";
  return out.str();
}

void write_outputs(RunResult& result, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  result.digests.clear();
  for (const auto& table : result.tables) {
    const std::string text = csv_text(table);
    std::ofstream file(fs::path(out_dir) / table.file_name, std::ios::binary);
    if (!file)
      throw ScenarioError("cannot write output file '" + table.file_name + "'");
    file << text;
    char digest[32];
    std::snprintf(digest, sizeof(digest), "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a64(text)));
    result.digests.push_back({table.file_name, digest});
  }
  std::ofstream manifest(fs::path(out_dir) / "manifest.txt", std::ios::binary);
  if (!manifest) throw ScenarioError("cannot write manifest");
  manifest << manifest_text(result);
}

}  // namespace paratrap::scenario
