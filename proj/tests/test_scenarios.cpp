#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <paratrap/scenario.hpp>
#include <sstream>

using namespace paratrap;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path scratch_dir(const std::string& leaf) {
  fs::path dir = fs::temp_directory_path() / "paratrap-tests" / leaf;
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("the catalog lists every built-in scenario") {
  const auto names = scenario::scenario_names();
  for (const char* expected :
       {"fig3-swap-n0", "fig3-swap-n1", "fig3-bell", "ee-swap-n0",
        "ee-swap-n1", "ee-bell", "cooling", "spin-motion-map",
        "rwa-validation", "trap-stability", "sidebands", "noise-tip-factor",
        "noise-ring-factor", "heating-rates", "appendixE-reduction",
        "appendixC-pickup", "appendixD-coupling", "impedance",
        "parametric-rate"}) {
    INFO("scenario ", expected);
    CHECK(std::count(names.begin(), names.end(), expected) == 1);
  }
}

TEST_CASE("unknown scenario names are rejected") {
  CHECK_THROWS_AS(scenario::builtin_scenario("does-not-exist"),
                  scenario::ScenarioError);
  scenario::ScenarioSpec spec = scenario::builtin_scenario("impedance");
  CHECK_THROWS_AS(spec.param("nonsense"), scenario::ScenarioError);
  CHECK_THROWS_AS(spec.set("nonsense", 1.0), scenario::ScenarioError);
}

TEST_CASE("summary keys come out in a fixed order") {
  scenario::RunResult result =
      scenario::run_scenario(scenario::builtin_scenario("heating-rates"));
  REQUIRE(result.summary.size() == 4);
  CHECK(result.summary[0].first == "rate_beta_shallow");
  CHECK(result.summary[1].first == "rate_beta_steep");
  CHECK(result.summary[2].first == "f_ref");
  CHECK(result.summary[3].first == "s_ref");
}

TEST_CASE("csv tables carry unit-annotated headers") {
  scenario::RunResult result =
      scenario::run_scenario(scenario::builtin_scenario("impedance"));
  REQUIRE(!result.tables.empty());
  const std::string text = scenario::csv_text(result.tables[0]);
  CHECK(text.rfind("mode_index [1],z_effective [ohm]\n", 0) == 0);
}

TEST_CASE("write_outputs emits csv, manifest, and digests") {
  const fs::path dir = scratch_dir("outputs");
  scenario::RunResult result =
      scenario::run_scenario(scenario::builtin_scenario("impedance"));
  scenario::write_outputs(result, dir.string());

  CHECK(fs::exists(dir / "impedance.csv"));
  CHECK(fs::exists(dir / "manifest.txt"));
  REQUIRE(result.digests.size() == 1);
  CHECK(result.digests[0].first == "impedance.csv");

  // Digest in the manifest matches the bytes on disk.
  char expected[32];
  std::snprintf(expected, sizeof(expected), "fnv1a:%016llx",
                static_cast<unsigned long long>(
                    scenario::fnv1a64(slurp(dir / "impedance.csv"))));
  CHECK(result.digests[0].second == expected);
  CHECK(slurp(dir / "manifest.txt").find(expected) != std::string::npos);
}

TEST_CASE("repeated runs are byte identical") {
  for (const char* name : {"cooling", "heating-rates"}) {
    const fs::path dir1 = scratch_dir(std::string(name) + "-1");
    const fs::path dir2 = scratch_dir(std::string(name) + "-2");
    scenario::RunResult r1 =
        scenario::run_scenario(scenario::builtin_scenario(name));
    scenario::RunResult r2 =
        scenario::run_scenario(scenario::builtin_scenario(name));
    scenario::write_outputs(r1, dir1.string());
    scenario::write_outputs(r2, dir2.string());
    for (const auto& [file, digest] : r1.digests) {
      INFO(name, "/", file);
      CHECK(slurp(dir1 / file) == slurp(dir2 / file));
    }
    CHECK(r1.digests == r2.digests);
  }
}

TEST_CASE("sweep emits one row per value in input order") {
  scenario::ScenarioSpec base = scenario::builtin_scenario("impedance");
  scenario::RunResult result =
      scenario::sweep(base, "z_cpw", {1000.0, 500.0, 2000.0});

  REQUIRE(result.tables.size() == 1);
  const scenario::Table& table = result.tables[0];
  REQUIRE(table.rows.size() == 3);
  CHECK(table.columns[0] == "z_cpw [ohm]");
  CHECK(table.rows[0][0] == doctest::Approx(1000.0));
  CHECK(table.rows[1][0] == doctest::Approx(500.0));
  CHECK(table.rows[2][0] == doctest::Approx(2000.0));

  // z_effective_n1 column follows 4 Z / pi.
  const auto col = std::find(table.columns.begin(), table.columns.end(),
                             "z_effective_n1 [ohm]");
  REQUIRE(col != table.columns.end());
  const std::size_t j = col - table.columns.begin();
  for (const auto& row : table.rows)
    CHECK(row[j] == doctest::Approx(4.0 * row[0] / M_PI));
}

TEST_CASE("sweeping an unknown parameter fails before running") {
  scenario::ScenarioSpec base = scenario::builtin_scenario("impedance");
  CHECK_THROWS_AS(scenario::sweep(base, "bogus", {1.0}),
                  scenario::ScenarioError);
}

TEST_CASE("manifest quotes the tool version") {
  scenario::RunResult result =
      scenario::run_scenario(scenario::builtin_scenario("impedance"));
  const std::string manifest = scenario::manifest_text(result);
  CHECK(manifest.find(std::string("tool_version = ") +
                      scenario::tool_version) != std::string::npos);
}
