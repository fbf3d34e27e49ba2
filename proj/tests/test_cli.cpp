#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zenon/scenario.hpp"

namespace fs = std::filesystem;
using zenon::Json;

namespace {

const fs::path kSource = ZENON_SOURCE_DIR;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "zenon_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code;
  std::string err;
};

CliResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string(ZENON_CLI_PATH) + " " + args + " > " + (dir / "stdout.txt").string() + " 2> " +
                          err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(err)};
}

fs::path write_config(const fs::path& dir, const std::string& name, const Json& j) {
  const fs::path p = dir / name;
  std::ofstream(p) << j.dump(2);
  return p;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    REQUIRE(it != header.end());
    return static_cast<std::size_t>(it - header.begin());
  }
};

Csv read_csv(const fs::path& p) {
  std::ifstream in(p);
  Csv csv;
  std::string line;
  REQUIRE(std::getline(in, line));
  std::stringstream hs(line);
  for (std::string cell; std::getline(hs, cell, ',');) csv.header.push_back(cell);
  while (std::getline(in, line)) {
    std::stringstream ls(line);
    std::vector<double> row;
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    csv.rows.push_back(row);
  }
  return csv;
}

std::string config(const std::string& name) { return (kSource / "configs" / name).string(); }

}  // namespace

TEST_CASE("figures fig4 reaches the singlet asymptotics") {
  const auto dir = scratch("fig4");
  const auto r = run_cli("figures --config " + config("fig4.json") + " --out " + dir.string(), dir);
  REQUIRE(r.code == 0);
  const Csv a = read_csv(dir / "fig4a.csv");
  const Csv b = read_csv(dir / "fig4b.csv");
  CHECK(a.header == std::vector<std::string>{"gt_axis", "pop10", "pop01"});
  CHECK(b.header == std::vector<std::string>{"gt_axis", "re_coh", "im_coh"});
  CHECK(a.rows.size() == 400);
  const auto& last = a.rows.back();
  CHECK(last[0] == doctest::Approx(15));
  CHECK(std::abs(last[1] - 0.5) < 1e-5);
  CHECK(std::abs(last[2] - 0.5) < 1e-5);
  CHECK(std::abs(b.rows.back()[1] + 0.5) < 1e-5);
  CHECK(std::abs(b.rows.back()[2]) < 1e-5);
}

TEST_CASE("figures fig5 panels") {
  std::vector<Csv> panels;
  for (const char* name : {"fig5a", "fig5b", "fig5c"}) {
    const auto dir = scratch(name);
    REQUIRE(run_cli(std::string("figures --config ") + config(std::string(name) + ".json") + " --out " + dir.string(), dir)
                .code == 0);
    panels.push_back(read_csv(dir / "fig5.csv"));
    CHECK(panels.back().header == std::vector<std::string>{"mxt_axis", "pop11", "re_coh", "im_coh"});
    CHECK(panels.back().rows.back()[0] == doctest::Approx(40));
  }
  const auto& c = panels[2].rows.back();
  // F(Phi+) = (pop00 + pop11)/2 + Re <00|rho|11> with pop01 = pop10 = 0
  CHECK(0.5 + c[2] > 0.99);
}

TEST_CASE("dilate on a Hermitian matrix without tau") {
  const auto dir = scratch("dilate_hermitian");
  const auto r = run_cli("dilate --config " + config("dilate_hermitian.json") + " --out " + dir.string(), dir);
  CHECK(r.code == 2);
  CHECK(r.err.find("ZeroAntiHermitianPart") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("dilate writes the result") {
  const auto dir = scratch("dilate");
  REQUIRE(run_cli("dilate --config " + config("dilate.json") + " --out " + dir.string(), dir).code == 0);
  const Json j = zenon::read_json_file(dir / "dilation.json");
  for (const char* key : {"H", "tau", "c", "f", "M"}) CHECK(j.contains(key));
  CHECK(j["H"]["dim"] == 4);
}

TEST_CASE("roundtrip on the bundled fixtures") {
  const auto dir = scratch("roundtrip");
  REQUIRE(run_cli("roundtrip --config " + config("roundtrip.json") + " --out " + dir.string(), dir).code == 0);
  const Json j = zenon::read_json_file(dir / "roundtrip.json");
  CHECK(j["all_passed"] == true);
  REQUIRE(j["results"].size() == 10);
  for (const auto& entry : j["results"]) {
    CHECK(entry["report"]["hermitian_residual"].get<double>() < 1e-10);
    CHECK(entry["report"]["gamma_residual"].get<double>() < 1e-10);
    CHECK(entry["report"]["traceless_residual"].get<double>() < 1e-10);
  }
}

TEST_CASE("one-point sweep equals simulate") {
  const auto dir = scratch("sweep_one");
  Json base = zenon::read_json_file(kSource / "configs" / "simulate.json");
  base.erase("output_dir");
  const auto sim_cfg = write_config(dir, "sim.json", base);
  Json sweep = base;
  sweep["grid"] = Json::array({Json::object()});
  const auto sweep_cfg = write_config(dir, "sweep.json", sweep);
  REQUIRE(run_cli("simulate --config " + sim_cfg.string() + " --out " + (dir / "sim").string(), dir).code == 0);
  REQUIRE(run_cli("sweep --config " + sweep_cfg.string() + " --out " + (dir / "sweep").string(), dir).code == 0);
  CHECK(slurp(dir / "sim" / "simulate.csv") == slurp(dir / "sweep" / "sweep_0.csv"));

  const Csv row = read_csv(dir / "sweep" / "sweep.csv");
  REQUIRE(row.rows.size() == 1);
  const Json summary = zenon::read_json_file(dir / "sim" / "summary.json");
  CHECK(row.rows[0][row.column("p_final")] == summary["p"].get<double>());
  CHECK(row.rows[0][row.column("concurrence")] == summary["concurrence"].get<double>());
  CHECK(row.rows[0][row.column("F_psi_minus")] == summary["F_psi_minus"].get<double>());
}

TEST_CASE("three-regime sweep") {
  const auto dir = scratch("sweep_fig5");
  REQUIRE(run_cli("sweep --config " + config("sweep_fig5.json") + " --out " + dir.string(), dir).code == 0);
  const Csv summary = read_csv(dir / "sweep.csv");
  REQUIRE(summary.rows.size() == 3);
  CHECK(summary.rows[2][summary.column("F_phi_plus")] > 0.99);

  std::vector<std::vector<double>> pop11;
  for (int k = 0; k < 3; ++k) {
    const Csv series = read_csv(dir / ("sweep_" + std::to_string(k) + ".csv"));
    std::vector<double> col;
    for (const auto& r : series.rows) col.push_back(r[series.column("pop_11")]);
    pop11.push_back(col);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double diff = 0;
      for (std::size_t k = 0; k < pop11[i].size(); ++k) diff = std::max(diff, std::abs(pop11[i][k] - pop11[j][k]));
      CHECK(diff > 0.05);
    }
}

TEST_CASE("tau sweep lowers the stroboscopic error") {
  const auto dir = scratch("sweep_tau");
  REQUIRE(run_cli("sweep --config " + config("sweep_tau.json") + " --out " + dir.string(), dir).code == 0);
  const Csv csv = read_csv(dir / "sweep.csv");
  REQUIRE(csv.rows.size() == 3);
  const auto col = csv.column("stroboscopic_error");
  CHECK(csv.rows[0][col] > csv.rows[1][col]);
  CHECK(csv.rows[1][col] > csv.rows[2][col]);
}

TEST_CASE("protocol output is deterministic") {
  const auto dir = scratch("protocol");
  const std::string cfg = "protocol --config " + config("protocol.json");
  REQUIRE(run_cli(cfg + " --out " + (dir / "a").string(), dir).code == 0);
  REQUIRE(run_cli(cfg + " --out " + (dir / "b").string(), dir).code == 0);
  REQUIRE(run_cli(cfg + " --threads 3 --out " + (dir / "c").string(), dir).code == 0);
  REQUIRE(run_cli(cfg + " --seed 7 --out " + (dir / "d").string(), dir).code == 0);
  const std::string a = slurp(dir / "a" / "protocol.csv");
  CHECK(a == slurp(dir / "b" / "protocol.csv"));
  CHECK(a == slurp(dir / "c" / "protocol.csv"));
  CHECK(a != slurp(dir / "d" / "protocol.csv"));
  CHECK(a.substr(0, a.find('\n')) == "step,survivors,p_exact,p_empirical");
  const Json j = zenon::read_json_file(dir / "d" / "protocol.json");
  CHECK(j["seed"] == 7);
}

TEST_CASE("protocol warns outside the stroboscopic regime") {
  const auto dir = scratch("protocol_coarse");
  Json j = zenon::read_json_file(kSource / "configs" / "protocol.json");
  j["tau"] = 0.5;
  j["n_steps"] = 3;
  j["n_traj"] = 10;
  const auto r = run_cli("protocol --config " + write_config(dir, "c.json", j).string() + " --out " + dir.string(), dir);
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("derive writes the effective Hamiltonian") {
  const auto dir = scratch("derive");
  REQUIRE(run_cli("derive --config " + config("derive.json") + " --out " + dir.string(), dir).code == 0);
  const auto eff = zenon::effective_from_json(zenon::read_json_file(dir / "effective.json"));
  CHECK(eff.dim() == 4);
  CHECK(eff.tau == doctest::Approx(0.002));
}

TEST_CASE("exit codes for bad input") {
  const auto dir = scratch("bad");
  CHECK(run_cli("simulate --config " + (dir / "missing.json").string(), dir).code == 2);
  CHECK(run_cli("bogus --config " + config("simulate.json"), dir).code == 2);
  CHECK(run_cli("simulate", dir).code == 2);

  Json base = zenon::read_json_file(kSource / "configs" / "simulate.json");
  base["output_dir"] = (dir / "out").string();
  const auto expect = [&](Json j, int code) {
    const auto r = run_cli("simulate --config " + write_config(dir, "c.json", j).string(), dir);
    CHECK(r.code == code);
    CHECK(r.err.rfind("error: ", 0) == 0);
  };
  Json j = base;
  j["t_max"] = 0;
  expect(j, 2);
  j = base;
  j["n_samples"] = 1;
  expect(j, 2);
  j = base;
  j["unexpected"] = 1;
  expect(j, 2);
  j = base;
  j["params"]["g_xx"] = 1;
  expect(j, 2);
  j = base;
  j["matrix_file"] = "x.json";
  expect(j, 2);
  j = base;
  j["initial_state"] = "0101";
  expect(j, 2);
  j = base;
  j.erase("tau");
  expect(j, 2);
}

TEST_CASE("numerical failures exit with 3") {
  const auto dir = scratch("underflow");
  Json j = zenon::read_json_file(kSource / "configs" / "protocol.json");
  j["params"] = {{"gamma_xy", 0.0}, {"gamma_z", 0.0}, {"g_xy", 5.0}, {"g_z", 0.0}};
  j["tau"] = 0.05;
  j["n_steps"] = 20000;
  j["initial_state"] = "11";
  j["output_dir"] = dir.string();
  const auto r = run_cli("protocol --config " + write_config(dir, "c.json", j).string(), dir);
  CHECK(r.code == 3);
  CHECK(r.err.find("ProbabilityUnderflow") != std::string::npos);
}

TEST_CASE("bundled configs re-serialize to equivalent configs") {
  for (const auto& entry : fs::directory_iterator(kSource / "configs")) {
    if (entry.path().filename() == "hermitian_2x2.json") continue;
    CAPTURE(entry.path().string());
    const auto s = zenon::load_scenario(entry.path());
    const Json once = zenon::scenario_to_json(s);
    const Json twice = zenon::scenario_to_json(zenon::scenario_from_json(once));
    CHECK(once == twice);
  }

  zenon::Scenario s;
  s.model = zenon::ModelKind::Anisotropic;
  s.anisotropic.beta_y = 0.25;
  s.tau = 0.01;
  s.initial_amplitudes = {{0.6, 0}, {0, 0.8}, {0, 0}, {0, 0}};
  s.n_steps = 5;
  s.regime = zenon::TwoLevelBlockParams{0.1, 0.2, 1, 3};
  s.grid = {Json{{"tau", 0.02}}};
  const auto back = zenon::scenario_from_json(zenon::scenario_to_json(s));
  CHECK(back.anisotropic.beta_y == 0.25);
  CHECK(back.initial_amplitudes == s.initial_amplitudes);
  CHECK(back.regime->nu_x == 3);
  CHECK(zenon::scenario_to_json(back) == zenon::scenario_to_json(s));
}
