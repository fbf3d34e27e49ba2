#include <CLI11.hpp>

#include <iostream>

#include "zenon/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"zenon: conditional non-Hermitian dynamics from repeated ancilla measurements"};
  app.require_subcommand(1, 1);

  std::string config;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;

  const std::pair<const char*, const char*> commands[] = {
      {"derive", "derive H_eff from a composite system-ancilla Hamiltonian"},
      {"simulate", "evolve a state under H_eff with survival-probability tracking"},
      {"protocol", "run the stroboscopic measurement protocol and Monte Carlo trajectories"},
      {"dilate", "construct a Hermitian dilation reproducing a given H_eff"},
      {"roundtrip", "dilate then re-derive each matrix file and report residuals"},
      {"figures", "produce the singlet (fig4) or anisotropic-regime (fig5) time series"},
      {"sweep", "run the simulate pipeline over a grid of parameter overrides"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "scenario JSON file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides output_dir)");
    sub->add_option("--seed", seed, "RNG seed (overrides seed)");
    sub->add_option("--threads", threads, "worker threads for trajectories")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    zenon::Scenario s = zenon::load_scenario(config);
    s.command = zenon::parse_command(app.get_subcommands().front()->get_name());
    if (out_dir) s.output_dir = *out_dir;
    if (seed) s.seed = *seed;
    if (threads) s.threads = *threads;
    return zenon::run(s, std::cout, std::cerr);
  } catch (const zenon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zenon::is_numerical(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
