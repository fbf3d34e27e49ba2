#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zenon/entanglement.hpp"
#include "zenon/io.hpp"
#include "zenon/spin_models.hpp"

namespace zenon {

enum class Command { Derive, Simulate, Protocol, Dilate, Roundtrip, Figures, Sweep };
enum class ModelKind { Symmetric, Anisotropic, MatrixFile };

std::string_view to_string(Command c);
std::string_view to_string(ModelKind m);
Command parse_command(std::string_view s);

/// A run configuration. All quantities are angular frequencies with hbar = 1;
/// times are in inverse angular frequency.
struct Scenario {
  Command command = Command::Simulate;
  ModelKind model = ModelKind::Symmetric;
  SymmetricParams symmetric;
  AnisotropicParams anisotropic;
  /// matrix-file model: composite H for derive/simulate/protocol/sweep, H_eff
  /// for dilate/roundtrip. Several files are accepted only by roundtrip.
  std::vector<std::string> matrix_files;
  std::optional<int> ancilla_site;

  std::optional<double> tau;
  std::string initial_label;               // e.g. "01"; empty when amplitudes are given
  std::vector<Complex> initial_amplitudes;
  double t_max = 1;
  int n_samples = 400;
  std::uint64_t seed = 0;
  std::string output_dir = ".";

  // protocol
  std::optional<int> n_steps;
  int n_traj = 1000;
  int threads = 1;

  // figures
  std::string figure = "fig4";
  std::optional<TwoLevelBlockParams> regime;

  // sweep: objects overriding top-level keys (params fields, tau, t_max, regime)
  std::vector<Json> grid;
  bool stroboscopic_error = false;  // adds the protocol-vs-effective distance column

  void validate() const;
};

Scenario scenario_from_json(const Json& j);
Json scenario_to_json(const Scenario& s);

/// Loads a config file; relative matrix paths are resolved against its directory.
Scenario load_scenario(const std::filesystem::path& path);

/// Executes the scenario, writing artifacts under output_dir. Returns 0 on
/// success, 2 on validation errors and 3 on numerical failures, with a
/// one-line diagnostic on `err`.
int run(const Scenario& s, std::ostream& out, std::ostream& err);

}  // namespace zenon
