#include "zenon/scenario.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <utility>

#include "zenon/dilation.hpp"
#include "zenon/dynamics.hpp"
#include "zenon/effective.hpp"
#include "zenon/figures.hpp"
#include "zenon/protocol.hpp"

namespace zenon {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{{Command::Derive, "derive"},
                                                                         {Command::Simulate, "simulate"},
                                                                         {Command::Protocol, "protocol"},
                                                                         {Command::Dilate, "dilate"},
                                                                         {Command::Roundtrip, "roundtrip"},
                                                                         {Command::Figures, "figures"},
                                                                         {Command::Sweep, "sweep"}}};

constexpr std::array<std::pair<ModelKind, std::string_view>, 3> kModels{
    {{ModelKind::Symmetric, "symmetric"}, {ModelKind::Anisotropic, "anisotropic"}, {ModelKind::MatrixFile, "matrix-file"}}};

// Field tables keep parsing, serialization and sweep overrides in sync.
const std::vector<std::pair<std::string, double SymmetricParams::*>>& symmetric_fields() {
  static const std::vector<std::pair<std::string, double SymmetricParams::*>> f{{"gamma_xy", &SymmetricParams::gamma_xy},
                                                                                {"gamma_z", &SymmetricParams::gamma_z},
                                                                                {"g_xy", &SymmetricParams::g_xy},
                                                                                {"g_z", &SymmetricParams::g_z}};
  return f;
}

const std::vector<std::pair<std::string, double AnisotropicParams::*>>& anisotropic_fields() {
  static const std::vector<std::pair<std::string, double AnisotropicParams::*>> f{
      {"gamma_x", &AnisotropicParams::gamma_x}, {"gamma_y", &AnisotropicParams::gamma_y},
      {"gamma_z", &AnisotropicParams::gamma_z}, {"alpha_x", &AnisotropicParams::alpha_x},
      {"alpha_y", &AnisotropicParams::alpha_y}, {"alpha_z", &AnisotropicParams::alpha_z},
      {"beta_x", &AnisotropicParams::beta_x},   {"beta_y", &AnisotropicParams::beta_y},
      {"beta_z", &AnisotropicParams::beta_z}};
  return f;
}

const std::vector<std::pair<std::string, double TwoLevelBlockParams::*>>& regime_fields() {
  static const std::vector<std::pair<std::string, double TwoLevelBlockParams::*>> f{
      {"mu_z", &TwoLevelBlockParams::mu_z},
      {"nu_z", &TwoLevelBlockParams::nu_z},
      {"mu_x", &TwoLevelBlockParams::mu_x},
      {"nu_x", &TwoLevelBlockParams::nu_x}};
  return f;
}

template <typename T>
void read_fields(const Json& j, T& target, const std::vector<std::pair<std::string, double T::*>>& fields,
                 std::string_view what) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    auto it = std::find_if(fields.begin(), fields.end(), [&](const auto& f) { return f.first == key; });
    if (it == fields.end()) throw Error(ErrorCode::ParseError, "unknown " + std::string(what) + " field '" + key + "'");
    if (!value.is_number()) throw Error(ErrorCode::ParseError, std::string(what) + "." + key + " must be a number");
    const double v = value.template get<double>();
    if (!std::isfinite(v)) throw Error(ErrorCode::ParseError, std::string(what) + "." + key + " must be finite");
    target.*(it->second) = v;
  }
}

template <typename T>
Json write_fields(const T& source, const std::vector<std::pair<std::string, double T::*>>& fields) {
  Json j = Json::object();
  for (const auto& [key, member] : fields) j[key] = source.*member;
  return j;
}

bool is_params_key(ModelKind model, const std::string& key) {
  if (model == ModelKind::Symmetric) {
    const auto& f = symmetric_fields();
    return std::any_of(f.begin(), f.end(), [&](const auto& e) { return e.first == key; });
  }
  if (model == ModelKind::Anisotropic) {
    const auto& f = anisotropic_fields();
    return std::any_of(f.begin(), f.end(), [&](const auto& e) { return e.first == key; });
  }
  return false;
}

const std::vector<std::string> kTopLevelKeys{"command", "model", "params",  "matrix_file", "matrix_files",
                                             "ancilla_site", "tau", "initial_state", "t_max", "n_samples",
                                             "seed", "output_dir", "n_steps", "n_traj", "threads",
                                             "figure", "regime", "grid", "stroboscopic_error"};

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [k, name] : kCommands)
    if (k == c) return name;
  return "unknown";
}

std::string_view to_string(ModelKind m) {
  for (const auto& [k, name] : kModels)
    if (k == m) return name;
  return "unknown";
}

Command parse_command(std::string_view s) {
  for (const auto& [k, name] : kCommands)
    if (name == s) return k;
  throw Error(ErrorCode::ParseError, "unknown command '" + std::string(s) + "'");
}

void Scenario::validate() const {
  if (model == ModelKind::MatrixFile) {
    if (matrix_files.empty()) throw Error(ErrorCode::InvalidArgument, "matrix-file model needs matrix_file");
  } else if (!matrix_files.empty()) {
    throw Error(ErrorCode::InvalidArgument, "exactly one model source: params or matrix_file, not both");
  }
  if (!(t_max > 0)) throw Error(ErrorCode::InvalidArgument, "t_max must be positive");
  if (n_samples < 2) throw Error(ErrorCode::InvalidArgument, "n_samples must be at least 2");
  if (tau && !(*tau > 0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  if (n_steps && *n_steps < 0) throw Error(ErrorCode::InvalidArgument, "n_steps must be non-negative");
  if (n_traj < 1) throw Error(ErrorCode::InvalidArgument, "n_traj must be positive");
  if (threads < 1) throw Error(ErrorCode::InvalidArgument, "threads must be positive");
  if (!initial_label.empty()) basis_index(initial_label);
  if (figure != "fig4" && figure != "fig5") throw Error(ErrorCode::InvalidArgument, "figure must be fig4 or fig5");
  for (const auto& g : grid)
    if (!g.is_object()) throw Error(ErrorCode::InvalidArgument, "grid points must be objects");
}

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(kTopLevelKeys.begin(), kTopLevelKeys.end(), key) == kTopLevelKeys.end()) {
      throw Error(ErrorCode::ParseError, "unknown config key '" + key + "'");
    }
  }
  Scenario s;
  try {
    if (j.contains("command")) s.command = parse_command(j.at("command").get<std::string>());
    if (j.contains("model")) {
      const auto name = j.at("model").get<std::string>();
      auto it = std::find_if(kModels.begin(), kModels.end(), [&](const auto& m) { return m.second == name; });
      if (it == kModels.end()) throw Error(ErrorCode::ParseError, "unknown model '" + name + "'");
      s.model = it->first;
    }
    if (j.contains("params")) {
      if (s.model == ModelKind::Symmetric) read_fields(j.at("params"), s.symmetric, symmetric_fields(), "params");
      else if (s.model == ModelKind::Anisotropic) read_fields(j.at("params"), s.anisotropic, anisotropic_fields(), "params");
      else throw Error(ErrorCode::InvalidArgument, "exactly one model source: matrix-file models take no params");
    }
    if (j.contains("matrix_file")) s.matrix_files.push_back(j.at("matrix_file").get<std::string>());
    if (j.contains("matrix_files")) {
      for (const auto& f : j.at("matrix_files")) s.matrix_files.push_back(f.get<std::string>());
    }
    if (j.contains("ancilla_site")) s.ancilla_site = j.at("ancilla_site").get<int>();
    if (j.contains("tau") && !j.at("tau").is_null()) s.tau = j.at("tau").get<double>();
    if (j.contains("initial_state")) {
      const Json& st = j.at("initial_state");
      if (st.is_string()) {
        s.initial_label = st.get<std::string>();
      } else if (st.is_array()) {
        for (const auto& a : st) {
          if (a.is_number()) s.initial_amplitudes.emplace_back(a.get<double>(), 0.0);
          else if (a.is_array() && a.size() == 2) s.initial_amplitudes.emplace_back(a[0].get<double>(), a[1].get<double>());
          else throw Error(ErrorCode::ParseError, "amplitudes must be numbers or [re, im] pairs");
        }
      } else {
        throw Error(ErrorCode::ParseError, "initial_state must be a basis label or an amplitude list");
      }
    }
    s.t_max = j.value("t_max", s.t_max);
    s.n_samples = j.value("n_samples", s.n_samples);
    s.seed = j.value("seed", s.seed);
    s.output_dir = j.value("output_dir", s.output_dir);
    if (j.contains("n_steps")) s.n_steps = j.at("n_steps").get<int>();
    s.n_traj = j.value("n_traj", s.n_traj);
    s.threads = j.value("threads", s.threads);
    s.figure = j.value("figure", s.figure);
    if (j.contains("regime")) {
      TwoLevelBlockParams r;
      read_fields(j.at("regime"), r, regime_fields(), "regime");
      s.regime = r;
    }
    s.stroboscopic_error = j.value("stroboscopic_error", false);
    if (j.contains("grid")) {
      if (!j.at("grid").is_array()) throw Error(ErrorCode::ParseError, "grid must be an array");
      for (const auto& g : j.at("grid")) s.grid.push_back(g);
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
  }
  s.validate();
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["command"] = to_string(s.command);
  j["model"] = to_string(s.model);
  if (s.model == ModelKind::Symmetric) j["params"] = write_fields(s.symmetric, symmetric_fields());
  if (s.model == ModelKind::Anisotropic) j["params"] = write_fields(s.anisotropic, anisotropic_fields());
  if (s.matrix_files.size() == 1) j["matrix_file"] = s.matrix_files.front();
  if (s.matrix_files.size() > 1) j["matrix_files"] = s.matrix_files;
  if (s.ancilla_site) j["ancilla_site"] = *s.ancilla_site;
  if (s.tau) j["tau"] = *s.tau;
  if (!s.initial_label.empty()) {
    j["initial_state"] = s.initial_label;
  } else if (!s.initial_amplitudes.empty()) {
    Json amps = Json::array();
    for (const auto& a : s.initial_amplitudes) amps.push_back({a.real(), a.imag()});
    j["initial_state"] = amps;
  }
  j["t_max"] = s.t_max;
  j["n_samples"] = s.n_samples;
  j["seed"] = s.seed;
  j["output_dir"] = s.output_dir;
  if (s.n_steps) j["n_steps"] = *s.n_steps;
  j["n_traj"] = s.n_traj;
  j["threads"] = s.threads;
  j["figure"] = s.figure;
  if (s.regime) j["regime"] = write_fields(*s.regime, regime_fields());
  if (!s.grid.empty()) j["grid"] = s.grid;
  if (s.stroboscopic_error) j["stroboscopic_error"] = true;
  return j;
}

Scenario load_scenario(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  const auto base = path.parent_path();
  const auto resolve = [&](Json& v) {
    std::filesystem::path p = v.get<std::string>();
    if (p.is_relative()) v = (base / p).lexically_normal().string();
  };
  if (j.is_object()) {
    if (j.contains("matrix_file") && j["matrix_file"].is_string()) resolve(j["matrix_file"]);
    if (j.contains("matrix_files") && j["matrix_files"].is_array())
      for (auto& f : j["matrix_files"])
        if (f.is_string()) resolve(f);
  }
  return scenario_from_json(j);
}

// ---------------------------------------------------------------------------
// Execution

namespace {

struct Model {
  CMatrix composite;  // empty when the file holds an H_eff
  AncillaSpec spec;
};

CMatrix load_matrix(const std::string& file) { return matrix_from_json(read_json_file(file)); }

AnisotropicParams effective_anisotropic(const Scenario& s) {
  if (s.regime) {
    if (!s.tau) throw Error(ErrorCode::InvalidArgument, "a block regime needs tau");
    return anisotropic_params_for_plus_block(*s.regime, *s.tau);
  }
  return s.anisotropic;
}

Model composite_model(const Scenario& s) {
  Model m;
  switch (s.model) {
    case ModelKind::Symmetric: m.composite = build_symmetric(s.symmetric); break;
    case ModelKind::Anisotropic: m.composite = build_anisotropic(effective_anisotropic(s)); break;
    case ModelKind::MatrixFile:
      m.composite = load_matrix(s.matrix_files.front());
      m.spec.site = s.ancilla_site;
      break;
  }
  if (s.model != ModelKind::MatrixFile && s.ancilla_site && *s.ancilla_site != 3) {
    m.spec.site = s.ancilla_site;
  }
  return m;
}

double require_tau(const Scenario& s) {
  if (!s.tau) throw Error(ErrorCode::InvalidArgument, "this command needs tau");
  return *s.tau;
}

DensityMatrix initial_state(const Scenario& s, Eigen::Index dim) {
  CVector psi;
  if (!s.initial_amplitudes.empty()) {
    psi.resize(static_cast<Eigen::Index>(s.initial_amplitudes.size()));
    for (std::size_t k = 0; k < s.initial_amplitudes.size(); ++k) psi(static_cast<Eigen::Index>(k)) = s.initial_amplitudes[k];
  } else if (!s.initial_label.empty()) {
    psi = basis_state(s.initial_label);
  } else {
    psi = CVector::Zero(dim);
    psi(0) = 1;
  }
  if (psi.size() != dim) {
    throw Error(ErrorCode::BadDimension, "initial state has dimension " + std::to_string(psi.size()) +
                                             ", system has " + std::to_string(dim));
  }
  return DensityMatrix::pure(psi);
}

std::pair<Eigen::Index, Eigen::Index> coherence_entry(Eigen::Index dim) {
  if (dim == 4) return {1, 2};
  return {0, std::min<Eigen::Index>(1, dim - 1)};
}

std::filesystem::path out_path(const Scenario& s, const std::string& name) {
  return std::filesystem::path(s.output_dir) / name;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_derive(const Scenario& s, std::ostream& out) {
  const Model m = composite_model(s);
  const EffectiveHamiltonian eff = derive_effective(m.composite, m.spec, require_tau(s));
  write_text_file(out_path(s, "effective.json"), dump(effective_to_json(eff)));
  out << "derived effective Hamiltonian of dimension " << eff.dim() << "\n";
  return 0;
}

struct SimulationOutcome {
  std::vector<GridSample> samples;
  CMatrix composite;
  AncillaSpec spec;
  double tau = 0;
  DensityMatrix rho0 = DensityMatrix::maximally_mixed(1);
};

SimulationOutcome simulate_samples(const Scenario& s) {
  const Model m = composite_model(s);
  const double tau = require_tau(s);
  const EffectiveHamiltonian eff = derive_effective(m.composite, m.spec, tau);
  const DensityMatrix rho0 = initial_state(s, eff.dim());
  return {evolve_on_grid(eff.matrix(), rho0, s.t_max, s.n_samples), m.composite, m.spec, tau, rho0};
}

Json final_summary(const GridSample& last) {
  Json j;
  j["t"] = last.t;
  j["p"] = std::exp(last.log_p);
  j["log_p"] = last.log_p;
  j["purity"] = (last.rho * last.rho).trace().real();
  if (last.rho.rows() == 4) {
    const DensityMatrix rho(last.rho, 1e-8);
    j["concurrence"] = concurrence(rho);
    j["F_phi_plus"] = bell_fidelity(rho, BellState::PhiPlus);
    j["F_phi_minus"] = bell_fidelity(rho, BellState::PhiMinus);
    j["F_psi_plus"] = bell_fidelity(rho, BellState::PsiPlus);
    j["F_psi_minus"] = bell_fidelity(rho, BellState::PsiMinus);
  }
  return j;
}

int run_simulate(const Scenario& s, std::ostream& out) {
  const auto sim = simulate_samples(s);
  const auto [r, c] = coherence_entry(sim.samples.front().rho.rows());
  write_text_file(out_path(s, "simulate.csv"), time_series_table(sim.samples, r, c).str());
  write_text_file(out_path(s, "summary.json"), dump(final_summary(sim.samples.back())));
  out << "wrote " << sim.samples.size() << " samples\n";
  return 0;
}

int run_protocol(const Scenario& s, std::ostream& out, std::ostream& err) {
  const Model m = composite_model(s);
  const double tau = require_tau(s);
  const int n_steps = s.n_steps.value_or(static_cast<int>(std::lround(s.t_max / tau)));
  const ProtocolConfig cfg{m.composite, m.spec, tau, n_steps};
  cfg.validate();
  if (!cfg.in_stroboscopic_regime()) {
    err << "warning: tau * max Bohr frequency = " << tau * cfg.max_bohr_frequency()
        << " >= 1, outside the stroboscopic regime\n";
  }
  const DensityMatrix rho0 = initial_state(s, m.composite.rows() / 2);
  const auto exact = conditional_survival_curve(cfg, rho0);
  const auto ens = simulate_trajectories(cfg, rho0, s.n_traj, s.seed, {s.threads, false});
  write_text_file(out_path(s, "protocol.csv"), ensemble_table(ens, exact).str());

  Json summary;
  summary["n_steps"] = n_steps;
  summary["tau"] = tau;
  summary["n_traj"] = s.n_traj;
  summary["seed"] = s.seed;
  summary["p_exact_final"] = exact.empty() ? 1.0 : exact.back();
  summary["p_empirical_final"] = ens.survival_counts.empty() ? 1.0 : double(ens.survival_counts.back()) / s.n_traj;
  summary["in_stroboscopic_regime"] = cfg.in_stroboscopic_regime();
  summary["stroboscopic_error"] = stroboscopic_error(cfg, rho0);
  write_text_file(out_path(s, "protocol.json"), dump(summary));
  out << "simulated " << s.n_traj << " trajectories over " << n_steps << " measurements\n";
  return 0;
}

CMatrix effective_input(const Scenario& s) {
  if (s.model == ModelKind::MatrixFile) return load_matrix(s.matrix_files.front());
  const Model m = composite_model(s);
  return derive_effective(m.composite, m.spec, require_tau(s)).matrix();
}

int run_dilate(const Scenario& s, std::ostream& out, std::ostream& err) {
  const CMatrix h_eff = effective_input(s);
  // For model sources tau is the derivation interval; the dilation picks its own.
  const bool explicit_tau = s.model == ModelKind::MatrixFile && s.tau;
  const DilationResult d = explicit_tau ? dilate(h_eff, *s.tau) : dilate(h_eff);
  if (!d.in_prescribed_regime()) {
    err << "warning: f * tau = " << d.f * d.tau << " exceeds the recommended 0.01\n";
  }
  write_text_file(out_path(s, "dilation.json"), dump(dilation_to_json(d)));
  out << "dilated to dimension " << d.h.rows() << " with tau = " << d.tau << "\n";
  return 0;
}

int run_roundtrip(const Scenario& s, std::ostream& out) {
  if (s.model != ModelKind::MatrixFile) throw Error(ErrorCode::InvalidArgument, "roundtrip needs matrix files");
  Json results = Json::array();
  bool all_passed = true;
  std::string first_failure;
  for (const auto& file : s.matrix_files) {
    const CMatrix h_eff = load_matrix(file);
    Json entry;
    entry["file"] = std::filesystem::path(file).filename().string();
    try {
      const double tau = s.tau ? *s.tau : choose_tau(decay_spread(h_eff));
      entry["report"] = roundtrip_to_json(roundtrip_check(h_eff, tau));
      entry["passed"] = true;
    } catch (const Error& e) {
      if (!is_numerical(e.code())) throw;
      entry["passed"] = false;
      entry["error"] = e.what();
      all_passed = false;
      if (first_failure.empty()) first_failure = e.what();
    }
    results.push_back(entry);
  }
  write_text_file(out_path(s, "roundtrip.json"), dump(Json{{"all_passed", all_passed}, {"results", results}}));
  if (!all_passed) throw Error(ErrorCode::RoundTripFailure, first_failure);
  out << "round trip passed for " << s.matrix_files.size() << " matrices\n";
  return 0;
}

int run_figures(const Scenario& s, std::ostream& out) {
  const double tau = require_tau(s);
  if (s.figure == "fig4") {
    if (s.model != ModelKind::Symmetric) throw Error(ErrorCode::InvalidArgument, "fig4 needs the symmetric model");
    const double axis_max = 2 * std::abs(s.symmetric.gamma_xy) * s.t_max;
    const Figure4Data d = figure4_series(s.symmetric, tau, axis_max, s.n_samples);
    write_text_file(out_path(s, "fig4a.csv"), figure4a_table(d).str());
    write_text_file(out_path(s, "fig4b.csv"), figure4b_table(d).str());
    out << "wrote fig4a.csv and fig4b.csv\n";
  } else {
    if (s.model != ModelKind::Anisotropic) throw Error(ErrorCode::InvalidArgument, "fig5 needs the anisotropic model");
    const AnisotropicParams p = effective_anisotropic(s);
    const EffectiveHamiltonian eff = derive_effective(build_anisotropic(p), AncillaSpec{}, tau);
    const double mu_x = std::abs(block_decompose(eff.matrix()).plus.mu_x);
    const Figure5Data d = figure5_series(p, tau, mu_x * s.t_max, s.n_samples);
    write_text_file(out_path(s, "fig5.csv"), figure5_table(d).str());
    out << "wrote fig5.csv\n";
  }
  return 0;
}

Scenario apply_grid_point(const Scenario& base, const Json& point) {
  Json j = scenario_to_json(base);
  j.erase("grid");
  j["command"] = "simulate";
  for (const auto& [key, value] : point.items()) {
    if (is_params_key(base.model, key)) j["params"][key] = value;
    else j[key] = value;
  }
  return scenario_from_json(j);
}

int run_sweep(const Scenario& s, std::ostream& out) {
  std::vector<std::string> header{"point", "tau", "t_max", "p_final", "concurrence", "F_phi_plus", "F_phi_minus",
                                  "F_psi_plus", "F_psi_minus"};
  const bool strobo = s.stroboscopic_error;

  std::vector<std::vector<double>> rows;
  Eigen::Index dim = 0;
  for (std::size_t k = 0; k < s.grid.size(); ++k) {
    const Scenario point = apply_grid_point(s, s.grid[k]);
    const auto sim = simulate_samples(point);
    const auto& last = sim.samples.back();
    dim = last.rho.rows();
    const auto [r, c] = coherence_entry(dim);
    write_text_file(out_path(s, "sweep_" + std::to_string(k) + ".csv"), time_series_table(sim.samples, r, c).str());

    const Json summary = final_summary(last);
    const double nan = std::nan("");
    std::vector<double> row{static_cast<double>(k),
                            sim.tau,
                            point.t_max,
                            summary["p"].get<double>(),
                            summary.value("concurrence", nan),
                            summary.value("F_phi_plus", nan),
                            summary.value("F_phi_minus", nan),
                            summary.value("F_psi_plus", nan),
                            summary.value("F_psi_minus", nan)};
    for (Eigen::Index i = 0; i < dim; ++i) row.push_back(last.rho(i, i).real());
    if (strobo) {
      const int n = static_cast<int>(std::lround(point.t_max / sim.tau));
      row.push_back(stroboscopic_error(ProtocolConfig{sim.composite, sim.spec, sim.tau, n}, sim.rho0));
    }
    rows.push_back(std::move(row));
  }
  for (const auto& l : basis_labels(dim)) header.push_back("pop_" + l);
  if (strobo) header.push_back("stroboscopic_error");
  CsvTable table(header);
  for (const auto& r : rows) table.add_row(r);
  write_text_file(out_path(s, "sweep.csv"), table.str());
  out << "swept " << rows.size() << " grid points\n";
  return 0;
}

}  // namespace

int run(const Scenario& s, std::ostream& out, std::ostream& err) {
  try {
    s.validate();
    if (s.matrix_files.size() > 1 && s.command != Command::Roundtrip) {
      throw Error(ErrorCode::InvalidArgument, "several matrix files are only accepted by roundtrip");
    }
    if (s.command == Command::Sweep && s.grid.empty()) throw Error(ErrorCode::InvalidArgument, "sweep grid is empty");
    switch (s.command) {
      case Command::Derive: return run_derive(s, out);
      case Command::Simulate: return run_simulate(s, out);
      case Command::Protocol: return run_protocol(s, out, err);
      case Command::Dilate: return run_dilate(s, out, err);
      case Command::Roundtrip: return run_roundtrip(s, out);
      case Command::Figures: return run_figures(s, out);
      case Command::Sweep: return run_sweep(s, out);
    }
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical(e.code()) ? 3 : 2;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace zenon
