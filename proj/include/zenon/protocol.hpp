#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zenon/dynamics.hpp"
#include "zenon/effective.hpp"

namespace zenon {

/// Repeated projective measurement of the ancilla every `tau`, post-selecting
/// the outcome `spec.measured_state` each time.
struct ProtocolConfig {
  CMatrix h;  // composite S (x) A
  AncillaSpec spec;
  double tau = 0;
  int n_steps = 0;

  void validate() const;
  /// Largest Bohr frequency of the composite Hamiltonian.
  double max_bohr_frequency() const;
  /// tau * (max Bohr frequency) < 1.
  bool in_stroboscopic_regime() const;
};

/// Deterministic branch where every outcome is the post-selected one.
ConditionalState simulate_conditional(const ProtocolConfig& cfg, const DensityMatrix& rho0);

/// p(n tau) for n = 1..n_steps.
std::vector<double> conditional_survival_curve(const ProtocolConfig& cfg, const DensityMatrix& rho0);

struct TrajectoryEnsemble {
  int n_traj = 0;
  std::uint64_t seed = 0;
  /// survival_counts[k]: trajectories whose first k+1 outcomes were all post-selected.
  std::vector<int> survival_counts;
  /// Final system states of trajectories that survived every step (if requested).
  std::optional<std::vector<CVector>> survived_states;
};

struct TrajectoryOptions {
  int threads = 1;
  bool keep_states = false;
};

/// Monte Carlo sampling of measurement records. Mixed initial states are
/// unravelled by drawing an eigenvector of rho0 per trajectory.
TrajectoryEnsemble simulate_trajectories(const ProtocolConfig& cfg, const DensityMatrix& rho0, int n_traj,
                                         std::uint64_t seed, TrajectoryOptions options = {});

/// Frobenius distance between the exact normalized conditional state after
/// n_steps measurements and the one generated by the effective Hamiltonian.
double stroboscopic_error(const ProtocolConfig& cfg, const DensityMatrix& rho0);

}  // namespace zenon
