#include "zenon/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "zenon/rng.hpp"

namespace zenon {

void ProtocolConfig::validate() const {
  if (!(tau > 0)) throw Error(ErrorCode::InvalidArgument, "protocol tau must be positive");
  if (n_steps < 0) throw Error(ErrorCode::InvalidArgument, "protocol n_steps must be non-negative");
  if (!is_hermitian(h)) throw Error(ErrorCode::NotHermitian, "composite Hamiltonian is not Hermitian");
}

double ProtocolConfig::max_bohr_frequency() const { return spectral_spread(h); }

bool ProtocolConfig::in_stroboscopic_regime() const { return tau * max_bohr_frequency() < 1; }

namespace {

void check_state(const ProtocolConfig& cfg, const DensityMatrix& rho0) {
  cfg.validate();
  if (2 * rho0.dim() != cfg.h.rows()) throw Error(ErrorCode::BadDimension, "initial state does not match the system factor");
}

}  // namespace

ConditionalState simulate_conditional(const ProtocolConfig& cfg, const DensityMatrix& rho0) {
  check_state(cfg, rho0);
  if (cfg.n_steps == 0) return {rho0.matrix(), 1.0, 0.0};

  const CMatrix k = kraus_step(cfg.h, cfg.spec, cfg.tau);
  CMatrix rho_c = rho0.matrix();
  CMatrix rho_norm = rho0.matrix();
  double chain = 1;
  for (int n = 0; n < cfg.n_steps; ++n) {
    rho_c = hermitian_part(CMatrix(k * rho_c * k.adjoint()));
    const CMatrix next = k * rho_norm * k.adjoint();
    const double step_p = next.trace().real();
    chain *= step_p;
    if (!(chain > kMinProbability)) {
      throw Error(ErrorCode::ProbabilityUnderflow,
                  "success probability fell below 1e-12 after " + std::to_string(n + 1) + " measurements");
    }
    rho_norm = hermitian_part(CMatrix(next * (1 / step_p)));
  }
  const double p = rho_c.trace().real();
  const double tol = 1e-12 * std::max(1.0, std::sqrt(static_cast<double>(cfg.n_steps)));
  if (std::abs(p - chain) > tol * chain) {
    throw Error(ErrorCode::ConvergenceFailure, "trace and probability chain disagree: " + std::to_string(p) + " vs " +
                                                   std::to_string(chain));
  }
  return {std::move(rho_c), p, cfg.n_steps * cfg.tau};
}

std::vector<double> conditional_survival_curve(const ProtocolConfig& cfg, const DensityMatrix& rho0) {
  check_state(cfg, rho0);
  const CMatrix k = kraus_step(cfg.h, cfg.spec, cfg.tau);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(cfg.n_steps));
  CMatrix rho_norm = rho0.matrix();
  double chain = 1;
  for (int n = 0; n < cfg.n_steps; ++n) {
    const CMatrix next = k * rho_norm * k.adjoint();
    const double step_p = next.trace().real();
    chain *= step_p;
    out.push_back(chain);
    if (step_p > 0) rho_norm = next * (1 / step_p);
  }
  return out;
}

TrajectoryEnsemble simulate_trajectories(const ProtocolConfig& cfg, const DensityMatrix& rho0, int n_traj,
                                         std::uint64_t seed, TrajectoryOptions options) {
  check_state(cfg, rho0);
  if (n_traj < 1) throw Error(ErrorCode::InvalidArgument, "need at least one trajectory");

  const Eigen::Index ds = rho0.dim();
  const int m = cfg.spec.measured_state;
  const CMatrix hc = to_canonical_order(cfg.h, cfg.spec);
  const CMatrix u = expm(CMatrix(-kI * cfg.tau * hc));
  // Columns of U acting on |s> (x) |m>.
  CMatrix u_in(2 * ds, ds);
  for (Eigen::Index s = 0; s < ds; ++s) u_in.col(s) = u.col(2 * s + m);

  const auto eig = hermitian_eig(rho0.matrix());
  std::vector<double> cumulative(static_cast<std::size_t>(ds));
  double acc = 0;
  for (Eigen::Index i = 0; i < ds; ++i) {
    acc += std::max(0.0, eig.eigenvalues(i));
    cumulative[static_cast<std::size_t>(i)] = acc;
  }

  std::vector<int> lifetimes(static_cast<std::size_t>(n_traj), 0);
  std::vector<CVector> finals(options.keep_states ? static_cast<std::size_t>(n_traj) : 0);

  const auto run_one = [&](int idx) {
    auto rng = Xoshiro256StarStar::stream(seed, static_cast<std::uint64_t>(idx));
    Eigen::Index pick = ds - 1;
    if (ds > 1) {
      const double r = rng.uniform() * acc;
      pick = std::lower_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin();
      pick = std::min(pick, ds - 1);
    }
    CVector psi = eig.eigenvectors.col(pick);
    CVector kept(ds);
    int survived = 0;
    for (; survived < cfg.n_steps; ++survived) {
      const CVector v = u_in * psi;
      for (Eigen::Index s = 0; s < ds; ++s) kept(s) = v(2 * s + m);
      const double p0 = kept.squaredNorm();
      if (!(rng.uniform() < p0)) break;
      psi = kept / std::sqrt(p0);
    }
    lifetimes[static_cast<std::size_t>(idx)] = survived;
    if (options.keep_states && survived == cfg.n_steps) finals[static_cast<std::size_t>(idx)] = psi;
  };

  const int threads = std::clamp(options.threads, 1, n_traj);
  if (threads == 1) {
    for (int i = 0; i < n_traj; ++i) run_one(i);
  } else {
    std::vector<std::jthread> pool;
    const int chunk = (n_traj + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const int begin = w * chunk;
      const int end = std::min(n_traj, begin + chunk);
      pool.emplace_back([&, begin, end] {
        for (int i = begin; i < end; ++i) run_one(i);
      });
    }
  }

  TrajectoryEnsemble ens;
  ens.n_traj = n_traj;
  ens.seed = seed;
  ens.survival_counts.assign(static_cast<std::size_t>(cfg.n_steps), 0);
  for (int life : lifetimes)
    for (int k = 0; k < life; ++k) ++ens.survival_counts[static_cast<std::size_t>(k)];
  if (options.keep_states) {
    std::vector<CVector> kept;
    for (std::size_t i = 0; i < lifetimes.size(); ++i)
      if (lifetimes[i] == cfg.n_steps) kept.push_back(std::move(finals[i]));
    ens.survived_states = std::move(kept);
  }
  return ens;
}

double stroboscopic_error(const ProtocolConfig& cfg, const DensityMatrix& rho0) {
  const ConditionalState exact = simulate_conditional(cfg, rho0);
  const EffectiveHamiltonian eff = derive_effective(cfg.h, cfg.spec, cfg.tau);
  const ConditionalState approx = evolve_conditional(eff, rho0, cfg.n_steps * cfg.tau);
  return (normalize(exact).matrix() - normalize(approx).matrix()).norm();
}

}  // namespace zenon
