#include "zenon/dynamics.hpp"

#include <cmath>
#include <string>

namespace zenon {

DensityMatrix::DensityMatrix(CMatrix rho, double tol) : rho_(std::move(rho)) {
  if (rho_.rows() < 1 || rho_.rows() != rho_.cols()) throw Error(ErrorCode::BadDimension, "density matrix must be square");
  if ((rho_ - rho_.adjoint()).norm() > tol) throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
  rho_ = hermitian_part(rho_);
  if (std::abs(rho_.trace() - Complex(1.0)) > tol) {
    throw Error(ErrorCode::InvalidArgument, "density matrix trace is " + std::to_string(rho_.trace().real()));
  }
  const auto eig = hermitian_eig(rho_);
  if (eig.eigenvalues(0) < -tol) throw Error(ErrorCode::NotPSD, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  const double n = psi.norm();
  if (!(n > 0)) throw Error(ErrorCode::InvalidArgument, "state vector has zero norm");
  const CVector u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

Complex DensityMatrix::expectation(const CMatrix& chi) const { return (rho_ * chi).trace(); }

ConditionalState evolve_conditional(const CMatrix& h_eff, const DensityMatrix& rho0, double t) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "evolution time must be non-negative");
  if (h_eff.rows() != rho0.dim()) throw Error(ErrorCode::BadDimension, "generator and state dimensions differ");
  const CMatrix u = expm(CMatrix(-kI * t * h_eff));
  CMatrix rho_c = hermitian_part(CMatrix(u * rho0.matrix() * u.adjoint()));
  const double p = rho_c.trace().real();
  return {std::move(rho_c), p, t};
}

ConditionalState evolve_conditional(const EffectiveHamiltonian& eff, const DensityMatrix& rho0, double t) {
  return evolve_conditional(eff.matrix(), rho0, t);
}

DensityMatrix normalize(const ConditionalState& cs) {
  const double p = cs.rho_c.trace().real();
  if (!(p > kMinProbability)) {
    throw Error(ErrorCode::ProbabilityUnderflow, "conditional trace " + std::to_string(p) + " at t=" + std::to_string(cs.t));
  }
  return DensityMatrix(cs.rho_c * (1 / p), 1e-8);
}

double success_probability_rate(const EffectiveHamiltonian& eff, const ConditionalState& cs) {
  return -eff.tau * (eff.gamma * cs.rho_c).trace().real();
}

std::optional<double> default_time_step(const EffectiveHamiltonian& eff) {
  const double scale = std::max(eff.h0.norm(), eff.tau * eff.gamma.norm());
  if (!(scale > 0)) return std::nullopt;
  return 1e-3 / scale;
}

namespace {

struct StepPlan {
  int steps = 0;
  double h = 0;
};

StepPlan plan_steps(const EffectiveHamiltonian& eff, double t, std::optional<double> dt) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "integration time must be non-negative");
  if (t == 0) return {};
  const double requested = dt ? *dt : default_time_step(eff).value_or(t);
  if (!(requested > 0)) throw Error(ErrorCode::InvalidArgument, "time step must be positive");
  const int steps = std::max(1, static_cast<int>(std::ceil(t / requested - 1e-9)));
  const double h = t / steps;
  if (h * eff.matrix().norm() > 0.1) {
    throw Error(ErrorCode::StepTooLarge, "dt * ||H_eff|| = " + std::to_string(h * eff.matrix().norm()) + " exceeds 0.1");
  }
  return {steps, h};
}

}  // namespace

DensityMatrix integrate_nonlinear(const EffectiveHamiltonian& eff, const DensityMatrix& rho0, double t,
                                  std::optional<double> dt) {
  if (eff.dim() != rho0.dim()) throw Error(ErrorCode::BadDimension, "generator and state dimensions differ");
  const StepPlan plan = plan_steps(eff, t, dt);
  const CMatrix& h0 = eff.h0;
  const CMatrix& gamma = eff.gamma;
  const double tau = eff.tau;

  const auto rhs = [&](const CMatrix& r) -> CMatrix {
    const Complex decay = tau * (gamma * r).trace();
    return -kI * commutator(h0, r) - (tau / 2) * anticommutator(gamma, r) + decay * r;
  };

  CMatrix rho = rho0.matrix();
  for (int s = 0; s < plan.steps; ++s) {
    const double h = plan.h;
    const CMatrix k1 = rhs(rho);
    const CMatrix k2 = rhs(rho + (h / 2) * k1);
    const CMatrix k3 = rhs(rho + (h / 2) * k2);
    const CMatrix k4 = rhs(rho + h * k3);
    rho += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    rho = hermitian_part(rho);
    const double tr = rho.trace().real();
    if (std::abs(tr - 1) > 1e-12) {
      throw Error(ErrorCode::ConvergenceFailure, "trace drifted by " + std::to_string(tr - 1) + " in one step");
    }
    rho *= 1 / tr;
  }
  return DensityMatrix(rho, 1e-8);
}

CVector integrate_pure_nonlinear(const EffectiveHamiltonian& eff, const CVector& psi0, double t,
                                 std::optional<double> dt) {
  if (eff.dim() != psi0.size()) throw Error(ErrorCode::BadDimension, "generator and state dimensions differ");
  if (std::abs(psi0.norm() - 1) > 1e-12) throw Error(ErrorCode::InvalidArgument, "initial state is not normalized");
  const StepPlan plan = plan_steps(eff, t, dt);
  const CMatrix h_eff = eff.matrix();
  const CMatrix& gamma = eff.gamma;
  const double tau = eff.tau;

  const auto rhs = [&](const CVector& v) -> CVector {
    const Complex decay = (tau / 2) * v.dot(gamma * v);
    return -kI * (h_eff * v) + decay * v;
  };

  CVector psi = psi0;
  for (int s = 0; s < plan.steps; ++s) {
    const double h = plan.h;
    const CVector k1 = rhs(psi);
    const CVector k2 = rhs(psi + (h / 2) * k1);
    const CVector k3 = rhs(psi + (h / 2) * k2);
    const CVector k4 = rhs(psi + h * k3);
    psi += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    psi.normalize();
  }
  return psi;
}

std::vector<GridSample> evolve_on_grid(const CMatrix& h_eff, const DensityMatrix& rho0, double t_max,
                                       int n_samples) {
  if (n_samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples");
  if (!(t_max > 0)) throw Error(ErrorCode::InvalidArgument, "t_max must be positive");
  if (h_eff.rows() != rho0.dim()) throw Error(ErrorCode::BadDimension, "generator and state dimensions differ");
  const double dt = t_max / (n_samples - 1);
  const CMatrix step = expm(CMatrix(-kI * dt * h_eff));

  std::vector<GridSample> out;
  out.reserve(static_cast<std::size_t>(n_samples));
  CMatrix rho = rho0.matrix();
  double log_p = 0;
  out.push_back({0.0, 0.0, rho});
  for (int k = 1; k < n_samples; ++k) {
    rho = hermitian_part(CMatrix(step * rho * step.adjoint()));
    const double tr = rho.trace().real();
    if (!(tr > 0) || !std::isfinite(tr)) {
      throw Error(ErrorCode::ProbabilityUnderflow, "state vanished on the time grid at step " + std::to_string(k));
    }
    log_p += std::log(tr);
    rho *= 1 / tr;
    out.push_back({k * dt, log_p, rho});
  }
  return out;
}

}  // namespace zenon
