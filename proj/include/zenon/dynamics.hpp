#pragma once

#include <optional>
#include <vector>

#include "zenon/effective.hpp"
#include "zenon/linalg.hpp"

namespace zenon {

/// Trace-one Hermitian PSD matrix. Construction validates.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix rho, double tol = 1e-10);

  static DensityMatrix pure(const CVector& psi);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  const CMatrix& matrix() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }
  double purity() const;
  /// Tr[rho chi]; real for Hermitian chi.
  Complex expectation(const CMatrix& chi) const;

 private:
  CMatrix rho_;
};

/// Unnormalized post-selected state; p is its trace.
struct ConditionalState {
  CMatrix rho_c;
  double p = 1;
  double t = 0;
};

inline constexpr double kMinProbability = 1e-12;

ConditionalState evolve_conditional(const EffectiveHamiltonian& eff, const DensityMatrix& rho0, double t);
/// Same, for an arbitrary (possibly non-dissipative) non-Hermitian generator.
ConditionalState evolve_conditional(const CMatrix& h_eff, const DensityMatrix& rho0, double t);

/// Throws ProbabilityUnderflow when the trace is below kMinProbability.
DensityMatrix normalize(const ConditionalState& cs);

/// dp/dt = -tau Tr[gamma rho_c].
double success_probability_rate(const EffectiveHamiltonian& eff, const ConditionalState& cs);

/// 1e-3 / max(||h0||_F, tau ||gamma||_F); nullopt when both vanish.
std::optional<double> default_time_step(const EffectiveHamiltonian& eff);

/// RK4 integration of the trace-preserving nonlinear equation for the
/// normalized state. `dt` defaults to default_time_step(eff).
DensityMatrix integrate_nonlinear(const EffectiveHamiltonian& eff, const DensityMatrix& rho0, double t,
                                  std::optional<double> dt = std::nullopt);

/// RK4 integration of the norm-preserving nonlinear Schroedinger equation.
CVector integrate_pure_nonlinear(const EffectiveHamiltonian& eff, const CVector& psi0, double t,
                                 std::optional<double> dt = std::nullopt);

/// A normalized state on a uniform time grid, propagated step by step with
/// renormalization so that strongly amplifying generators cannot overflow.
struct GridSample {
  double t = 0;
  double log_p = 0;  // log of the unnormalized trace
  CMatrix rho;       // normalized
};

std::vector<GridSample> evolve_on_grid(const CMatrix& h_eff, const DensityMatrix& rho0, double t_max,
                                       int n_samples);

}  // namespace zenon
