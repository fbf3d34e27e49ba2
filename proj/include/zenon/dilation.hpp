#pragma once

#include <vector>

#include "zenon/dynamics.hpp"
#include "zenon/linalg.hpp"

namespace zenon {

/// Hermitian system+ancilla Hamiltonian whose post-selected stroboscopic
/// dynamics reproduces a given non-Hermitian generator.
struct DilationResult {
  CMatrix h;       // on S (x) A, ancilla minor, |0_A> = index 0
  double tau = 0;  // measurement interval
  double c = 0;    // shift making the decay operator PSD
  double f = 0;    // max Bohr frequency of i (H_eff - H_eff^dag)
  double m = 0;    // min eigenvalue of (i/tau)(H_eff - H_eff^dag)

  /// f * tau <= 0.011, i.e. the recommended tau = 0.01/f up to 10% slack.
  bool in_prescribed_regime() const { return f * tau <= 0.011; }
};

/// All pairwise eigenvalue gaps |l_i - l_j|, i < j, ascending.
std::vector<double> bohr_frequencies(const CMatrix& a);

/// i (H_eff - H_eff^dag), symmetrized.
CMatrix anti_hermitian_generator(const CMatrix& h_eff);

/// Max Bohr frequency of i (H_eff - H_eff^dag).
double decay_spread(const CMatrix& h_eff);

/// tau = 0.01 / f. Throws ZeroAntiHermitianPart for f <= 0.
double choose_tau(double f);

DilationResult dilate(const CMatrix& h_eff, double tau);
/// Uses tau = choose_tau(f); fails for generators whose anti-Hermitian part is
/// zero or a pure multiple of the identity.
DilationResult dilate(const CMatrix& h_eff);

struct RoundTripReport {
  double hermitian_residual = 0;  // ||h0 - (H+H^dag)/2|| / max(1, ||(H+H^dag)/2||)
  double gamma_residual = 0;      // ||gamma - (cI + (i/tau)(H-H^dag))|| / max(1, ||.||)
  double traceless_residual = 0;  // traceless parts of recovered vs input H_eff
  double recovered_shift = 0;     // recovered H_eff = input + i * recovered_shift * I
  double tau = 0;
  double c = 0;
};

inline constexpr double kRoundTripTolerance = 1e-10;

/// Dilates, re-derives the effective Hamiltonian and compares. Throws
/// RoundTripFailure if any residual exceeds kRoundTripTolerance.
RoundTripReport roundtrip_check(const CMatrix& h_eff, double tau);

/// 2 pi / max(spread of the Hermitian part, f): the shortest time scale on
/// which either the coherent or the decaying part of h_eff acts.
double characteristic_period(const CMatrix& h_eff);

/// Runs the measurement protocol on the dilation for round(t/tau) steps and
/// returns the Frobenius distance to the normalized state generated directly
/// by h_eff over the same n*tau. Requires sqrt(f tau) < 0.15.
double validate_stroboscopic(const CMatrix& h_eff, double tau, double t, const DensityMatrix& rho0);

}  // namespace zenon
