#pragma once

#include <optional>

#include "zenon/linalg.hpp"

namespace zenon {

/// Which qubit of the composite is the measured ancilla, and which outcome is
/// post-selected. An empty `site` means the ancilla is already the least
/// significant tensor factor (any even composite dimension is accepted then).
struct AncillaSpec {
  std::optional<int> site;
  int measured_state = 0;
};

/// H_eff = h0 - i (tau/2) gamma, kept in split form because the nonlinear
/// evolution and the success-probability rate need gamma on its own.
struct EffectiveHamiltonian {
  CMatrix h0;
  CMatrix gamma;
  double tau = 0;

  CMatrix matrix() const { return h0 - kI * (tau / 2) * gamma; }
  Eigen::Index dim() const { return h0.rows(); }

  /// Throws unless h0 is Hermitian, gamma is Hermitian PSD and tau > 0.
  void validate() const;
};

/// Reorders a composite Hamiltonian so the ancilla becomes the minor factor.
CMatrix to_canonical_order(const CMatrix& h, const AncillaSpec& spec);

/// <a|X|b> for the ancilla minor factor of a canonical-order composite matrix.
CMatrix ancilla_block(const CMatrix& x, int a, int b);

/// K(tau) = <m|exp(-i H tau)|m>.
CMatrix kraus_step(const CMatrix& h, const AncillaSpec& spec, double tau);

/// h0 = <m|H|m>, gamma = <m|H|m'><m'|H|m>; also cross-checked against
/// <m|H^2|m> - h0^2.
EffectiveHamiltonian derive_effective(const CMatrix& h, const AncillaSpec& spec, double tau);

/// A - (tr A / dim) I.
CMatrix remove_identity_shift(const CMatrix& a);

}  // namespace zenon
