#include "zenon/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zenon/effective.hpp"
#include "zenon/protocol.hpp"

namespace zenon {

std::vector<double> bohr_frequencies(const CMatrix& a) {
  const auto eig = hermitian_eig(a);
  std::vector<double> out;
  const Eigen::Index n = eig.eigenvalues.size();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) out.push_back(std::abs(eig.eigenvalues(j) - eig.eigenvalues(i)));
  std::sort(out.begin(), out.end());
  return out;
}

CMatrix anti_hermitian_generator(const CMatrix& h_eff) {
  if (h_eff.rows() != h_eff.cols()) throw Error(ErrorCode::BadDimension, "H_eff must be square");
  return hermitian_part(CMatrix(kI * (h_eff - h_eff.adjoint())));
}

double decay_spread(const CMatrix& h_eff) {
  const auto freqs = bohr_frequencies(anti_hermitian_generator(h_eff));
  return freqs.empty() ? 0.0 : freqs.back();
}

double choose_tau(double f) {
  if (!(f > 0)) {
    throw Error(ErrorCode::ZeroAntiHermitianPart,
                "anti-Hermitian part has no spread (f = 0); supply tau explicitly");
  }
  return 0.01 / f;
}

DilationResult dilate(const CMatrix& h_eff, double tau) {
  if (!(tau > 0)) throw Error(ErrorCode::InvalidArgument, "dilation tau must be positive");
  const Eigen::Index d = h_eff.rows();
  const CMatrix generator = anti_hermitian_generator(h_eff);
  const auto eig = hermitian_eig(generator);

  DilationResult out;
  out.tau = tau;
  out.f = eig.eigenvalues(d - 1) - eig.eigenvalues(0);
  out.m = eig.eigenvalues(0) / tau;
  out.c = std::max(0.0, -out.m);

  const CMatrix decay = out.c * identity(d) + generator / tau;
  const CMatrix coupling = psd_sqrt(decay);

  CMatrix proj0 = CMatrix::Zero(2, 2);
  proj0(0, 0) = 1;
  CMatrix flip(2, 2);
  flip << 0, 1, 1, 0;
  out.h = kron(hermitian_part(h_eff), proj0) + kron(coupling, flip);
  out.h = hermitian_part(out.h);
  return out;
}

DilationResult dilate(const CMatrix& h_eff) {
  const double f = decay_spread(h_eff);
  const double scale = std::max(1.0, h_eff.norm());
  if (f <= 1e-12 * scale) return dilate(h_eff, choose_tau(0.0));
  return dilate(h_eff, choose_tau(f));
}

namespace {

double relative(const CMatrix& got, const CMatrix& want) {
  return (got - want).norm() / std::max(1.0, want.norm());
}

}  // namespace

RoundTripReport roundtrip_check(const CMatrix& h_eff, double tau) {
  const DilationResult dil = dilate(h_eff, tau);
  const EffectiveHamiltonian eff = derive_effective(dil.h, AncillaSpec{}, tau);

  const Eigen::Index d = h_eff.rows();
  const CMatrix expected_gamma = dil.c * identity(d) + anti_hermitian_generator(h_eff) / tau;

  RoundTripReport rep;
  rep.tau = tau;
  rep.c = dil.c;
  rep.hermitian_residual = relative(eff.h0, hermitian_part(h_eff));
  rep.gamma_residual = relative(eff.gamma, expected_gamma);
  const CMatrix recovered = eff.matrix();
  rep.traceless_residual = relative(remove_identity_shift(recovered), remove_identity_shift(h_eff));
  rep.recovered_shift = ((recovered - h_eff).trace() / static_cast<double>(d)).imag();

  const double worst = std::max({rep.hermitian_residual, rep.gamma_residual, rep.traceless_residual});
  if (!(worst < kRoundTripTolerance)) {
    throw Error(ErrorCode::RoundTripFailure, "round-trip residual " + std::to_string(worst));
  }
  return rep;
}

double characteristic_period(const CMatrix& h_eff) {
  const double rate = std::max(spectral_spread(hermitian_part(h_eff)), decay_spread(h_eff));
  if (!(rate > 0)) throw Error(ErrorCode::InvalidArgument, "h_eff is a multiple of the identity");
  return 2 * std::numbers::pi / rate;
}

double validate_stroboscopic(const CMatrix& h_eff, double tau, double t, const DensityMatrix& rho0) {
  const DilationResult dil = dilate(h_eff, tau);
  const double gamma_tau = std::sqrt(dil.f * tau);
  if (!(gamma_tau < 0.15)) {
    throw Error(ErrorCode::OutsideStroboscopicRegime, "sqrt(f tau) = " + std::to_string(gamma_tau) + " is not < 0.15");
  }
  const int n = static_cast<int>(std::lround(t / tau));
  const ProtocolConfig cfg{dil.h, AncillaSpec{}, tau, n};
  const DensityMatrix exact = normalize(simulate_conditional(cfg, rho0));
  const DensityMatrix direct = normalize(evolve_conditional(h_eff, rho0, n * tau));
  return (exact.matrix() - direct.matrix()).norm();
}

}  // namespace zenon
