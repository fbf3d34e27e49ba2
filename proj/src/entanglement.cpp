#include "zenon/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace zenon {

EffectiveBlockParams EffectiveBlockParams::from_symmetric(const SymmetricParams& p, double tau) {
  return {2 * p.gamma_xy, 2 * tau * p.g_xy * p.g_xy};
}

namespace {

// 1 / cosh(2x), evaluated without overflow for large x.
double sech2(double x) {
  const double ax = std::abs(2 * x);
  if (ax > 40) {
    const double e = std::exp(-ax);
    return 2 * e / (1 + e * e);
  }
  return 1 / std::cosh(ax);
}

}  // namespace

double transition_probability(const EffectiveBlockParams& p, double t) {
  const double gt = p.g * t;
  const double s = std::sin(p.gamma * t);
  if (std::abs(gt) > 20) {
    // sinh^2(x) = (cosh 2x - 1) / 2
    return 0.5 + (s * s - 0.5) * sech2(gt);
  }
  const double sh = std::sinh(gt);
  return (sh * sh + s * s) / std::cosh(2 * gt);
}

double survival_probability(const EffectiveBlockParams& p, double t) {
  const double gt = p.g * t;
  const double s = std::sin(p.gamma * t);
  const double c = std::cos(p.gamma * t);
  if (std::abs(gt) > 20) {
    return 0.5 + (c * c - 0.5) * sech2(gt);
  }
  const double sh = std::sinh(gt), ch = std::cosh(gt);
  return (s * s * sh * sh + c * c * ch * ch) / (ch * ch + sh * sh);
}

Complex coherence(const EffectiveBlockParams& p, double t) {
  const double gt = p.g * t;
  const double tanh2 = std::tanh(2 * gt);
  const double ratio = std::sin(2 * p.gamma * t) * sech2(gt);
  return -0.5 * Complex(tanh2, -ratio);
}

CMatrix TwoLevelBlockParams::generator() const {
  CMatrix h(2, 2);
  const Complex om = big_omega(), w = small_omega();
  h << om, w, w, -om;
  return h;
}

BlockPair block_decompose(const CMatrix& h) {
  if (h.rows() != 4 || h.cols() != 4) throw Error(ErrorCode::BadDimension, "block_decompose needs a 4x4 matrix");
  const double tol = 1e-10 * std::max(1.0, h.norm());
  constexpr int plus_idx[2] = {0, 3};
  constexpr int minus_idx[2] = {1, 2};
  double leak = 0;
  for (int i : plus_idx)
    for (int j : minus_idx) leak = std::max({leak, std::abs(h(i, j)), std::abs(h(j, i))});
  if (leak > tol) throw Error(ErrorCode::NotBlockDiagonal, "generator couples the sigma_z sigma_z sectors");

  const auto project = [&](const int (&idx)[2], Sector sector) {
    const Complex om = (h(idx[0], idx[0]) - h(idx[1], idx[1])) / 2.0;
    const Complex w = (h(idx[0], idx[1]) + h(idx[1], idx[0])) / 2.0;
    return TwoLevelBlockParams{om.real(), om.imag(), w.real(), w.imag(), sector};
  };
  return {project(plus_idx, Sector::Plus), project(minus_idx, Sector::Minus)};
}

ScaledPropagator block_propagator_scaled(const TwoLevelBlockParams& b, double t) {
  const Complex om = b.big_omega(), w = b.small_omega();
  const Complex nu = std::sqrt(om * om + w * w);
  const Complex z = nu * t;

  Complex cos_part, sinc_part;  // cos(nu t), sin(nu t) / nu
  double log_scale = 0;
  if (std::abs(z) < 1e-4) {
    const Complex z2 = z * z;
    cos_part = 1.0 - z2 / 2.0 + z2 * z2 / 24.0;
    sinc_part = t * (1.0 - z2 / 6.0 + z2 * z2 / 120.0);
  } else {
    log_scale = std::abs(z.imag());
    const Complex ep = std::exp(kI * z - log_scale);
    const Complex em = std::exp(-kI * z - log_scale);
    cos_part = (ep + em) / 2.0;
    sinc_part = (ep - em) / (2.0 * kI) / nu;
  }
  CMatrix u(2, 2);
  u << cos_part - kI * om * sinc_part, -kI * w * sinc_part, -kI * w * sinc_part, cos_part + kI * om * sinc_part;
  return {u, log_scale};
}

CMatrix block_propagator(const TwoLevelBlockParams& b, double t) {
  const auto scaled = block_propagator_scaled(b, t);
  return scaled.u * std::exp(scaled.log_scale);
}

CMatrix assemble_blocks(const CMatrix& plus, const CMatrix& minus) {
  CMatrix out = CMatrix::Zero(4, 4);
  constexpr int p[2] = {0, 3};
  constexpr int m[2] = {1, 2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out(p[i], p[j]) = plus(i, j);
      out(m[i], m[j]) = minus(i, j);
    }
  return out;
}

AnisotropicParams anisotropic_params_for_plus_block(const TwoLevelBlockParams& target, double tau) {
  if (!(tau > 0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  // mu_x = gamma_x - gamma_y, nu_x = -tau (alpha_x beta_x - alpha_y beta_y),
  // mu_z = alpha_z + beta_z,  nu_z = tau (alpha_x alpha_y + beta_x beta_y).
  const double a_sum = target.nu_z / tau;
  const double b_diff = -target.nu_x / tau;
  const double ax = a_sum != 0 ? std::sqrt(std::abs(a_sum)) : 1.0;
  AnisotropicParams p;
  p.gamma_x = target.mu_x;
  p.alpha_z = target.mu_z;
  p.alpha_x = ax;
  p.alpha_y = a_sum / ax;
  p.beta_x = b_diff / ax;
  return p;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorCode::BadDimension, "concurrence needs a two-qubit state");
  const CMatrix yy = kron(pauli(Axis::Y), pauli(Axis::Y));
  const CMatrix flipped = yy * rho.matrix().conjugate() * yy;
  const CMatrix root = psd_sqrt(rho.matrix(), 1e-8);
  const CMatrix r = hermitian_part(CMatrix(root * flipped * root));
  const auto eig = hermitian_eig(r);
  // eigenvalues ascending; lambda_i = sqrt of the spin-flipped spectrum
  double l[4];
  for (int i = 0; i < 4; ++i) l[i] = std::sqrt(std::max(0.0, eig.eigenvalues(3 - i)));
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

CVector bell_state(BellState which) {
  CVector v = CVector::Zero(4);
  const double r = 1 / std::sqrt(2.0);
  switch (which) {
    case BellState::PhiPlus: v(0) = r; v(3) = r; break;
    case BellState::PhiMinus: v(0) = r; v(3) = -r; break;
    case BellState::PsiPlus: v(1) = r; v(2) = r; break;
    case BellState::PsiMinus: v(1) = r; v(2) = -r; break;
  }
  return v;
}

double bell_fidelity(const DensityMatrix& rho, BellState which) {
  if (rho.dim() != 4) throw Error(ErrorCode::BadDimension, "Bell fidelity needs a two-qubit state");
  const CVector b = bell_state(which);
  return b.dot(rho.matrix() * b).real();
}

}  // namespace zenon
