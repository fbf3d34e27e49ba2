#include "zenon/effective.hpp"

#include <bit>
#include <string>

namespace zenon {

namespace {

void check_composite(const CMatrix& h, const AncillaSpec& spec) {
  if (h.rows() != h.cols() || h.rows() < 2 || h.rows() % 2 != 0) {
    throw Error(ErrorCode::BadDimension, "composite Hamiltonian must be square with even dimension");
  }
  if (spec.measured_state != 0 && spec.measured_state != 1) {
    throw Error(ErrorCode::InvalidArgument, "measured_state must be 0 or 1");
  }
}

}  // namespace

void EffectiveHamiltonian::validate() const {
  if (!(tau > 0)) throw Error(ErrorCode::InvalidArgument, "effective Hamiltonian needs tau > 0");
  if (h0.rows() != h0.cols() || gamma.rows() != h0.rows() || gamma.cols() != h0.cols()) {
    throw Error(ErrorCode::BadDimension, "h0 and gamma must be square and of equal dimension");
  }
  if (!is_hermitian(h0)) throw Error(ErrorCode::NotHermitian, "h0 is not Hermitian");
  const auto eig = hermitian_eig(gamma);
  if (eig.eigenvalues(0) < -1e-10 * gamma.norm()) throw Error(ErrorCode::NotPSD, "gamma is not PSD");
}

CMatrix to_canonical_order(const CMatrix& h, const AncillaSpec& spec) {
  check_composite(h, spec);
  if (!spec.site) return h;
  const auto dim = static_cast<unsigned long>(h.rows());
  if (!std::has_single_bit(dim)) {
    throw Error(ErrorCode::BadDimension, "an explicit ancilla site requires a qubit register (power-of-two dim)");
  }
  const int n = std::countr_zero(dim);
  const int site = *spec.site;
  if (site < 1 || site > n) {
    throw Error(ErrorCode::SiteOutOfRange, "ancilla site " + std::to_string(site) + " outside 1.." + std::to_string(n));
  }
  if (site == n) return h;

  // Bit of `site` (1-based, most significant first) moves to the least significant position.
  const int shift = n - site;
  const auto permute = [&](Eigen::Index idx) {
    const Eigen::Index high = idx >> (shift + 1);
    const Eigen::Index bit = (idx >> shift) & 1;
    const Eigen::Index low = idx & ((Eigen::Index(1) << shift) - 1);
    return (((high << shift) | low) << 1) | bit;
  };
  CMatrix out(h.rows(), h.cols());
  for (Eigen::Index r = 0; r < h.rows(); ++r)
    for (Eigen::Index c = 0; c < h.cols(); ++c) out(permute(r), permute(c)) = h(r, c);
  return out;
}

CMatrix ancilla_block(const CMatrix& x, int a, int b) {
  const Eigen::Index ds = x.rows() / 2;
  CMatrix out(ds, ds);
  for (Eigen::Index r = 0; r < ds; ++r)
    for (Eigen::Index c = 0; c < ds; ++c) out(r, c) = x(2 * r + a, 2 * c + b);
  return out;
}

CMatrix kraus_step(const CMatrix& h, const AncillaSpec& spec, double tau) {
  if (!(tau > 0)) throw Error(ErrorCode::InvalidArgument, "kraus_step needs tau > 0");
  const CMatrix hc = to_canonical_order(h, spec);
  const CMatrix u = expm(CMatrix(-kI * tau * hc));
  return ancilla_block(u, spec.measured_state, spec.measured_state);
}

EffectiveHamiltonian derive_effective(const CMatrix& h, const AncillaSpec& spec, double tau) {
  if (!(tau > 0)) throw Error(ErrorCode::InvalidArgument, "derive_effective needs tau > 0");
  const CMatrix hc = to_canonical_order(h, spec);
  if (!is_hermitian(hc)) throw Error(ErrorCode::NotHermitian, "composite Hamiltonian is not Hermitian");
  const int m = spec.measured_state;
  const int other = 1 - m;

  CMatrix h0 = hermitian_part(ancilla_block(hc, m, m));
  const CMatrix exchange = ancilla_block(hc, m, other);
  CMatrix gamma = hermitian_part(CMatrix(exchange * exchange.adjoint()));

  const CMatrix h2 = hc * hc;
  const CMatrix gamma_direct = ancilla_block(h2, m, m) - h0 * h0;
  const double scale = std::max(1.0, hc.squaredNorm());
  const double mismatch = (gamma_direct - gamma).norm();
  if (mismatch > 1e-12 * scale) {
    throw Error(ErrorCode::ConvergenceFailure,
                "decay operator forms disagree by " + std::to_string(mismatch));
  }

  EffectiveHamiltonian eff{std::move(h0), std::move(gamma), tau};
  const auto eig = hermitian_eig(eff.gamma);
  if (eig.eigenvalues(0) < -1e-10 * eff.gamma.norm()) {
    throw Error(ErrorCode::NotPSD, "derived decay operator is not PSD");
  }
  return eff;
}

CMatrix remove_identity_shift(const CMatrix& a) {
  const Complex shift = a.trace() / static_cast<double>(a.rows());
  return a - shift * identity(a.rows());
}

}  // namespace zenon
