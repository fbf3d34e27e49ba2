#include "zenon/spin_models.hpp"

#include <string>

namespace zenon {

AnisotropicParams to_anisotropic(const SymmetricParams& p) {
  return {p.gamma_xy, p.gamma_xy, p.gamma_z, p.g_xy, p.g_xy, p.g_z, p.g_xy, p.g_xy, p.g_z};
}

CMatrix pauli(Axis axis) {
  CMatrix s(2, 2);
  switch (axis) {
    case Axis::X: s << 0, 1, 1, 0; break;
    case Axis::Y: s << 0, -kI, kI, 0; break;
    case Axis::Z: s << 1, 0, 0, -1; break;
  }
  return s;
}

CMatrix pauli(Axis axis, int site, int n_qubits) {
  if (n_qubits < 1 || site < 1 || site > n_qubits) {
    throw Error(ErrorCode::SiteOutOfRange,
                "site " + std::to_string(site) + " outside 1.." + std::to_string(n_qubits));
  }
  CMatrix out = CMatrix::Identity(1, 1);
  for (int k = 1; k <= n_qubits; ++k) out = kron(out, k == site ? pauli(axis) : identity(2));
  return out;
}

CMatrix pauli_pair(Axis axis, int site_i, int site_j, int n_qubits) {
  return pauli(axis, site_i, n_qubits) * pauli(axis, site_j, n_qubits);
}

CMatrix swap_operator(int site_i, int site_j, int n_qubits) {
  // SWAP = (I + XX + YY + ZZ) / 2
  const int dim = 1 << n_qubits;
  CMatrix s = identity(dim);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) s += pauli_pair(a, site_i, site_j, n_qubits);
  return 0.5 * s;
}

CMatrix build_anisotropic(const AnisotropicParams& p) {
  constexpr int n = 3;
  return p.gamma_x * pauli_pair(Axis::X, 1, 2, n) + p.gamma_y * pauli_pair(Axis::Y, 1, 2, n) +
         p.gamma_z * pauli_pair(Axis::Z, 1, 2, n) + p.alpha_x * pauli_pair(Axis::X, 1, 3, n) +
         p.alpha_y * pauli_pair(Axis::Y, 1, 3, n) + p.alpha_z * pauli_pair(Axis::Z, 1, 3, n) +
         p.beta_x * pauli_pair(Axis::X, 2, 3, n) + p.beta_y * pauli_pair(Axis::Y, 2, 3, n) +
         p.beta_z * pauli_pair(Axis::Z, 2, 3, n);
}

CMatrix build_symmetric(const SymmetricParams& p) {
  constexpr int n = 3;
  const auto xy = [](int i, int j) -> CMatrix { return pauli_pair(Axis::X, i, j, n) + pauli_pair(Axis::Y, i, j, n); };
  return p.gamma_xy * xy(1, 2) + p.gamma_z * pauli_pair(Axis::Z, 1, 2, n) + p.g_xy * xy(1, 3) +
         p.g_z * pauli_pair(Axis::Z, 1, 3, n) + p.g_xy * xy(2, 3) + p.g_z * pauli_pair(Axis::Z, 2, 3, n);
}

Eigen::Index basis_index(std::string_view bits) {
  if (bits.empty() || bits.size() > 20) throw Error(ErrorCode::ParseError, "basis label must have 1..20 bits");
  Eigen::Index idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorCode::ParseError, "basis label '" + std::string(bits) + "' is not binary");
    idx = 2 * idx + (c - '0');
  }
  return idx;
}

CVector basis_state(std::string_view bits) {
  CVector v = CVector::Zero(Eigen::Index(1) << bits.size());
  v(basis_index(bits)) = 1.0;
  return v;
}

}  // namespace zenon
