#pragma once

#include <string_view>

#include "zenon/linalg.hpp"

namespace zenon {

enum class Axis { X, Y, Z };

/// Couplings of the reflection-symmetric three-spin model (spin 3 is the ancilla).
struct SymmetricParams {
  double gamma_xy = 0;
  double gamma_z = 0;
  double g_xy = 0;
  double g_z = 0;
};

/// Fully anisotropic two-body couplings: gamma between spins 1-2, alpha between
/// 1-3 and beta between 2-3.
struct AnisotropicParams {
  double gamma_x = 0, gamma_y = 0, gamma_z = 0;
  double alpha_x = 0, alpha_y = 0, alpha_z = 0;
  double beta_x = 0, beta_y = 0, beta_z = 0;
};

/// The symmetric model as a special case of the anisotropic one.
AnisotropicParams to_anisotropic(const SymmetricParams& p);

/// Single-qubit Pauli matrix with sigma_z|0> = +|0>.
CMatrix pauli(Axis axis);

/// sigma_axis on `site` (1-based, site 1 is the most significant factor) of an
/// n-qubit register.
CMatrix pauli(Axis axis, int site, int n_qubits);

/// Product sigma_a^site_i sigma_a^site_j on n qubits.
CMatrix pauli_pair(Axis axis, int site_i, int site_j, int n_qubits);

/// Permutation exchanging two qubits of an n-qubit register.
CMatrix swap_operator(int site_i, int site_j, int n_qubits);

CMatrix build_symmetric(const SymmetricParams& p);
CMatrix build_anisotropic(const AnisotropicParams& p);

/// Computational basis vector from a bit string such as "01" (qubit 1 first).
CVector basis_state(std::string_view bits);

/// Index of a bit string in the computational basis.
Eigen::Index basis_index(std::string_view bits);

}  // namespace zenon
