#pragma once

#include <utility>

#include "zenon/dynamics.hpp"
#include "zenon/linalg.hpp"
#include "zenon/spin_models.hpp"

namespace zenon {

/// Parameters of the {|01>,|10>} block of the symmetric model: the block
/// generator is (gamma - i g) sigma_x up to an identity term.
struct EffectiveBlockParams {
  double gamma = 0;  // 2 gamma_xy
  double g = 0;      // 2 tau g_xy^2

  static EffectiveBlockParams from_symmetric(const SymmetricParams& p, double tau);
};

/// Normalized population transferred |01> -> |10>.
double transition_probability(const EffectiveBlockParams& p, double t);
/// Normalized population remaining in |01>.
double survival_probability(const EffectiveBlockParams& p, double t);
/// <01| rho(t) |10> of the normalized state started in |01>.
Complex coherence(const EffectiveBlockParams& p, double t);

enum class Sector { Plus, Minus };

/// Fictitious two-level generator Omega sigma_z + omega sigma_x with
/// Omega = mu_z + i nu_z and omega = mu_x + i nu_x. The plus sector acts on
/// {|00>,|11>}, the minus sector on {|01>,|10>}.
struct TwoLevelBlockParams {
  double mu_z = 0, nu_z = 0, mu_x = 0, nu_x = 0;
  Sector sector = Sector::Plus;

  Complex big_omega() const { return {mu_z, nu_z}; }
  Complex small_omega() const { return {mu_x, nu_x}; }
  CMatrix generator() const;
};

struct BlockPair {
  TwoLevelBlockParams plus;
  TwoLevelBlockParams minus{0, 0, 0, 0, Sector::Minus};
};

/// Splits a 4x4 generator commuting with sigma_1^z sigma_2^z into its two
/// invariant blocks, dropping the identity component of each block.
BlockPair block_decompose(const CMatrix& h_eff);

/// exp(-i (Omega sigma_z + omega sigma_x) t) in closed form.
CMatrix block_propagator(const TwoLevelBlockParams& b, double t);

/// block_propagator(b, t) * exp(-log_scale); log_scale >= 0 is chosen so that
/// no entry overflows for strongly amplifying blocks.
struct ScaledPropagator {
  CMatrix u;
  double log_scale = 0;
};
ScaledPropagator block_propagator_scaled(const TwoLevelBlockParams& b, double t);

/// Embeds the plus block on {|00>,|11>} and the minus block on {|01>,|10>}.
CMatrix assemble_blocks(const CMatrix& plus, const CMatrix& minus);

/// Physical couplings whose derived plus-sector block equals `target`, in the
/// gauge gamma_y = beta_y = beta_z = gamma_z = 0.
AnisotropicParams anisotropic_params_for_plus_block(const TwoLevelBlockParams& target, double tau);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

CVector bell_state(BellState which);
double bell_fidelity(const DensityMatrix& rho, BellState which);

}  // namespace zenon
