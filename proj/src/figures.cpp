#include "zenon/figures.hpp"

#include "zenon/effective.hpp"

namespace zenon {

namespace {

// The identity component only rescales the conditional trace, so the
// normalized series is computed from the traceless generator.
std::vector<GridSample> normalized_series(const CMatrix& composite, double tau, const CVector& psi0, double t_max,
                                          int n_samples) {
  const EffectiveHamiltonian eff = derive_effective(composite, AncillaSpec{}, tau);
  return evolve_on_grid(remove_identity_shift(eff.matrix()), DensityMatrix::pure(psi0), t_max, n_samples);
}

}  // namespace

Figure4Data figure4_series(const SymmetricParams& p, double tau, double axis_max, int n_samples) {
  const double gamma = 2 * p.gamma_xy;
  if (gamma == 0) throw Error(ErrorCode::InvalidArgument, "figure 4 axis needs gamma_xy != 0");
  const double t_max = axis_max / std::abs(gamma);
  const auto samples = normalized_series(build_symmetric(p), tau, basis_state("01"), t_max, n_samples);

  Figure4Data d;
  for (const auto& s : samples) {
    d.axis.push_back(std::abs(gamma) * s.t);
    d.pop01.push_back(s.rho(1, 1).real());
    d.pop10.push_back(s.rho(2, 2).real());
    d.coh.push_back(s.rho(1, 2));
  }
  d.final_state = DensityMatrix(samples.back().rho, 1e-8);
  return d;
}

Figure5Data figure5_series(const AnisotropicParams& p, double tau, double axis_max, int n_samples) {
  const CMatrix composite = build_anisotropic(p);
  const EffectiveHamiltonian eff = derive_effective(composite, AncillaSpec{}, tau);
  const BlockPair blocks = block_decompose(eff.matrix());
  const double mu_x = blocks.plus.mu_x;
  if (mu_x == 0) throw Error(ErrorCode::InvalidArgument, "figure 5 axis needs a nonzero plus-sector mu_x");
  const double t_max = axis_max / std::abs(mu_x);
  const auto samples = evolve_on_grid(remove_identity_shift(eff.matrix()), DensityMatrix::pure(basis_state("00")),
                                      t_max, n_samples);
  Figure5Data d;
  d.plus = blocks.plus;
  for (const auto& s : samples) {
    d.axis.push_back(std::abs(mu_x) * s.t);
    d.pop11.push_back(s.rho(3, 3).real());
    d.coh.push_back(s.rho(0, 3));
  }
  d.final_state = DensityMatrix(samples.back().rho, 1e-8);
  return d;
}

std::array<TwoLevelBlockParams, 3> figure5_regimes() {
  return {TwoLevelBlockParams{0.1, 0.1, 1.0, 1.0, Sector::Plus},
          TwoLevelBlockParams{0.01, 0.01, 1.0, 0.1, Sector::Plus},
          TwoLevelBlockParams{0.1, 0.1, 1.0, 10.0, Sector::Plus}};
}

CsvTable figure4a_table(const Figure4Data& d) {
  CsvTable t({"gt_axis", "pop10", "pop01"});
  for (std::size_t k = 0; k < d.axis.size(); ++k) t.add_row({d.axis[k], d.pop10[k], d.pop01[k]});
  return t;
}

CsvTable figure4b_table(const Figure4Data& d) {
  CsvTable t({"gt_axis", "re_coh", "im_coh"});
  for (std::size_t k = 0; k < d.axis.size(); ++k) t.add_row({d.axis[k], d.coh[k].real(), d.coh[k].imag()});
  return t;
}

CsvTable figure5_table(const Figure5Data& d) {
  CsvTable t({"mxt_axis", "pop11", "re_coh", "im_coh"});
  for (std::size_t k = 0; k < d.axis.size(); ++k) t.add_row({d.axis[k], d.pop11[k], d.coh[k].real(), d.coh[k].imag()});
  return t;
}

}  // namespace zenon
