#pragma once

#include <array>
#include <string>
#include <vector>

#include "zenon/entanglement.hpp"
#include "zenon/io.hpp"
#include "zenon/spin_models.hpp"

namespace zenon {

/// Symmetric model started in |01>, sampled on gamma t in [0, axis_max]
/// with gamma = 2 gamma_xy.
struct Figure4Data {
  std::vector<double> axis;  // gamma t
  std::vector<double> pop10, pop01;
  std::vector<Complex> coh;  // <01|rho|10>
  DensityMatrix final_state = DensityMatrix::maximally_mixed(4);
};

Figure4Data figure4_series(const SymmetricParams& p, double tau, double axis_max, int n_samples);

/// Anisotropic model started in |00>, sampled on mu_x t in [0, axis_max]
/// where mu_x is the plus-sector coupling of the derived generator.
struct Figure5Data {
  std::vector<double> axis;  // mu_x t
  std::vector<double> pop11;
  std::vector<Complex> coh;  // <00|rho|11>
  DensityMatrix final_state = DensityMatrix::maximally_mixed(4);
  TwoLevelBlockParams plus;
};

Figure5Data figure5_series(const AnisotropicParams& p, double tau, double axis_max, int n_samples);

/// Plus-sector parameter ratios of the three population panels, with mu_x = 1:
/// (a) mu_x = nu_x = 10 mu_z = 10 nu_z, (b) mu_x = 10 nu_x = 100 mu_z = 100 nu_z,
/// (c) 10 mu_x = nu_x = 100 mu_z = 100 nu_z.
std::array<TwoLevelBlockParams, 3> figure5_regimes();

CsvTable figure4a_table(const Figure4Data& d);  // gt_axis,pop10,pop01
CsvTable figure4b_table(const Figure4Data& d);  // gt_axis,re_coh,im_coh
CsvTable figure5_table(const Figure5Data& d);   // mxt_axis,pop11,re_coh,im_coh

}  // namespace zenon
