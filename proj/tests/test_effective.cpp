#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zenon/effective.hpp"
#include "zenon/spin_models.hpp"

using namespace zenon;
using zenon::testing::dist;
using zenon::testing::Sampler;

namespace {

// Hand-written 4x4 matrix in the basis |00>,|01>,|10>,|11>.
CMatrix symmetric_heff_shifted(const SymmetricParams& p, double tau) {
  const Complex d = 2.0 * kI * tau * p.g_xy * p.g_xy;
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = p.gamma_z + 2 * p.g_z + d;
  m(1, 1) = m(2, 2) = -p.gamma_z;
  m(1, 2) = m(2, 1) = 2 * p.gamma_xy - d;
  m(3, 3) = p.gamma_z - 2 * p.g_z - d;
  return m;
}

CMatrix two_site(Axis a, Axis b) { return pauli(a, 1, 2) * pauli(b, 2, 2); }

}  // namespace

TEST_CASE("kraus_step limits") {
  const AncillaSpec anc;
  CHECK(dist(kraus_step(CMatrix::Zero(8, 8), anc, 0.1), identity(4)) == 0);

  Sampler s(21);
  const CMatrix hs = s.hermitian(4);
  const CMatrix k = kraus_step(kron(hs, identity(2)), anc, 0.3);
  CHECK(dist(k, expm(CMatrix(-kI * 0.3 * hs))) < 1e-12);
  CHECK(dist(k.adjoint() * k, identity(4)) < 1e-12);

  CHECK_THROWS_AS(kraus_step(CMatrix::Zero(3, 3), anc, 0.1), Error);
  CHECK_THROWS_AS(kraus_step(CMatrix::Zero(4, 4), anc, 0.0), Error);
}

TEST_CASE("kraus_step is a contraction") {
  Sampler s(22);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix k = kraus_step(s.hermitian(8), AncillaSpec{}, s.uniform(0.01, 3.0));
    const double top = hermitian_eig(CMatrix(k.adjoint() * k)).eigenvalues(3);
    CHECK(top <= 1 + 1e-10);
  }
}

TEST_CASE("kraus_step second-order expansion for the symmetric model") {
  const SymmetricParams p{0.7, 0.3, 2.0, 0.4};
  const double tau = 0.01 / p.g_xy;
  const CMatrix h = build_symmetric(p);
  const auto eff = derive_effective(h, AncillaSpec{}, tau);
  const CMatrix approx = expm(CMatrix(-kI * tau * eff.h0 - (tau * tau / 2) * eff.gamma));
  CHECK(dist(kraus_step(h, AncillaSpec{}, tau), approx) < 1e-5);
}

TEST_CASE("kraus_step remainder is o(tau^2)") {
  Sampler s(23);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix h = s.hermitian(8);
    const double unit = 1 / h.norm();
    std::vector<double> residual;
    for (double f : {1e-2, 5e-3, 2.5e-3}) {
      const double tau = f * unit;
      const auto eff = derive_effective(h, AncillaSpec{}, tau);
      residual.push_back(dist(kraus_step(h, AncillaSpec{}, tau), expm(CMatrix(-kI * tau * eff.matrix()))) / (tau * tau));
    }
    CHECK(residual[0] / residual[1] >= 1.8);
    CHECK(residual[1] / residual[2] >= 1.8);
  }
}

TEST_CASE("derive_effective without exchange") {
  Sampler s(24);
  const CMatrix hs = s.hermitian(4);
  const auto eff = derive_effective(kron(hs, identity(2)), AncillaSpec{}, 0.1);
  CHECK(eff.gamma.norm() < 1e-14);
  CHECK(dist(eff.h0, hs) < 1e-14);
}

TEST_CASE("derive_effective symmetric model matches the closed form") {
  Sampler s(25);
  for (int trial = 0; trial < 50; ++trial) {
    const SymmetricParams p{s.normal(), s.normal(), s.normal(), s.normal()};
    const double tau = s.uniform(1e-4, 0.1);
    const auto eff = derive_effective(build_symmetric(p), AncillaSpec{}, tau);
    const CMatrix shifted = eff.matrix() + 2.0 * kI * tau * p.g_xy * p.g_xy * identity(4);
    const CMatrix expected = symmetric_heff_shifted(p, tau);
    CHECK((shifted - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(dist(remove_identity_shift(eff.matrix()), remove_identity_shift(expected)) < 1e-12);

    // Gamma = 2 g_xy^2 (2I - Z1 - Z2 + XX + YY)
    const CMatrix gamma = 2 * p.g_xy * p.g_xy *
                          (2 * identity(4) - pauli(Axis::Z, 1, 2) - pauli(Axis::Z, 2, 2) +
                           two_site(Axis::X, Axis::X) + two_site(Axis::Y, Axis::Y));
    CHECK(dist(eff.gamma, gamma) < 1e-12 * std::max(1.0, gamma.norm()));
  }
}

TEST_CASE("derive_effective anisotropic model") {
  Sampler s(26);
  for (int trial = 0; trial < 50; ++trial) {
    const AnisotropicParams p{s.normal(), s.normal(), s.normal(), s.normal(), s.normal(),
                              s.normal(), s.normal(), s.normal(), s.normal()};
    const double tau = s.uniform(1e-4, 0.1);
    const auto eff = derive_effective(build_anisotropic(p), AncillaSpec{}, tau);
    const CMatrix expected = (p.alpha_z + kI * tau * p.alpha_x * p.alpha_y) * pauli(Axis::Z, 1, 2) +
                             (p.beta_z + kI * tau * p.beta_x * p.beta_y) * pauli(Axis::Z, 2, 2) +
                             p.gamma_z * two_site(Axis::Z, Axis::Z) +
                             (p.gamma_x - kI * tau * p.alpha_x * p.beta_x) * two_site(Axis::X, Axis::X) +
                             (p.gamma_y - kI * tau * p.alpha_y * p.beta_y) * two_site(Axis::Y, Axis::Y);
    CHECK(dist(remove_identity_shift(eff.matrix()), expected) < 1e-12);
    CHECK(commutator(eff.matrix(), two_site(Axis::Z, Axis::Z)).norm() < 1e-12);
  }
}

TEST_CASE("gamma is PSD and both forms agree for random composites") {
  Sampler s(27);
  for (int n : {4, 8, 16}) {
    for (int trial = 0; trial < 30; ++trial) {
      const CMatrix h = s.hermitian(n, s.uniform(0.1, 10));
      const auto eff = derive_effective(h, AncillaSpec{}, 0.01);
      CHECK(hermitian_eig(eff.gamma).eigenvalues(0) >= -1e-10 * eff.gamma.norm());
      const CMatrix h0 = ancilla_block(h, 0, 0);
      const CMatrix h2 = ancilla_block(CMatrix(h * h), 0, 0);
      CHECK(dist(eff.gamma, CMatrix(h2 - h0 * h0)) < 1e-12 * std::max(1.0, h.norm() * h.norm()));
    }
  }
}

TEST_CASE("ancilla site permutation") {
  Sampler s(28);
  const CMatrix hs = s.hermitian(4);
  const CMatrix ha = s.hermitian(2);
  // ancilla as site 1 of 3: H = ha (x) I4 + hs-part acting on sites 2,3
  const CMatrix h_first = kron(ha, identity(4)) + kron(identity(2), hs);
  const CMatrix h_last = kron(identity(4), ha) + kron(hs, identity(2));
  CHECK(dist(to_canonical_order(h_first, AncillaSpec{1, 0}), h_last) < 1e-14);

  const CMatrix coupled = s.hermitian(8);
  const CMatrix canon = to_canonical_order(coupled, AncillaSpec{3, 0});
  CHECK(dist(canon, coupled) == 0);

  const auto a = derive_effective(to_canonical_order(coupled, AncillaSpec{2, 0}), AncillaSpec{}, 0.05);
  const auto b = derive_effective(coupled, AncillaSpec{2, 0}, 0.05);
  CHECK(dist(a.h0, b.h0) == 0);
  CHECK_THROWS_AS(to_canonical_order(s.hermitian(6), AncillaSpec{1, 0}), Error);
  CHECK_THROWS_AS(to_canonical_order(coupled, AncillaSpec{4, 0}), Error);
}

TEST_CASE("measured state 1") {
  Sampler s(29);
  const CMatrix h = s.hermitian(8);
  const auto eff = derive_effective(h, AncillaSpec{std::nullopt, 1}, 0.01);
  CHECK(dist(eff.h0, ancilla_block(h, 1, 1)) == 0);
  CHECK(dist(eff.gamma, CMatrix(ancilla_block(h, 1, 0) * ancilla_block(h, 0, 1))) < 1e-12);
}

TEST_CASE("derive_effective input errors") {
  CMatrix h = CMatrix::Zero(4, 4);
  h(0, 1) = 1;
  CHECK_THROWS_AS(derive_effective(h, AncillaSpec{}, 0.1), Error);
  try {
    derive_effective(h, AncillaSpec{}, 0.1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  CHECK_THROWS_AS(derive_effective(identity(4), AncillaSpec{std::nullopt, 2}, 0.1), Error);
}

TEST_CASE("remove_identity_shift") {
  CHECK(remove_identity_shift(identity(3)).norm() == 0);
  CHECK(dist(remove_identity_shift(pauli(Axis::Z)), pauli(Axis::Z)) == 0);
  Sampler s(30);
  CHECK(std::abs(remove_identity_shift(s.complex_matrix(5)).trace()) < 1e-14);
}

TEST_CASE("EffectiveHamiltonian validation") {
  EffectiveHamiltonian eff{pauli(Axis::Z), identity(2), 0.1};
  CHECK_NOTHROW(eff.validate());
  CHECK(dist(eff.matrix(), CMatrix(pauli(Axis::Z) - 0.05 * kI * identity(2))) < 1e-15);
  eff.gamma = -identity(2);
  CHECK_THROWS_AS(eff.validate(), Error);
  eff.gamma = identity(2);
  eff.tau = 0;
  CHECK_THROWS_AS(eff.validate(), Error);
}
