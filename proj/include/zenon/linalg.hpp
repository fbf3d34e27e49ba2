#pragma once

// Dense complex linear algebra on top of Eigen.
//
// Everything here is a free function templated on the Eigen expression type, so
// callers can pass products and blocks without materializing them first. The
// three nontrivial kernels (Hermitian eigendecomposition, matrix exponential,
// PSD square root) are implemented here rather than delegated to Eigen's
// solvers; the tests use Eigen's own solvers as independent references.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zenon/errors.hpp"

namespace zenon {

template <typename Real>
using MatrixX = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using VectorX = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealVectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CMatrix = MatrixX<double>;
using CVector = VectorX<double>;
using RVector = RealVectorX<double>;

inline constexpr Complex kI{0.0, 1.0};

template <typename Derived>
using PlainOf = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <typename Real>
struct EigenDecomposition {
  RealVectorX<Real> eigenvalues;  // ascending
  MatrixX<Real> eigenvectors;     // orthonormal columns
};

// ---------------------------------------------------------------------------
// Construction

template <typename Real = double>
MatrixX<Real> identity(Eigen::Index dim) {
  return MatrixX<Real>::Identity(dim, dim);
}

/// Builds a square matrix from row-major real and imaginary parts.
template <typename Real = double>
MatrixX<Real> from_row_major(Eigen::Index dim, std::span<const Real> re, std::span<const Real> im) {
  if (dim < 1) throw Error(ErrorCode::BadDimension, "matrix dimension must be at least 1");
  const auto expected = static_cast<std::size_t>(dim * dim);
  if (re.size() != expected || im.size() != expected) {
    throw Error(ErrorCode::BadDimension, "expected " + std::to_string(expected) + " entries for dim " +
                                             std::to_string(dim) + ", got re=" + std::to_string(re.size()) +
                                             " im=" + std::to_string(im.size()));
  }
  MatrixX<Real> m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto k = static_cast<std::size_t>(r * dim + c);
      m(r, c) = {re[k], im[k]};
    }
  return m;
}

// ---------------------------------------------------------------------------
// Elementary operations

template <typename Derived>
PlainOf<Derived> dagger(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

/// Kronecker product with `a`'s index major.
template <typename DerivedA, typename DerivedB>
PlainOf<DerivedA> kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  PlainOf<DerivedA> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& a) {
  return a.trace();
}

template <typename Derived>
RealOf<Derived> frobenius_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();
}

template <typename DerivedA, typename DerivedB>
PlainOf<DerivedA> commutator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return a * b - b * a;
}

template <typename DerivedA, typename DerivedB>
PlainOf<DerivedA> anticommutator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return a * b + b * a;
}

/// Relative test: ||A - A^†||_F <= tol * ||A||_F.
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, RealOf<Derived> tol = RealOf<Derived>(1e-10)) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= tol * a.norm();
}

template <typename Derived>
PlainOf<Derived> hermitian_part(const Eigen::MatrixBase<Derived>& a) {
  return (a + a.adjoint()) * RealOf<Derived>(0.5);
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition: cyclic complex Jacobi

namespace detail {

template <typename Real>
Real off_diagonal_norm(const MatrixX<Real>& a) {
  Real s = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

template <typename Derived>
EigenDecomposition<RealOf<Derived>> hermitian_eig(const Eigen::MatrixBase<Derived>& input,
                                                  RealOf<Derived> herm_tol = RealOf<Derived>(1e-10)) {
  using Real = RealOf<Derived>;
  using Scalar = std::complex<Real>;
  if (input.rows() != input.cols()) throw Error(ErrorCode::BadDimension, "hermitian_eig: matrix is not square");
  if (!is_hermitian(input, herm_tol)) throw Error(ErrorCode::NotHermitian, "hermitian_eig: input is not Hermitian");

  const Eigen::Index n = input.rows();
  MatrixX<Real> a = hermitian_part(input);
  MatrixX<Real> v = MatrixX<Real>::Identity(n, n);
  const Real scale = a.norm();
  const Real threshold = Real(1e-13) * scale;

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && detail::off_diagonal_norm(a) > threshold; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real mag = std::abs(a(p, q));
        if (mag == Real(0)) continue;
        const Scalar phase = a(p, q) / mag;  // a_pq = |a_pq| e^{i phi}
        const Real app = a(p, p).real();
        const Real aqq = a(q, q).real();
        const Real theta = (aqq - app) / (2 * mag);
        const Real t = (theta >= 0 ? Real(1) : Real(-1)) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const Real c = 1 / std::sqrt(t * t + 1);
        const Real s = t * c;
        // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] acting on columns p, q
        const Scalar u00 = c, u01 = s;
        const Scalar u10 = -s * std::conj(phase), u11 = c * std::conj(phase);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * u00 + akq * u10;
          a(k, q) = akp * u01 + akq * u11;
          const Scalar vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * u00 + vkq * u10;
          v(k, q) = vkp * u01 + vkq * u11;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
          a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
        }
        a(p, q) = a(q, p) = Scalar(0);
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (detail::off_diagonal_norm(a) > threshold) {
    throw Error(ErrorCode::ConvergenceFailure, "hermitian_eig: Jacobi sweeps did not converge");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition<Real> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix exponential: scaling and squaring with an order-18 Taylor series

template <typename Derived>
PlainOf<Derived> expm(const Eigen::MatrixBase<Derived>& input) {
  using Real = RealOf<Derived>;
  using Plain = PlainOf<Derived>;
  if (input.rows() != input.cols()) throw Error(ErrorCode::BadDimension, "expm: matrix is not square");
  constexpr int kOrder = 18;

  const Real norm = input.norm();
  int squarings = 0;
  if (norm > Real(0.5)) squarings = static_cast<int>(std::ceil(std::log2(norm / Real(0.5))));
  const Plain x = input * std::ldexp(Real(1), -squarings);

  const Eigen::Index n = input.rows();
  const Plain eye = Plain::Identity(n, n);
  Plain result = eye;
  for (int j = kOrder; j >= 1; --j) result = eye + (x * result) / Real(j);
  for (int k = 0; k < squarings; ++k) result = (result * result).eval();
  return result;
}

// ---------------------------------------------------------------------------
// PSD principal square root

/// Eigenvalues in [-tol, 0) are clamped to zero; anything below -tol is
/// rejected. The default tolerance is 1e-10 * ||A||_F.
template <typename Derived>
PlainOf<Derived> psd_sqrt(const Eigen::MatrixBase<Derived>& a, std::optional<RealOf<Derived>> tol = std::nullopt) {
  using Real = RealOf<Derived>;
  const Real clamp = tol.value_or(Real(1e-10) * a.norm());
  const auto eig = hermitian_eig(a);
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues(0) < -clamp) {
    throw Error(ErrorCode::NotPSD, "psd_sqrt: minimum eigenvalue " + std::to_string(eig.eigenvalues(0)) +
                                       " below -" + std::to_string(clamp));
  }
  RealVectorX<Real> roots = eig.eigenvalues.cwiseMax(Real(0)).cwiseSqrt();
  PlainOf<Derived> r = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
  return hermitian_part(r);
}

/// Eigenvalue spread lambda_max - lambda_min of a Hermitian matrix.
template <typename Derived>
RealOf<Derived> spectral_spread(const Eigen::MatrixBase<Derived>& a) {
  const auto eig = hermitian_eig(a);
  if (eig.eigenvalues.size() == 0) return 0;
  return eig.eigenvalues(eig.eigenvalues.size() - 1) - eig.eigenvalues(0);
}

}  // namespace zenon
