#pragma once

#include <random>

#include "zenon/linalg.hpp"

namespace zenon::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  CMatrix complex_matrix(Eigen::Index n, double scale = 1) {
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = scale * Complex(normal(), normal());
    return a;
  }

  CMatrix hermitian(Eigen::Index n, double scale = 1) { return hermitian_part(complex_matrix(n, scale)); }

  CVector state(Eigen::Index n) {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(normal(), normal());
    return v.normalized();
  }

  CMatrix density(Eigen::Index n) {
    const CMatrix b = complex_matrix(n);
    const CMatrix r = b * b.adjoint();
    return r / r.trace().real();
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

inline double dist(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }

}  // namespace zenon::testing
