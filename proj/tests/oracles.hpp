#pragma once

// Test-only oracles, independent of the library's computation paths: a
// from-scratch extreme-point listing, brute-force payoff enumeration, and a
// deterministic random sampler over the strategy polytopes.

#include "cgt/game.hpp"

#include <complex>
#include <random>
#include <vector>

namespace oracle {

using cgt::Complex;
using cgt::CMatrix;
using cgt::CVector;

// Extreme points built directly from the closed-form description: unit
// vectors first, then all ordered two-support placements of 1/2 +- bi.
inline std::vector<CVector> extreme_points(int m, double a0) {
  std::vector<CVector> points;
  for (int i = 0; i < m; ++i) {
    CVector e = CVector::Zero(m);
    e(i) = Complex{1.0, 0.0};
    points.push_back(e);
  }
  const double b = std::tan(a0) / 2.0;
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (p == q) continue;
      CVector v = CVector::Zero(m);
      v(p) = Complex{0.5, b};
      v(q) = Complex{0.5, -b};
      points.push_back(v);
    }
  }
  return points;
}

inline double payoff(const CMatrix& a, const CVector& z, const CVector& w) {
  Complex acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      acc += std::conj(z(i)) * a(i, j) * w(j);
  return acc.real();
}

struct PureSecurity {
  double h_low;
  double h_high;
};

inline PureSecurity pure_security(const CMatrix& a, double alpha, double beta) {
  const auto rows = extreme_points(static_cast<int>(a.rows()), alpha);
  const auto cols = extreme_points(static_cast<int>(a.cols()), beta);
  double h_low = -1e300;
  for (const auto& z : rows) {
    double row_min = 1e300;
    for (const auto& w : cols) row_min = std::min(row_min, payoff(a, z, w));
    h_low = std::max(h_low, row_min);
  }
  double h_high = 1e300;
  for (const auto& w : cols) {
    double col_max = -1e300;
    for (const auto& z : rows) col_max = std::max(col_max, payoff(a, z, w));
    h_high = std::min(h_high, col_max);
  }
  return {h_low, h_high};
}

// Random polytope member: a Dirichlet-style convex combination of the m^2
// extreme points (exponential draws, normalized).
inline CVector random_member(const std::vector<CVector>& points, std::mt19937& rng) {
  std::exponential_distribution<double> exp_draw(1.0);
  std::vector<double> weights(points.size());
  double total = 0.0;
  for (auto& w : weights) {
    w = exp_draw(rng);
    total += w;
  }
  CVector z = CVector::Zero(points.front().size());
  for (size_t k = 0; k < points.size(); ++k) z += (weights[k] / total) * points[k];
  return z;
}

inline CMatrix random_matrix(int m, int n, double magnitude, std::mt19937& rng) {
  std::uniform_real_distribution<double> draw(-magnitude, magnitude);
  CMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex{draw(rng), draw(rng)};
  return a;
}

// Random skew-hermitian matrix: pure-imaginary diagonal, mirrored
// off-diagonal entries a_ji = -conj(a_ij).
inline CMatrix random_skew_hermitian(int n, double magnitude, std::mt19937& rng) {
  std::uniform_real_distribution<double> draw(-magnitude, magnitude);
  CMatrix a = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = Complex{0.0, draw(rng)};
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = Complex{draw(rng), draw(rng)};
      a(j, i) = -std::conj(a(i, j));
    }
  }
  return a;
}

}  // namespace oracle
