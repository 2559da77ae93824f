#pragma once

#include "cgt/numerics.hpp"

#include <map>
#include <vector>

namespace cgt {

/// The strategy polytope: complex m-vectors with coordinatewise |arg| <= a0
/// and coordinate sum 1. a0 is the strategy argument, strictly in (0, pi/2).
struct StrategyPolytope {
  int m;
  double a0;

  StrategyPolytope(int m_, double a0_);
};

/// Index of one of the m^2 extreme points: either the unit coordinate
/// vector at i, or the two-support vector with 1/2 + bi at p and 1/2 - bi
/// at q (p != q). Indices are 1-based.
struct ExtremePointIndex {
  int p = 1;
  int q = 0;  // 0 marks a trivial (single-support) point

  static ExtremePointIndex trivial(int i) { return {i, 0}; }
  static ExtremePointIndex pair(int p, int q) { return {p, q}; }

  bool is_trivial() const { return q == 0; }
  friend bool operator==(const ExtremePointIndex&, const ExtremePointIndex&) = default;
};

/// Canonical listing order: trivial points by coordinate, then paired points
/// lexicographic by (p, q).
struct CanonicalIndexLess {
  bool operator()(const ExtremePointIndex& a, const ExtremePointIndex& b) const {
    if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
};

/// Sparse convex-combination weights over extreme points.
struct ConvexWeights {
  std::map<ExtremePointIndex, double, CanonicalIndexLess> w;

  double sum() const;
  int pair_term_count() const;
};

/// Imaginary offset of the paired extreme points: b with arg(1/2 + bi) = a0.
double offset_b(double a0);

/// All m^2 extreme-point indices in canonical order.
std::vector<ExtremePointIndex> extreme_point_indices(int m);

/// Position of idx in the canonical listing (0-based), and its inverse.
int canonical_rank(const ExtremePointIndex& idx, int m);
ExtremePointIndex index_from_rank(int rank, int m);

CVector extreme_point(const StrategyPolytope& poly, const ExtremePointIndex& idx);
std::vector<CVector> extreme_points(const StrategyPolytope& poly);

bool contains(const StrategyPolytope& poly, const CVector& z, const Tolerances& tol = {});

/// Writes z as a convex combination of extreme points via the per-coordinate
/// split z_i = lambda_i (1/2 + bi) + mu_i (1/2 - bi) + kappa_i followed by
/// the paired-extraction loop over the positive/negative imaginary
/// coefficient lists. Throws std::invalid_argument when z is not a member.
ConvexWeights decompose(const StrategyPolytope& poly, const CVector& z,
                        const Tolerances& tol = {});

/// Dense reconstruction sum(w_k * d^k), for round-trip checks.
CVector combine(const StrategyPolytope& poly, const ConvexWeights& weights);

}  // namespace cgt
