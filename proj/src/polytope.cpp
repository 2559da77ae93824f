#include "cgt/polytope.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

namespace cgt {

StrategyPolytope::StrategyPolytope(int m_, double a0_) : m(m_), a0(a0_) {
  if (m < 1) throw std::invalid_argument("StrategyPolytope: dimension must be >= 1");
  if (!(a0 > 0.0) || !(a0 < std::numbers::pi / 2))
    throw std::domain_error("StrategyPolytope: argument must lie strictly in (0, pi/2)");
}

double ConvexWeights::sum() const {
  double s = 0.0;
  for (const auto& [idx, weight] : w) s += weight;
  return s;
}

int ConvexWeights::pair_term_count() const {
  int count = 0;
  for (const auto& [idx, weight] : w)
    if (!idx.is_trivial()) ++count;
  return count;
}

double offset_b(double a0) {
  if (!(a0 > 0.0) || !(a0 < std::numbers::pi / 2))
    throw std::domain_error("offset_b: argument must lie strictly in (0, pi/2)");
  return std::tan(a0) / 2.0;
}

std::vector<ExtremePointIndex> extreme_point_indices(int m) {
  if (m < 1) throw std::invalid_argument("extreme_point_indices: m must be >= 1");
  std::vector<ExtremePointIndex> out;
  out.reserve(static_cast<size_t>(m) * static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) out.push_back(ExtremePointIndex::trivial(i));
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q)
      if (q != p) out.push_back(ExtremePointIndex::pair(p, q));
  return out;
}

int canonical_rank(const ExtremePointIndex& idx, int m) {
  if (idx.is_trivial()) {
    if (idx.p < 1 || idx.p > m) throw std::out_of_range("extreme-point index out of range");
    return idx.p - 1;
  }
  if (idx.p < 1 || idx.p > m || idx.q < 1 || idx.q > m || idx.p == idx.q)
    throw std::out_of_range("extreme-point index out of range");
  const int within = idx.q - 1 - (idx.q > idx.p ? 1 : 0);
  return m + (idx.p - 1) * (m - 1) + within;
}

ExtremePointIndex index_from_rank(int rank, int m) {
  if (rank < 0 || rank >= m * m) throw std::out_of_range("extreme-point rank out of range");
  if (rank < m) return ExtremePointIndex::trivial(rank + 1);
  const int k = rank - m;
  const int p = k / (m - 1) + 1;
  int q = k % (m - 1) + 1;
  if (q >= p) ++q;
  return ExtremePointIndex::pair(p, q);
}

CVector extreme_point(const StrategyPolytope& poly, const ExtremePointIndex& idx) {
  CVector v = CVector::Zero(poly.m);
  if (idx.is_trivial()) {
    if (idx.p < 1 || idx.p > poly.m)
      throw std::out_of_range("extreme_point: index out of range");
    v(idx.p - 1) = Complex{1.0, 0.0};
    return v;
  }
  if (idx.p < 1 || idx.p > poly.m || idx.q < 1 || idx.q > poly.m || idx.p == idx.q)
    throw std::out_of_range("extreme_point: index out of range");
  const double b = offset_b(poly.a0);
  v(idx.p - 1) = Complex{0.5, b};
  v(idx.q - 1) = Complex{0.5, -b};
  return v;
}

std::vector<CVector> extreme_points(const StrategyPolytope& poly) {
  std::vector<CVector> out;
  const auto indices = extreme_point_indices(poly.m);
  out.reserve(indices.size());
  for (const auto& idx : indices) out.push_back(extreme_point(poly, idx));
  return out;
}

bool contains(const StrategyPolytope& poly, const CVector& z, const Tolerances& tol) {
  if (z.size() != poly.m) throw std::invalid_argument("contains: dimension mismatch");
  require_finite(z, "contains");
  for (Eigen::Index i = 0; i < z.size(); ++i)
    if (!sector_contains(z(i), poly.a0, tol)) return false;
  const Complex s = z.sum();
  return std::abs(s.real() - 1.0) <= tol.feas && std::abs(s.imag()) <= tol.feas;
}

ConvexWeights decompose(const StrategyPolytope& poly, const CVector& z,
                        const Tolerances& tol) {
  if (!contains(poly, z, tol)) {
    std::ostringstream msg;
    msg << "decompose: vector is not a member of the strategy polytope (m=" << poly.m
        << ", a0=" << poly.a0 << ")";
    throw std::invalid_argument(msg.str());
  }

  const double b = offset_b(poly.a0);
  ConvexWeights out;

  // Per-coordinate split into (1/2 + bi), (1/2 - bi) and real-unit shares.
  struct Entry {
    int coord;  // 1-based
    double coeff;
  };
  std::deque<Entry> pos, neg;
  for (int i = 0; i < poly.m; ++i) {
    const Complex zi = z(i);
    double kappa;
    if (zi.imag() > 0.0) {
      const double lambda = zi.imag() / b;
      kappa = zi.real() - lambda / 2.0;
      pos.push_back({i + 1, lambda});
    } else if (zi.imag() < 0.0) {
      const double mu = -zi.imag() / b;
      kappa = zi.real() - mu / 2.0;
      neg.push_back({i + 1, mu});
    } else {
      kappa = zi.real();
    }
    if (kappa < -tol.feas)
      throw std::invalid_argument("decompose: negative trivial share beyond slack");
    if (kappa > 0.0) out.w[ExtremePointIndex::trivial(i + 1)] += kappa;
  }

  // Paired extraction: repeatedly match the heads of the two coefficient
  // lists, emitting one eta term per step. Equal heads drop together.
  while (!pos.empty() && !neg.empty()) {
    Entry& hp = pos.front();
    Entry& hq = neg.front();
    const double c = std::min(hp.coeff, hq.coeff);
    if (c > 0.0) out.w[ExtremePointIndex::pair(hp.coord, hq.coord)] += c;
    const double diff = hp.coeff - hq.coeff;
    if (diff == 0.0) {
      pos.pop_front();
      neg.pop_front();
    } else if (diff > 0.0) {
      hp.coeff = diff;
      neg.pop_front();
    } else {
      hq.coeff = -diff;
      pos.pop_front();
    }
  }
  for (const auto& leftover : pos)
    if (leftover.coeff > tol.feas)
      throw std::invalid_argument("decompose: unmatched positive-imaginary share");
  for (const auto& leftover : neg)
    if (leftover.coeff > tol.feas)
      throw std::invalid_argument("decompose: unmatched negative-imaginary share");

  return out;
}

CVector combine(const StrategyPolytope& poly, const ConvexWeights& weights) {
  CVector acc = CVector::Zero(poly.m);
  for (const auto& [idx, weight] : weights.w) acc += weight * extreme_point(poly, idx);
  return acc;
}

}  // namespace cgt
