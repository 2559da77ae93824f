#include "cgt/game.hpp"

#include <cmath>
#include <numbers>

namespace cgt {

RVector payoffs_vs_extreme_points(const ComplexGame& g, PlayerSide side,
                                  const CVector& s) {
  if (side == PlayerSide::I) {
    const Eigen::RowVectorXcd row = s.adjoint() * g.A;  // 1 x n
    const StrategyPolytope poly = g.col_polytope();
    const auto indices = extreme_point_indices(poly.m);
    const double b = offset_b(poly.a0);
    RVector out(static_cast<Eigen::Index>(indices.size()));
    for (size_t k = 0; k < indices.size(); ++k) {
      const auto& idx = indices[k];
      double v;
      if (idx.is_trivial()) {
        v = row(idx.p - 1).real();
      } else {
        const Complex cp = row(idx.p - 1);
        const Complex cq = row(idx.q - 1);
        v = 0.5 * cp.real() - b * cp.imag() + 0.5 * cq.real() + b * cq.imag();
      }
      out(static_cast<Eigen::Index>(k)) = v;
    }
    return out;
  }
  const CVector col = g.A * s;  // m x 1, entry i = (e^i)^* A w
  const StrategyPolytope poly = g.row_polytope();
  const auto indices = extreme_point_indices(poly.m);
  const double b = offset_b(poly.a0);
  RVector out(static_cast<Eigen::Index>(indices.size()));
  for (size_t k = 0; k < indices.size(); ++k) {
    const auto& idx = indices[k];
    double v;
    if (idx.is_trivial()) {
      v = col(idx.p - 1).real();
    } else {
      // conj(1/2 + bi) multiplies the p entry, conj(1/2 - bi) the q entry.
      const Complex cp = col(idx.p - 1);
      const Complex cq = col(idx.q - 1);
      v = 0.5 * cp.real() + b * cp.imag() + 0.5 * cq.real() - b * cq.imag();
    }
    out(static_cast<Eigen::Index>(k)) = v;
  }
  return out;
}

namespace {

EnvelopeResult envelope_unchecked(const ComplexGame& g, PlayerSide side,
                                  const CVector& s) {
  const RVector values = payoffs_vs_extreme_points(g, side, s);
  const int opp_m = side == PlayerSide::I ? g.cols() : g.rows();
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < values.size(); ++k) {
    if (side == PlayerSide::I ? values(k) < values(best) : values(k) > values(best))
      best = k;
  }
  return {values(best), index_from_rank(static_cast<int>(best), opp_m)};
}

}  // namespace

ComplexGame::ComplexGame(CMatrix payoff_matrix, double alpha_, double beta_)
    : A(std::move(payoff_matrix)), alpha(alpha_), beta(beta_) {
  if (A.rows() < 1 || A.cols() < 1)
    throw std::invalid_argument("ComplexGame: matrix must be at least 1x1");
  const double half_pi = std::numbers::pi / 2;
  if (!(alpha > 0.0) || !(alpha < half_pi) || !(beta > 0.0) || !(beta < half_pi))
    throw std::domain_error("ComplexGame: strategy arguments must lie strictly in (0, pi/2)");
  require_finite(A, "ComplexGame");
}

double payoff(const ComplexGame& g, const CVector& z, const CVector& w) {
  if (z.size() != g.rows() || w.size() != g.cols())
    throw std::invalid_argument("payoff: dimension mismatch");
  return (z.adjoint() * g.A * w).value().real();
}

PureSecurityReport pure_security(const ComplexGame& g) {
  const auto row_points = extreme_points(g.row_polytope());
  const int m2 = static_cast<int>(row_points.size());
  const int n2 = g.cols() * g.cols();

  // P(i, j) = payoff of row point i against column point j.
  RMatrix payoffs(m2, n2);
  for (int i = 0; i < m2; ++i)
    payoffs.row(i) = payoffs_vs_extreme_points(g, PlayerSide::I, row_points[i]).transpose();

  int best_row = 0;
  double h_low = payoffs.row(0).minCoeff();
  for (int i = 1; i < m2; ++i) {
    const double row_min = payoffs.row(i).minCoeff();
    if (row_min > h_low) {
      h_low = row_min;
      best_row = i;
    }
  }
  int best_col = 0;
  double h_high = payoffs.col(0).maxCoeff();
  for (int j = 1; j < n2; ++j) {
    const double col_max = payoffs.col(j).maxCoeff();
    if (col_max < h_high) {
      h_high = col_max;
      best_col = j;
    }
  }
  return {h_low, h_high, index_from_rank(best_row, g.rows()),
          index_from_rank(best_col, g.cols())};
}

std::vector<std::pair<ExtremePointIndex, ExtremePointIndex>> pure_equilibria(
    const ComplexGame& g, const Tolerances& tol) {
  const auto row_points = extreme_points(g.row_polytope());
  const int m2 = static_cast<int>(row_points.size());
  const int n2 = g.cols() * g.cols();

  RMatrix payoffs(m2, n2);
  for (int i = 0; i < m2; ++i)
    payoffs.row(i) = payoffs_vs_extreme_points(g, PlayerSide::I, row_points[i]).transpose();

  std::vector<std::pair<ExtremePointIndex, ExtremePointIndex>> out;
  for (int i = 0; i < m2; ++i) {
    for (int j = 0; j < n2; ++j) {
      const double p = payoffs(i, j);
      if (payoffs.col(j).maxCoeff() <= p + tol.value &&
          payoffs.row(i).minCoeff() >= p - tol.value)
        out.emplace_back(index_from_rank(i, g.rows()), index_from_rank(j, g.cols()));
    }
  }
  return out;
}

EnvelopeResult best_response_envelope(const ComplexGame& g, PlayerSide side,
                                      const CVector& s, const Tolerances& tol) {
  const StrategyPolytope poly =
      side == PlayerSide::I ? g.row_polytope() : g.col_polytope();
  if (!contains(poly, s, tol))
    throw std::invalid_argument("best_response_envelope: strategy outside its polytope");
  return envelope_unchecked(g, side, s);
}

VerificationReport verify_equilibrium(const ComplexGame& g,
                                      const EquilibriumCandidate& cand,
                                      const Tolerances& tol) {
  VerificationReport report;
  if (cand.z.size() != g.rows() || cand.w.size() != g.cols())
    throw std::invalid_argument("verify_equilibrium: dimension mismatch");
  report.z_member = contains(g.row_polytope(), cand.z, tol);
  report.w_member = contains(g.col_polytope(), cand.w, tol);
  report.value = payoff(g, cand.z, cand.w);

  const EnvelopeResult env_i = envelope_unchecked(g, PlayerSide::I, cand.z);
  const EnvelopeResult env_ii = envelope_unchecked(g, PlayerSide::II, cand.w);
  report.best_for_opponent_of_I = env_i.value;
  report.best_for_opponent_of_II = env_ii.value;
  report.witness_I = env_i.witness;
  report.witness_II = env_ii.witness;

  report.pass = report.z_member && report.w_member &&
                env_i.value >= report.value - tol.value &&
                env_ii.value <= report.value + tol.value;
  return report;
}

ComplexGame affine_transform(const ComplexGame& g, double k, double c) {
  if (!(k > 0.0)) throw std::invalid_argument("affine_transform: k must be > 0");
  if (!std::isfinite(k) || !std::isfinite(c))
    throw std::invalid_argument("affine_transform: non-finite coefficients");
  CMatrix b = k * g.A;
  b.array() += Complex{c, 0.0};
  return ComplexGame(std::move(b), g.alpha, g.beta);
}

GameClass classify(const ComplexGame& g, const Tolerances& tol) {
  GameClass out;
  out.square = g.rows() == g.cols() && g.rows() >= 2;
  out.common_argument = std::abs(g.alpha - g.beta) <= tol.feas;
  if (out.square) {
    bool skew = true;
    for (int i = 0; i < g.rows() && skew; ++i)
      for (int j = 0; j < g.cols() && skew; ++j)
        if (std::abs(g.A(i, j) + std::conj(g.A(j, i))) > tol.feas) skew = false;
    out.skew_hermitian = skew;
  }
  out.symmetric = out.skew_hermitian && out.common_argument;
  return out;
}

}  // namespace cgt
