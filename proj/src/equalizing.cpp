#include "cgt/equalizing.hpp"

#include "cgt/numerics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cgt {

EqualizingSystemResult solve_equalizing_system(const ComplexGame& g, PlayerSide side,
                                               const Tolerances& tol) {
  const int m = g.rows();
  const int n = g.cols();

  // Equalization rows (one per opponent pure coordinate) plus normalization;
  // unknowns are the strategy block and the trailing equalizing constant.
  CMatrix b_mat;
  CVector rhs;
  if (side == PlayerSide::I) {
    b_mat = CMatrix::Zero(n + 1, m + 1);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) b_mat(j, i) = g.A(i, j);
      b_mat(j, m) = Complex{-1.0, 0.0};
    }
    b_mat.row(n).head(m).setOnes();
    rhs = CVector::Zero(n + 1);
    rhs(n) = Complex{1.0, 0.0};
  } else {
    b_mat = CMatrix::Zero(m + 1, n + 1);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) b_mat(i, j) = g.A(i, j);
      b_mat(i, n) = Complex{-1.0, 0.0};
    }
    b_mat.row(m).head(n).setOnes();
    rhs = CVector::Zero(m + 1);
    rhs(m) = Complex{1.0, 0.0};
  }

  const LinearSolveResult linear = solve_complex_linear(b_mat, rhs, tol);
  EqualizingSystemResult result;
  result.solvable = linear.consistent;
  result.rank = linear.rank;
  result.residual = linear.residual;
  if (!linear.consistent) return result;

  const int dim = side == PlayerSide::I ? m : n;
  EqualizingSolution sol;
  sol.side = side;
  sol.system_solution = linear.solution.head(dim);
  sol.constant = linear.solution(dim);
  sol.strategy = side == PlayerSide::I ? sol.system_solution.conjugate().eval()
                                       : sol.system_solution;
  const StrategyPolytope poly =
      side == PlayerSide::I ? g.row_polytope() : g.col_polytope();
  sol.feasible = contains(poly, sol.strategy, tol);
  result.solution = std::move(sol);
  return result;
}

std::optional<EqualizingEquilibrium> equalizing_equilibrium(const ComplexGame& g,
                                                            const Tolerances& tol) {
  const EqualizingSystemResult row = solve_equalizing_system(g, PlayerSide::I, tol);
  const EqualizingSystemResult col = solve_equalizing_system(g, PlayerSide::II, tol);
  if (!row.solvable || !col.solvable) return std::nullopt;
  if (!row.solution->feasible || !col.solution->feasible) return std::nullopt;

  const double re_eta = row.solution->constant.real();
  const double re_theta = col.solution->constant.real();
  if (std::abs(re_eta - re_theta) > tol.value) {
    std::ostringstream msg;
    msg << "equalizing_equilibrium: Re(eta)=" << re_eta << " and Re(theta)=" << re_theta
        << " disagree beyond tolerance; numerics are inconsistent";
    throw NumericsError(msg.str());
  }

  EqualizingEquilibrium eq;
  eq.candidate = {row.solution->strategy, col.solution->strategy};
  eq.value = re_eta;
  eq.row_side = *row.solution;
  eq.col_side = *col.solution;
  return eq;
}

SeaResult smallest_equalizing_argument(const CMatrix& A, double resolution,
                                       const Tolerances& tol) {
  if (!(resolution > 0.0))
    throw std::invalid_argument("smallest_equalizing_argument: resolution must be > 0");
  const double half_pi = std::numbers::pi / 2;
  const double hi_limit = half_pi - resolution;
  if (!(hi_limit > 0.0)) return {};

  // The linear systems do not depend on the argument; solve them once with
  // a probe game, then vary only the membership test and the security gap.
  const ComplexGame probe(A, std::numbers::pi / 4, std::numbers::pi / 4);
  const EqualizingSystemResult row = solve_equalizing_system(probe, PlayerSide::I, tol);
  const EqualizingSystemResult col = solve_equalizing_system(probe, PlayerSide::II, tol);
  if (!row.solvable || !col.solvable) return {};

  const CVector& z = row.solution->strategy;
  const CVector& w = col.solution->strategy;
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());

  const auto feasible_at = [&](double gamma) {
    if (!contains(StrategyPolytope(m, gamma), z, tol)) return false;
    if (!contains(StrategyPolytope(n, gamma), w, tol)) return false;
    const PureSecurityReport sec = pure_security(ComplexGame(A, gamma, gamma));
    return sec.h_high - sec.h_low > tol.value;
  };

  SeaResult result;
  if (!feasible_at(hi_limit)) {
    // Bisection assumes monotone feasibility; probe a coarse grid so a
    // feasible interior point is reported instead of silently missed.
    for (int k = 1; k < 64; ++k) {
      if (feasible_at(hi_limit * k / 64.0)) {
        result.non_monotone_bracket = true;
        break;
      }
    }
    return result;
  }

  double lo = 0.0;
  double hi = hi_limit;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (feasible_at(mid))
      hi = mid;
    else
      lo = mid;
  }
  result.argument = lo;
  return result;
}

}  // namespace cgt
