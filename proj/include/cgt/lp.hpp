#pragma once

#include "cgt/game.hpp"

#include <string>
#include <vector>

namespace cgt {

enum class Relation { Le, Ge, Eq };

struct LinearConstraint {
  RVector coeffs;
  Relation relation;
  double rhs;
};

/// A finite real LP over the 2m-real embedding of a strategy polytope:
/// variables x_i = Re z_i, y_i = Im z_i (plus any extras such as the value
/// variable t), with the membership rows x_i >= 0, |y_i| <= tan(a0) x_i,
/// sum x = 1, sum y = 0.
struct RealEmbeddedLP {
  bool maximize = true;
  RVector objective;
  std::vector<LinearConstraint> rows;
  std::vector<bool> nonneg;  // per variable; false means free
  std::vector<std::string> names;

  int num_vars() const { return static_cast<int>(objective.size()); }
};

/// LP skeleton for one polytope plus extra_vars trailing free variables.
/// Variables are ordered x_1..x_m, y_1..y_m, extras; membership rows are
/// already in place.
RealEmbeddedLP make_polytope_lp(const StrategyPolytope& poly, int extra_vars,
                                const std::vector<std::string>& extra_names);

struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  double objective = 0.0;
  RVector solution;
  int iterations = 0;
};

/// Two-phase dense primal simplex with Bland's rule. Deterministic:
/// identical inputs yield identical pivot sequences.
SimplexResult simplex_solve(const RealEmbeddedLP& lp, const Tolerances& tol = {});

/// Side I: maximize t subject to Re(z^* A d^j) >= t over the opponent's n^2
/// extreme points. Side II: minimize t subject to Re((d^i)^* A w) <= t over
/// the m^2 points. Payoff rows come first (canonical extreme-point order),
/// then the membership rows.
RealEmbeddedLP embed_player(const ComplexGame& g, PlayerSide side);

struct MinimaxResult {
  double v_low = 0.0;
  double v_high = 0.0;
  double gap = 0.0;  // v_high - v_low
  CVector z_opt;
  CVector w_opt;
};

/// Solves both embeddings. Throws NumericsError when either LP fails to
/// solve (the embeddings are feasible and bounded by construction) or when
/// the duality gap exceeds tol.value; a bad gap is never accepted silently.
MinimaxResult minimax(const ComplexGame& g, const Tolerances& tol = {});

/// Complementarity instance over M (p x p), q (p), argument bounds gamma:
/// find x with y = q + Mx, |arg x| <= gamma, |arg y| <= pi/2 - gamma,
/// Re(x^* y) = 0.
struct ComplexLCPInstance {
  CMatrix M;
  CVector q;
  RVector gamma;
};

/// Block instance of dimension m + n + 2: scaled strategies z', w' and two
/// scalar multiplier slots, with the all-ones blocks realized as column
/// vectors.
ComplexLCPInstance build_lcp(const ComplexGame& g);

struct LcpVerification {
  CVector y;
  bool x_in_cone = false;
  bool y_in_cone = false;
  std::vector<int> x_violations;  // offending coordinates, 1-based
  std::vector<int> y_violations;
  double complementarity_residual = 0.0;  // |Re(x^* y)|
  bool pass = false;
};

LcpVerification verify_lcp(const ComplexLCPInstance& inst, const CVector& x,
                           const Tolerances& tol = {});

/// Candidate x = (z/v, w/v, 0, 0) from a minimax solution; requires a
/// strictly positive game value (shift the game by c*E first otherwise).
CVector lcp_candidate_from_minimax(const ComplexGame& g, const MinimaxResult& mm);

}  // namespace cgt
