#pragma once

#include "cgt/polytope.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cgt {

/// Two-player zero-sum game over complex sector polytopes. A is the payoff
/// matrix to player I; alpha/beta are the players' strategy arguments.
struct ComplexGame {
  CMatrix A;
  double alpha;
  double beta;

  ComplexGame(CMatrix payoff_matrix, double alpha_, double beta_);

  int rows() const { return static_cast<int>(A.rows()); }
  int cols() const { return static_cast<int>(A.cols()); }
  StrategyPolytope row_polytope() const { return {rows(), alpha}; }
  StrategyPolytope col_polytope() const { return {cols(), beta}; }
};

/// Re(z^* A w): payoff to player I, conjugation on the left argument.
double payoff(const ComplexGame& g, const CVector& z, const CVector& w);

/// Payoff of strategy s against every extreme point of the opponent's
/// polytope, in canonical order. Side I: entries Re(s^* A d^j) over the n^2
/// column points; side II: Re((d^i)^* A s) over the m^2 row points.
RVector payoffs_vs_extreme_points(const ComplexGame& g, PlayerSide side,
                                  const CVector& s);

struct PureSecurityReport {
  double h_low;   // max_i min_j over extreme pairs
  double h_high;  // min_j max_i
  ExtremePointIndex maximin;
  ExtremePointIndex minimax;
};

/// Security levels in pure strategies; argmax/argmin ties resolve to the
/// earliest extreme point in canonical order.
PureSecurityReport pure_security(const ComplexGame& g);

/// All extreme-point saddle pairs, within tol.value slack.
std::vector<std::pair<ExtremePointIndex, ExtremePointIndex>> pure_equilibria(
    const ComplexGame& g, const Tolerances& tol = {});

struct EnvelopeResult {
  double value;
  ExtremePointIndex witness;
};

/// Side I: min over the opponent's n^2 extreme points of Re(s^* A d^j).
/// Side II: max over the m^2 points of Re((d^i)^* A s). The strategy must
/// belong to its polytope.
EnvelopeResult best_response_envelope(const ComplexGame& g, PlayerSide side,
                                      const CVector& s, const Tolerances& tol = {});

struct EquilibriumCandidate {
  CVector z;
  CVector w;
};

struct VerificationReport {
  bool pass = false;
  double value = 0.0;  // payoff at the candidate
  bool z_member = false;
  bool w_member = false;
  // Opponent best responses; on failure these carry the profitable deviation.
  double best_for_opponent_of_I = 0.0;   // min_j Re(z^* A d^j)
  double best_for_opponent_of_II = 0.0;  // max_i Re((d^i)^* A w)
  ExtremePointIndex witness_I;
  ExtremePointIndex witness_II;
};

/// Saddle check against all opponent extreme points. Failures are report
/// content, never exceptions.
VerificationReport verify_equilibrium(const ComplexGame& g,
                                      const EquilibriumCandidate& cand,
                                      const Tolerances& tol = {});

/// Game with matrix k*A + c*E (E all-ones), k > 0; same arguments.
ComplexGame affine_transform(const ComplexGame& g, double k, double c);

struct GameClass {
  bool square = false;
  bool skew_hermitian = false;
  bool common_argument = false;
  bool symmetric = false;
  std::optional<bool> fair;  // set by the solver once the value is known
};

GameClass classify(const ComplexGame& g, const Tolerances& tol = {});

}  // namespace cgt
