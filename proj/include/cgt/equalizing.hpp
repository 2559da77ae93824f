#pragma once

#include "cgt/game.hpp"

#include <optional>

namespace cgt {

/// A solved equalizing system for one side. `strategy` is the game-side
/// strategy (for side I the coordinatewise conjugate of the raw system
/// solution); `constant` is the complex equalizing constant whose real part
/// is the game value when both sides are feasible.
struct EqualizingSolution {
  PlayerSide side;
  CVector strategy;
  Complex constant;
  bool feasible = false;   // argument constraints, i.e. polytope containment
  CVector system_solution; // raw linear-system unknowns (strategy block)
};

struct EqualizingSystemResult {
  bool solvable = false;  // linear system consistent
  std::optional<EqualizingSolution> solution;
  int rank = 0;
  double residual = 0.0;
};

/// Assembles and solves the one-side equalizing system: the opponent's
/// pure-payoff equalities plus the normalization row, with the equalizing
/// constant as the trailing unknown. Underdetermined systems yield the
/// free-variables-zero representative.
EqualizingSystemResult solve_equalizing_system(const ComplexGame& g, PlayerSide side,
                                               const Tolerances& tol = {});

struct EqualizingEquilibrium {
  EquilibriumCandidate candidate;
  double value;  // Re of the equalizing constant
  EqualizingSolution row_side;
  EqualizingSolution col_side;
};

/// Succeeds iff both systems solve and both strategies satisfy their
/// argument constraints. Throws NumericsError if the two constants disagree
/// in real part beyond tol.value (impossible for consistent numerics).
std::optional<EqualizingEquilibrium> equalizing_equilibrium(const ComplexGame& g,
                                                            const Tolerances& tol = {});

struct SeaResult {
  std::optional<double> argument;     // lower endpoint of the final bracket
  bool non_monotone_bracket = false;  // feasibility failed to be monotone
};

/// Smallest common strategy argument at which the security levels still
/// differ and both equalizing systems are argument-feasible, located by
/// bisection over (0, pi/2) to within `resolution`. The returned endpoint
/// is approximate from below; no such argument may exist.
SeaResult smallest_equalizing_argument(const CMatrix& A, double resolution,
                                       const Tolerances& tol = {});

}  // namespace cgt
