#pragma once

#include "cgt/game.hpp"

#include <optional>
#include <variant>

namespace cgt {

enum class Axis { Row, Column };

/// One domination event. Indices are 1-based and refer to the ORIGINAL
/// matrix, even for claims found after earlier eliminations.
struct DominationClaim {
  struct Single {
    int index;
  };
  struct PairMix {
    int first;
    int second;
    double lambda;  // weight on first, strictly in (0, 1)
  };
  struct Mixed {
    CVector strategy;
  };

  Axis axis;
  int target;
  std::variant<Single, PairMix, Mixed> dominator;
  bool strict;
};

struct EliminationTrace {
  std::vector<DominationClaim> claims;
  std::vector<int> surviving_rows;  // original 1-based indices, ascending
  std::vector<int> surviving_cols;
};

/// Row case: target row's payoff <= candidate row's payoff against every
/// opponent extreme point (strictly everywhere for strict; somewhere for
/// weak). Column case uses the reversed inequalities. Indices are 1-based
/// into the given game.
bool dominates_single(const ComplexGame& g, Axis axis, int target, int candidate,
                      bool strict, const Tolerances& tol = {});

struct PairDomination {
  int first;
  int second;
  double lambda;
  bool strict;
};

/// Scans ordered candidate pairs lexicographically; each opponent extreme
/// point bounds lambda by a linear inequality, and the first pair whose
/// interval meets (0,1) with a domination witness at the midpoint is
/// returned.
std::optional<PairDomination> find_pair_domination(const ComplexGame& g, Axis axis,
                                                   int target,
                                                   const Tolerances& tol = {});

struct MixedDomination {
  CVector strategy;
  bool strict;
  double slack;  // uniform slack (strict) or summed slack (weak)
};

/// LP search for a dominating mixed strategy: first maximize the uniform
/// slack (strict domination when positive), then the summed per-point slack
/// (weak domination when positive).
std::optional<MixedDomination> find_mixed_domination(const ComplexGame& g, Axis axis,
                                                     int target,
                                                     const Tolerances& tol = {});

/// Iterated elimination: per pass scans rows by single domination, then
/// columns by single, then rows by pair, then columns by pair, removing the
/// lowest-index find and restarting. Never reduces below 1x1; mixed
/// domination is diagnostic only and never used here.
std::pair<ComplexGame, EliminationTrace> iterated_eliminate(const ComplexGame& g,
                                                            const Tolerances& tol = {});

/// Replays a trace against the original game (test/audit helper).
ComplexGame apply_trace(const ComplexGame& original, const EliminationTrace& trace);

struct EliminationConditionCheck {
  Axis axis;
  int target;
  double lhs_im;  // Im value for the eliminated line
  double rhs_im;  // Im value for the dominator (lambda-mixed for pairs)
  bool met;
};

/// The imaginary-part equalities that must hold at a reduced-game
/// equilibrium for each recorded elimination to preserve full-game
/// equilibria. z and w live in the ORIGINAL dimensions with eliminated
/// coordinates set to zero; row claims test against w, column claims
/// against z.
std::vector<EliminationConditionCheck> check_elimination_condition(
    const ComplexGame& original, const EliminationTrace& trace, const CVector& z,
    const CVector& w, const Tolerances& tol = {});

}  // namespace cgt
