#pragma once

#include "cgt/types.hpp"

namespace cgt {

/// True iff c lies in the closed sector {Re >= 0, |arg| <= a0} up to
/// tol.feas slack. a0 must lie strictly inside (0, pi/2); zero always
/// belongs (arg(0) is never evaluated).
bool sector_contains(Complex c, double a0, const Tolerances& tol = {});

/// Sector test with closed bound gamma in [0, pi/2], as needed by the
/// complementarity cones (gamma = pi/2 admits the whole right half-plane,
/// gamma = 0 only the nonnegative real axis).
bool cone_contains(Complex c, double gamma, const Tolerances& tol = {});

/// Outcome of a rectangular complex linear solve. When consistent, solution
/// is the particular solution with every free variable set to zero and
/// residual is ||B z - b||_inf against the original system.
struct LinearSolveResult {
  bool consistent = false;
  CVector solution;
  int rank = 0;
  double residual = 0.0;
};

/// Gaussian elimination with partial pivoting by complex modulus
/// (lowest row index on ties). Deterministic: identical inputs produce
/// bitwise-identical outputs. Inconsistent systems are reported, not thrown.
LinearSolveResult solve_complex_linear(const CMatrix& B, const CVector& b,
                                       const Tolerances& tol = {});

}  // namespace cgt
