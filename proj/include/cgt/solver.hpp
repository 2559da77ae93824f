#pragma once

#include "cgt/domination.hpp"
#include "cgt/equalizing.hpp"
#include "cgt/lp.hpp"

#include <optional>
#include <string>

namespace cgt {

enum class SolveMethod { Auto, Equalizing, Lp };
enum class CertificateMethod { Pure, Equalizing, Lp };

struct SolveOptions {
  SolveMethod method = SolveMethod::Auto;
  Tolerances tol = {};
};

struct FinalCertificate {
  double value;
  CVector z;
  CVector w;
  CertificateMethod method;
  bool verified;  // verify_equilibrium outcome on the ORIGINAL game
  bool fair;      // |value| within tol.value of zero
};

/// Full pipeline trace: pure check, elimination log, equalizing systems,
/// condition-of-elimination verdicts, LP fallback, final certificate. Every
/// intermediate artifact is retained for audit.
struct SolveReport {
  PureSecurityReport pure;
  std::vector<std::pair<ExtremePointIndex, ExtremePointIndex>> pure_equilibria;

  EliminationTrace trace;
  CMatrix reduced_matrix;

  std::optional<EqualizingSystemResult> equalizing_row;  // on the reduced game
  std::optional<EqualizingSystemResult> equalizing_col;
  std::optional<double> equalizing_value;
  std::vector<EliminationConditionCheck> elimination_conditions;

  std::optional<MinimaxResult> lp;

  // Absent only when a forced method could not produce a certified
  // equilibrium; failure_reason says why. Auto mode always certifies.
  std::optional<FinalCertificate> final;
  std::string failure_reason;
  VerificationReport final_verification;  // against the original game

  GameClass classification;  // fair flag set when final is present
};

/// Pipeline: (1) pure saddle when the pure security levels coincide;
/// (2) iterated elimination; (3) equalizing systems on the reduced game,
/// zero-padded and accepted only when every elimination condition holds and
/// the padded pair verifies on the original game; (4) otherwise the LP on
/// the ORIGINAL matrix. A report is never returned with an unverified
/// certificate.
SolveReport solve(const ComplexGame& g, const SolveOptions& opts = {});

}  // namespace cgt
