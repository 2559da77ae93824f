#include "cgt/solver.hpp"

#include <algorithm>
#include <cmath>

namespace cgt {

namespace {

CVector zero_pad(const CVector& reduced, const std::vector<int>& surviving, int full_dim) {
  CVector out = CVector::Zero(full_dim);
  for (size_t k = 0; k < surviving.size(); ++k)
    out(surviving[k] - 1) = reduced(static_cast<Eigen::Index>(k));
  return out;
}

void accept(SolveReport& report, const ComplexGame& g, CertificateMethod method,
            double value, CVector z, CVector w, const Tolerances& tol) {
  report.final_verification = verify_equilibrium(g, {z, w}, tol);
  FinalCertificate cert;
  cert.value = value;
  cert.z = std::move(z);
  cert.w = std::move(w);
  cert.method = method;
  cert.verified = report.final_verification.pass;
  cert.fair = std::abs(cert.value) <= tol.value;
  report.classification.fair = cert.fair;
  report.final = std::move(cert);
}

}  // namespace

SolveReport solve(const ComplexGame& g, const SolveOptions& opts) {
  const Tolerances& tol = opts.tol;
  SolveReport report;
  report.classification = classify(g, tol);
  report.pure = pure_security(g);
  report.pure_equilibria = pure_equilibria(g, tol);
  report.reduced_matrix = g.A;

  // Step 1: saddle in pure strategies.
  if (opts.method == SolveMethod::Auto &&
      report.pure.h_high - report.pure.h_low <= tol.value) {
    const CVector z = extreme_point(g.row_polytope(), report.pure.maximin);
    const CVector w = extreme_point(g.col_polytope(), report.pure.minimax);
    const double value = payoff(g, z, w);
    accept(report, g, CertificateMethod::Pure, value, z, w, tol);
    if (report.final->verified) return report;
    report.final.reset();  // fall through; the mixed pipeline still applies
  }

  // Step 2: iterated elimination.
  ComplexGame reduced = g;
  if (opts.method != SolveMethod::Lp) {
    auto [rgame, trace] = iterated_eliminate(g, tol);
    reduced = std::move(rgame);
    report.trace = std::move(trace);
    report.reduced_matrix = reduced.A;

    // Step 3: equalizing systems on the reduced game.
    report.equalizing_row = solve_equalizing_system(reduced, PlayerSide::I, tol);
    report.equalizing_col = solve_equalizing_system(reduced, PlayerSide::II, tol);
    const auto equalizing = equalizing_equilibrium(reduced, tol);
    if (equalizing) {
      report.equalizing_value = equalizing->value;
      const CVector z =
          zero_pad(equalizing->candidate.z, report.trace.surviving_rows, g.rows());
      const CVector w =
          zero_pad(equalizing->candidate.w, report.trace.surviving_cols, g.cols());
      report.elimination_conditions =
          check_elimination_condition(g, report.trace, z, w, tol);
      const bool conditions_met =
          std::all_of(report.elimination_conditions.begin(),
                      report.elimination_conditions.end(),
                      [](const EliminationConditionCheck& c) { return c.met; });
      if (conditions_met) {
        accept(report, g, CertificateMethod::Equalizing, equalizing->value, z, w, tol);
        if (report.final->verified) return report;
        report.final.reset();
      }
    }
    if (opts.method == SolveMethod::Equalizing) {
      report.failure_reason =
          !equalizing ? "no argument-feasible equalizing solution on the reduced game"
          : report.elimination_conditions.empty() ||
                  std::all_of(report.elimination_conditions.begin(),
                              report.elimination_conditions.end(),
                              [](const EliminationConditionCheck& c) { return c.met; })
              ? "equalizing candidate failed equilibrium verification on the original game"
              : "condition of elimination violated; the reduced-game solution does not "
                "certify the original game";
      return report;
    }
  }

  // Step 4: LP on the original matrix.
  report.lp = minimax(g, tol);
  accept(report, g, CertificateMethod::Lp,
         0.5 * (report.lp->v_low + report.lp->v_high), report.lp->z_opt,
         report.lp->w_opt, tol);
  if (!report.final->verified)
    throw NumericsError("solve: LP certificate failed verification");
  return report;
}

}  // namespace cgt
