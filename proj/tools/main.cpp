// Command-line front end: loads a game description from JSON, runs the
// requested solver stage, and prints a text or machine-readable report.

#include "cgt/game_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>

namespace {

using namespace cgt;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fmt(Complex c) {
  std::string out = fmt(c.real());
  out += c.imag() < 0.0 ? " - " : " + ";
  out += fmt(std::abs(c.imag()));
  out += "i";
  return out;
}

std::string fmt(const CVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt(v(i));
  }
  return out + ")";
}

std::string fmt(const ExtremePointIndex& idx) {
  if (idx.is_trivial()) return "e" + std::to_string(idx.p);
  return "eta(" + std::to_string(idx.p) + "," + std::to_string(idx.q) + ")";
}

void print_matrix(const CMatrix& a, const std::string& indent) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::string line = indent + "[ ";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) line += ",  ";
      line += fmt(a(i, j));
    }
    std::cout << line << " ]\n";
  }
}

void emit(const Json& j, bool json_mode) {
  if (json_mode) std::cout << j.dump() << "\n";
}

void print_security(const PureSecurityReport& sec) {
  std::cout << "pure security levels:\n"
            << "  h_low  = " << fmt(sec.h_low) << "   (maximin at " << fmt(sec.maximin)
            << ")\n"
            << "  h_high = " << fmt(sec.h_high) << "   (minimax at " << fmt(sec.minimax)
            << ")\n"
            << "  gap    = " << fmt(sec.h_high - sec.h_low) << "\n";
}

void print_claim(const DominationClaim& claim) {
  std::cout << "  " << (claim.axis == Axis::Row ? "row " : "column ") << claim.target
            << (claim.strict ? " strictly" : " weakly") << " dominated by ";
  if (const auto* single = std::get_if<DominationClaim::Single>(&claim.dominator)) {
    std::cout << (claim.axis == Axis::Row ? "row " : "column ") << single->index;
  } else if (const auto* pair = std::get_if<DominationClaim::PairMix>(&claim.dominator)) {
    std::cout << (claim.axis == Axis::Row ? "rows " : "columns ") << pair->first
              << "," << pair->second << " at lambda = " << fmt(pair->lambda);
  } else {
    std::cout << "a mixed strategy";
  }
  std::cout << "\n";
}

void print_equalizing_side(const char* label, const EqualizingSystemResult& res) {
  std::cout << label;
  if (!res.solvable) {
    std::cout << "system inconsistent (rank " << res.rank << "); no equalizing strategy\n";
    return;
  }
  const auto& sol = *res.solution;
  std::cout << "strategy " << fmt(sol.strategy) << "\n"
            << "    constant " << fmt(sol.constant) << ", argument constraints "
            << (sol.feasible ? "satisfied" : "VIOLATED") << "\n";
}

void print_verification(const VerificationReport& ver) {
  std::cout << "verification: " << (ver.pass ? "pass" : "fail") << "\n"
            << "  payoff                 = " << fmt(ver.value) << "\n"
            << "  z in polytope          = " << (ver.z_member ? "yes" : "no") << "\n"
            << "  w in polytope          = " << (ver.w_member ? "yes" : "no") << "\n"
            << "  opponent best vs z     = " << fmt(ver.best_for_opponent_of_I) << " at "
            << fmt(ver.witness_I) << "\n"
            << "  opponent best vs w     = " << fmt(ver.best_for_opponent_of_II) << " at "
            << fmt(ver.witness_II) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"two-player zero-sum complex game solver"};
  app.require_subcommand(1);

  std::string file;
  double tol_value = 0.0;
  bool json_mode = false;
  std::string method = "auto";
  std::string z_arg, w_arg;
  bool lcp_check = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "game description (JSON)")->required();
    cmd->add_option("--tol", tol_value, "value-comparison tolerance (default 1e-7)");
    cmd->add_flag("--json", json_mode, "machine-readable output");
  };

  auto* info = app.add_subcommand("info", "dimensions, arguments, classification");
  add_common(info);
  auto* security = app.add_subcommand("security", "pure security levels");
  add_common(security);
  auto* pure_ne = app.add_subcommand("pure-ne", "pure complex Nash equilibria");
  add_common(pure_ne);
  auto* eliminate = app.add_subcommand("eliminate", "iterated domination elimination");
  add_common(eliminate);
  auto* equalize = app.add_subcommand("equalize", "equalizing systems and feasibility");
  add_common(equalize);
  auto* solve_cmd = app.add_subcommand("solve", "full solution pipeline");
  add_common(solve_cmd);
  solve_cmd->add_option("--method", method, "auto|equalizing|lp")
      ->check(CLI::IsMember({"auto", "equalizing", "lp"}));
  auto* verify_cmd = app.add_subcommand("verify", "check a supplied strategy pair");
  add_common(verify_cmd);
  verify_cmd->add_option("--z", z_arg, "player I strategy as [[re,im],...]")->required();
  verify_cmd->add_option("--w", w_arg, "player II strategy as [[re,im],...]")->required();
  auto* lcp_cmd = app.add_subcommand("lcp", "complementarity instance dump");
  add_common(lcp_cmd);
  lcp_cmd->add_flag("--verify", lcp_check, "verify the LP-derived candidate");

  CLI11_PARSE(app, argc, argv);

  Tolerances tol;
  if (tol_value != 0.0) {
    if (!(tol_value > 0.0)) throw GameFileError("--tol: must be strictly positive");
    tol.value = tol_value;
  }

  const ComplexGame game = load_game_file(file);

  if (info->parsed()) {
    const GameClass klass = classify(game, tol);
    if (json_mode) {
      Json j;
      j["game"] = game_to_json(game);
      j["classification"] = to_json(klass);
      emit(j, true);
      return 0;
    }
    std::cout << "game: " << game.rows() << " x " << game.cols() << "\n"
              << "alpha = " << fmt(game.alpha) << " rad, beta = " << fmt(game.beta)
              << " rad\n";
    print_matrix(game.A, "  ");
    std::cout << "square: " << (klass.square ? "yes" : "no")
              << ", skew-hermitian: " << (klass.skew_hermitian ? "yes" : "no")
              << ", common argument: " << (klass.common_argument ? "yes" : "no")
              << ", symmetric: " << (klass.symmetric ? "yes" : "no") << "\n";
    return 0;
  }

  if (security->parsed()) {
    const PureSecurityReport sec = pure_security(game);
    if (json_mode) {
      emit(to_json(sec), true);
      return 0;
    }
    print_security(sec);
    std::cout << (sec.h_high - sec.h_low <= tol.value
                      ? "saddle in pure strategies exists\n"
                      : "no saddle in pure strategies\n");
    return 0;
  }

  if (pure_ne->parsed()) {
    const auto pairs = pure_equilibria(game, tol);
    if (json_mode) {
      Json j = Json::array();
      for (const auto& [zi, wi] : pairs)
        j.push_back(Json::array({to_json(zi), to_json(wi)}));
      emit(j, true);
      return 0;
    }
    if (pairs.empty()) {
      std::cout << "no pure complex Nash equilibria\n";
    } else {
      std::cout << pairs.size() << " pure equilibrium pair(s):\n";
      for (const auto& [zi, wi] : pairs)
        std::cout << "  (" << fmt(zi) << ", " << fmt(wi) << ")\n";
    }
    return 0;
  }

  if (eliminate->parsed()) {
    const auto [reduced, trace] = iterated_eliminate(game, tol);
    if (json_mode) {
      Json j;
      j["trace"] = to_json(trace);
      j["reduced_matrix"] = to_json(reduced.A);
      emit(j, true);
      return 0;
    }
    if (trace.claims.empty()) {
      std::cout << "no dominated rows or columns\n";
    } else {
      std::cout << trace.claims.size() << " elimination(s):\n";
      for (const auto& claim : trace.claims) print_claim(claim);
    }
    std::cout << "reduced matrix (" << reduced.rows() << " x " << reduced.cols()
              << "):\n";
    print_matrix(reduced.A, "  ");
    return 0;
  }

  if (equalize->parsed()) {
    const auto row = solve_equalizing_system(game, PlayerSide::I, tol);
    const auto col = solve_equalizing_system(game, PlayerSide::II, tol);
    if (json_mode) {
      Json j;
      j["row_side"] = to_json(row);
      j["col_side"] = to_json(col);
      const auto eq = equalizing_equilibrium(game, tol);
      j["value"] = eq ? Json(eq->value) : Json(nullptr);
      emit(j, true);
      return 0;
    }
    print_equalizing_side("player I:  ", row);
    print_equalizing_side("player II: ", col);
    const auto eq = equalizing_equilibrium(game, tol);
    if (eq)
      std::cout << "equalizing equilibrium found, value = " << fmt(eq->value) << "\n";
    else
      std::cout << "no equalizing equilibrium\n";
    return 0;
  }

  if (solve_cmd->parsed()) {
    SolveOptions opts;
    opts.tol = tol;
    opts.method = method == "equalizing" ? SolveMethod::Equalizing
                  : method == "lp"       ? SolveMethod::Lp
                                         : SolveMethod::Auto;
    const SolveReport report = solve(game, opts);
    if (json_mode) {
      emit(to_json(report), true);
      return 0;
    }
    print_security(report.pure);
    if (report.trace.claims.empty()) {
      std::cout << "elimination: nothing dominated\n";
    } else {
      std::cout << "elimination:\n";
      for (const auto& claim : report.trace.claims) print_claim(claim);
      std::cout << "reduced matrix:\n";
      print_matrix(report.reduced_matrix, "  ");
    }
    if (report.equalizing_row) {
      print_equalizing_side("player I:  ", *report.equalizing_row);
      print_equalizing_side("player II: ", *report.equalizing_col);
    }
    if (report.equalizing_value)
      std::cout << "equalizing value (reduced game) = " << fmt(*report.equalizing_value)
                << "\n";
    for (const auto& check : report.elimination_conditions)
      std::cout << "condition of elimination for "
                << (check.axis == Axis::Row ? "row " : "column ") << check.target
                << ": Im values " << fmt(check.lhs_im) << " vs " << fmt(check.rhs_im)
                << (check.met ? " (met)" : " (NOT met)") << "\n";
    if (report.lp)
      std::cout << "lp: v_low = " << fmt(report.lp->v_low)
                << ", v_high = " << fmt(report.lp->v_high)
                << ", gap = " << fmt(report.lp->gap) << "\n";
    if (!report.final) {
      std::cout << "no certificate: " << report.failure_reason << "\n";
      return 0;
    }
    const char* method_name = report.final->method == CertificateMethod::Pure ? "pure"
                              : report.final->method == CertificateMethod::Equalizing
                                  ? "equalizing"
                                  : "lp";
    std::cout << "final: method=" << method_name
              << ", value = " << fmt(report.final->value) << "\n"
              << "  z = " << fmt(report.final->z) << "\n"
              << "  w = " << fmt(report.final->w) << "\n"
              << "  verified: " << (report.final->verified ? "yes" : "no")
              << ", fair: " << (report.final->fair ? "yes" : "no") << "\n";
    return 0;
  }

  if (verify_cmd->parsed()) {
    Json zj, wj;
    try {
      zj = Json::parse(z_arg);
      wj = Json::parse(w_arg);
    } catch (const Json::parse_error& e) {
      throw GameFileError(std::string("strategy argument: ") + e.what());
    }
    const CVector z = cvector_from_json(zj);
    const CVector w = cvector_from_json(wj);
    if (z.size() != game.rows())
      throw GameFileError("--z: expected " + std::to_string(game.rows()) + " entries");
    if (w.size() != game.cols())
      throw GameFileError("--w: expected " + std::to_string(game.cols()) + " entries");
    const VerificationReport ver = verify_equilibrium(game, {z, w}, tol);
    if (json_mode) {
      emit(to_json(ver), true);
      return 0;
    }
    print_verification(ver);
    return 0;
  }

  // lcp
  const ComplexLCPInstance inst = build_lcp(game);
  Json j;
  j["instance"] = to_json(inst);
  if (!json_mode) {
    std::cout << "complementarity instance, dimension " << inst.M.rows() << "\n"
              << "q = " << fmt(inst.q) << "\n";
    std::string gamma = "gamma = (";
    for (Eigen::Index i = 0; i < inst.gamma.size(); ++i) {
      if (i) gamma += ", ";
      gamma += fmt(inst.gamma(i));
    }
    std::cout << gamma << ")\nM =\n";
    print_matrix(inst.M, "  ");
  }
  if (lcp_check) {
    const MinimaxResult mm = minimax(game, tol);
    const double value = 0.5 * (mm.v_low + mm.v_high);
    if (value > 0.0) {
      const CVector x = lcp_candidate_from_minimax(game, mm);
      const LcpVerification ver = verify_lcp(inst, x, tol);
      j["candidate"] = to_json(x);
      j["verify"] = to_json(ver);
      if (!json_mode) {
        std::cout << "candidate x = " << fmt(x) << "\n"
                  << "complementarity residual = " << fmt(ver.complementarity_residual)
                  << "\n"
                  << "x cones: " << (ver.x_in_cone ? "satisfied" : "violated")
                  << ", y cones: " << (ver.y_in_cone ? "satisfied" : "violated") << "\n"
                  << "overall: " << (ver.pass ? "pass" : "fail") << "\n";
      }
    } else {
      j["verify"] = Json(nullptr);
      if (!json_mode)
        std::cout << "candidate unavailable: game value " << fmt(value)
                  << " is not positive (shift the payoffs first)\n";
    }
  }
  emit(j, json_mode);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const GameFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericsError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return 2;
  }
}
