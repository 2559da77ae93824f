#include "cgt/game_io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>

namespace cgt {

namespace {

double parse_angle(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("kind"))
    throw GameFileError(field + ": expected an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  double value;
  if (kind == "pi_fraction") {
    if (!j.contains("num") || !j.contains("den") || !j.at("num").is_number_integer() ||
        !j.at("den").is_number_integer())
      throw GameFileError(field + ": pi_fraction needs integer \"num\" and \"den\"");
    const long long den = j.at("den").get<long long>();
    if (den == 0) throw GameFileError(field + ".den: must be nonzero");
    // Frozen evaluation order: multiply by pi first, then divide.
    value = std::numbers::pi * static_cast<double>(j.at("num").get<long long>()) /
            static_cast<double>(den);
  } else if (kind == "radians") {
    if (!j.contains("value") || !j.at("value").is_number())
      throw GameFileError(field + ": radians needs a numeric \"value\"");
    value = j.at("value").get<double>();
  } else {
    throw GameFileError(field + ".kind: expected \"pi_fraction\" or \"radians\"");
  }
  if (!(value > 0.0) || !(value < std::numbers::pi / 2))
    throw GameFileError(field + ": argument must lie strictly in (0, pi/2)");
  return value;
}

Complex parse_complex(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw GameFileError(field + ": expected a [re, im] pair");
  const Complex c{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(c)) throw GameFileError(field + ": entries must be finite");
  return c;
}

}  // namespace

ComplexGame parse_game(const Json& j) {
  if (!j.is_object()) throw GameFileError("game file: expected a JSON object");
  for (const char* field : {"m", "n", "alpha", "beta", "matrix"})
    if (!j.contains(field))
      throw GameFileError(std::string(field) + ": missing required field");
  if (!j.at("m").is_number_integer() || !j.at("n").is_number_integer())
    throw GameFileError("m/n: expected integers");
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  if (m < 1) throw GameFileError("m: must be >= 1");
  if (n < 1) throw GameFileError("n: must be >= 1");
  const double alpha = parse_angle(j.at("alpha"), "alpha");
  const double beta = parse_angle(j.at("beta"), "beta");

  const Json& rows = j.at("matrix");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m)
    throw GameFileError("matrix: expected " + std::to_string(m) + " rows");
  CMatrix a(m, n);
  for (int i = 0; i < m; ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw GameFileError("matrix[" + std::to_string(i) + "]: expected " +
                          std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k)
      a(i, k) = parse_complex(row[static_cast<size_t>(k)],
                              "matrix[" + std::to_string(i) + "][" + std::to_string(k) +
                                  "]");
  }
  return ComplexGame(std::move(a), alpha, beta);
}

ComplexGame load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameFileError("cannot open game file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw GameFileError(path + ": " + e.what());
  }
  return parse_game(j);
}

Json game_to_json(const ComplexGame& g) {
  Json j;
  j["m"] = g.rows();
  j["n"] = g.cols();
  j["alpha"] = Json{{"kind", "radians"}, {"value", g.alpha}};
  j["beta"] = Json{{"kind", "radians"}, {"value", g.beta}};
  j["matrix"] = to_json(g.A);
  return j;
}

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const CMatrix& a) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const ExtremePointIndex& idx) {
  if (idx.is_trivial()) return Json{{"kind", "trivial"}, {"i", idx.p}};
  return Json{{"kind", "pair"}, {"p", idx.p}, {"q", idx.q}};
}

Json to_json(const PureSecurityReport& r) {
  return Json{{"h_low", r.h_low},
              {"h_high", r.h_high},
              {"maximin", to_json(r.maximin)},
              {"minimax", to_json(r.minimax)}};
}

Json to_json(const DominationClaim& claim) {
  Json j;
  j["axis"] = claim.axis == Axis::Row ? "row" : "column";
  j["target"] = claim.target;
  j["strict"] = claim.strict;
  if (const auto* single = std::get_if<DominationClaim::Single>(&claim.dominator)) {
    j["dominator"] = Json{{"kind", "single"}, {"index", single->index}};
  } else if (const auto* pair = std::get_if<DominationClaim::PairMix>(&claim.dominator)) {
    j["dominator"] = Json{{"kind", "pair"},
                          {"first", pair->first},
                          {"second", pair->second},
                          {"lambda", pair->lambda}};
  } else {
    const auto& mixed = std::get<DominationClaim::Mixed>(claim.dominator);
    j["dominator"] = Json{{"kind", "mixed"}, {"strategy", to_json(mixed.strategy)}};
  }
  return j;
}

Json to_json(const EliminationTrace& trace) {
  Json claims = Json::array();
  for (const auto& claim : trace.claims) claims.push_back(to_json(claim));
  return Json{{"claims", std::move(claims)},
              {"surviving_rows", trace.surviving_rows},
              {"surviving_cols", trace.surviving_cols}};
}

Json to_json(const EliminationConditionCheck& check) {
  return Json{{"axis", check.axis == Axis::Row ? "row" : "column"},
              {"target", check.target},
              {"lhs_im", check.lhs_im},
              {"rhs_im", check.rhs_im},
              {"met", check.met}};
}

Json to_json(const EqualizingSystemResult& r) {
  Json j;
  j["solvable"] = r.solvable;
  j["rank"] = r.rank;
  j["residual"] = r.residual;
  if (r.solution) {
    j["side"] = r.solution->side == PlayerSide::I ? "I" : "II";
    j["strategy"] = to_json(r.solution->strategy);
    j["constant"] = to_json(r.solution->constant);
    j["feasible"] = r.solution->feasible;
    j["system_solution"] = to_json(r.solution->system_solution);
  }
  return j;
}

Json to_json(const MinimaxResult& r) {
  return Json{{"v_low", r.v_low},
              {"v_high", r.v_high},
              {"gap", r.gap},
              {"z", to_json(r.z_opt)},
              {"w", to_json(r.w_opt)}};
}

Json to_json(const VerificationReport& r) {
  return Json{{"pass", r.pass},
              {"value", r.value},
              {"z_member", r.z_member},
              {"w_member", r.w_member},
              {"best_for_opponent_of_I", r.best_for_opponent_of_I},
              {"best_for_opponent_of_II", r.best_for_opponent_of_II},
              {"witness_I", to_json(r.witness_I)},
              {"witness_II", to_json(r.witness_II)}};
}

Json to_json(const GameClass& c) {
  Json j{{"square", c.square},
         {"skew_hermitian", c.skew_hermitian},
         {"common_argument", c.common_argument},
         {"symmetric", c.symmetric}};
  if (c.fair) j["fair"] = *c.fair;
  return j;
}

Json to_json(const ComplexLCPInstance& inst) {
  Json gamma = Json::array();
  for (Eigen::Index i = 0; i < inst.gamma.size(); ++i) gamma.push_back(inst.gamma(i));
  return Json{{"p", inst.M.rows()},
              {"M", to_json(inst.M)},
              {"q", to_json(inst.q)},
              {"gamma", std::move(gamma)}};
}

Json to_json(const LcpVerification& r) {
  return Json{{"y", to_json(r.y)},
              {"x_in_cone", r.x_in_cone},
              {"y_in_cone", r.y_in_cone},
              {"x_violations", r.x_violations},
              {"y_violations", r.y_violations},
              {"complementarity_residual", r.complementarity_residual},
              {"pass", r.pass}};
}

Json to_json(const SolveReport& r) {
  Json j;
  j["pure"] = to_json(r.pure);
  Json pure_eq = Json::array();
  for (const auto& [zi, wi] : r.pure_equilibria)
    pure_eq.push_back(Json::array({to_json(zi), to_json(wi)}));
  j["pure_equilibria"] = std::move(pure_eq);
  j["elimination"] = to_json(r.trace);
  j["reduced_matrix"] = to_json(r.reduced_matrix);
  j["equalizing_row"] = r.equalizing_row ? to_json(*r.equalizing_row) : Json(nullptr);
  j["equalizing_col"] = r.equalizing_col ? to_json(*r.equalizing_col) : Json(nullptr);
  j["equalizing_value"] = r.equalizing_value ? Json(*r.equalizing_value) : Json(nullptr);
  Json conds = Json::array();
  for (const auto& check : r.elimination_conditions) conds.push_back(to_json(check));
  j["elimination_conditions"] = std::move(conds);
  j["lp"] = r.lp ? to_json(*r.lp) : Json(nullptr);
  if (r.final) {
    const char* method_name = r.final->method == CertificateMethod::Pure ? "pure"
                              : r.final->method == CertificateMethod::Equalizing
                                  ? "equalizing"
                                  : "lp";
    j["final"] = Json{{"value", r.final->value},
                      {"z", to_json(r.final->z)},
                      {"w", to_json(r.final->w)},
                      {"method", method_name},
                      {"verified", r.final->verified},
                      {"fair", r.final->fair}};
    j["verification"] = to_json(r.final_verification);
  } else {
    j["final"] = Json(nullptr);
    j["failure_reason"] = r.failure_reason;
  }
  j["classification"] = to_json(r.classification);
  return j;
}

Complex complex_from_json(const Json& j) { return parse_complex(j, "value"); }

CVector cvector_from_json(const Json& j) {
  if (!j.is_array()) throw GameFileError("strategy: expected an array of [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) =
        parse_complex(j[i], "strategy[" + std::to_string(i) + "]");
  return v;
}

}  // namespace cgt
