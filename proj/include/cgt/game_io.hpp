#pragma once

#include "cgt/solver.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace cgt {

using Json = nlohmann::json;

/// On-disk game description:
///   { "m": int, "n": int,
///     "alpha": {"kind":"pi_fraction","num":int,"den":int}
///            | {"kind":"radians","value":real},
///     "beta":  <same>,
///     "matrix": m x n array of [re, im] pairs, row major }
/// Parse failures throw GameFileError naming the offending field.
class GameFileError : public std::runtime_error {
 public:
  explicit GameFileError(const std::string& what) : std::runtime_error(what) {}
};

ComplexGame parse_game(const Json& j);
ComplexGame load_game_file(const std::string& path);
Json game_to_json(const ComplexGame& g);

// Machine-readable report pieces. Doubles serialize losslessly, so dumped
// reports re-parse to bitwise-identical values.
Json to_json(Complex c);
Json to_json(const CVector& v);
Json to_json(const CMatrix& a);
Json to_json(const ExtremePointIndex& idx);
Json to_json(const PureSecurityReport& r);
Json to_json(const DominationClaim& claim);
Json to_json(const EliminationTrace& trace);
Json to_json(const EliminationConditionCheck& check);
Json to_json(const EqualizingSystemResult& r);
Json to_json(const MinimaxResult& r);
Json to_json(const VerificationReport& r);
Json to_json(const GameClass& c);
Json to_json(const ComplexLCPInstance& inst);
Json to_json(const LcpVerification& r);
Json to_json(const SolveReport& r);

Complex complex_from_json(const Json& j);
CVector cvector_from_json(const Json& j);

}  // namespace cgt
