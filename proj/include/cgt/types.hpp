#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace cgt {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Numeric slack knobs shared across the library.
///   feas  -- feasibility / membership slack
///   value -- payoff and game-value comparisons
///   rank  -- pivot threshold for elimination and simplex tableaus
struct Tolerances {
  double feas = 1e-9;
  double value = 1e-7;
  double rank = 1e-10;
};

enum class PlayerSide { I, II };

/// Internal numeric failure (duality gap blowup, impossible infeasibility).
/// Distinct from invalid input, which throws std::invalid_argument.
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

inline void require_finite(const CMatrix& a, const char* what) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_finite(a(i, j)))
        throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

inline void require_finite(const CVector& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_finite(v(i)))
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

}  // namespace cgt
