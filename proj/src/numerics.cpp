#include "cgt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cgt {

namespace {

void check_argument_domain(double a0) {
  if (!(a0 > 0.0) || !(a0 < std::numbers::pi / 2))
    throw std::domain_error("strategy argument must lie strictly in (0, pi/2)");
}

}  // namespace

bool sector_contains(Complex c, double a0, const Tolerances& tol) {
  check_argument_domain(a0);
  if (!is_finite(c)) throw std::invalid_argument("sector_contains: non-finite value");
  if (c.real() < -tol.feas) return false;
  // max(Re, 0) keeps the admitted band monotone in a0 inside the slack strip.
  const double re = std::max(c.real(), 0.0);
  return std::abs(c.imag()) <= std::tan(a0) * re + tol.feas;
}

bool cone_contains(Complex c, double gamma, const Tolerances& tol) {
  if (!(gamma >= 0.0) || !(gamma <= std::numbers::pi / 2))
    throw std::domain_error("cone bound must lie in [0, pi/2]");
  if (!is_finite(c)) throw std::invalid_argument("cone_contains: non-finite value");
  if (c.real() < -tol.feas) return false;
  const double re = std::max(c.real(), 0.0);
  // |Im|*cos(gamma) <= Re*sin(gamma) stays well defined at gamma = pi/2.
  return std::abs(c.imag()) * std::cos(gamma) <= re * std::sin(gamma) + tol.feas;
}

LinearSolveResult solve_complex_linear(const CMatrix& B, const CVector& b,
                                       const Tolerances& tol) {
  if (B.rows() != b.size())
    throw std::invalid_argument("solve_complex_linear: dimension mismatch");
  require_finite(B, "solve_complex_linear");
  require_finite(b, "solve_complex_linear");

  const Eigen::Index rows = B.rows();
  const Eigen::Index cols = B.cols();
  CMatrix m = B;
  CVector rhs = b;

  std::vector<Eigen::Index> pivot_col_of_row;
  pivot_col_of_row.reserve(static_cast<size_t>(std::min(rows, cols)));

  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    double best = std::abs(m(row, col));
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      const double mag = std::abs(m(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best <= tol.rank) continue;  // free column
    if (pivot != row) {
      m.row(row).swap(m.row(pivot));
      std::swap(rhs(row), rhs(pivot));
    }
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      const Complex factor = m(r, col) / m(row, col);
      if (factor == Complex{0.0, 0.0}) continue;
      m.row(r) -= factor * m.row(row);
      m(r, col) = Complex{0.0, 0.0};
      rhs(r) -= factor * rhs(row);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }

  LinearSolveResult result;
  result.rank = static_cast<int>(pivot_col_of_row.size());

  const double rhs_scale = 1.0 + b.lpNorm<Eigen::Infinity>();

  // Rows past the pivot block must have (numerically) vanished right sides.
  for (Eigen::Index r = result.rank; r < rows; ++r) {
    if (std::abs(rhs(r)) > tol.feas * rhs_scale) {
      result.consistent = false;
      result.solution = CVector::Zero(cols);
      return result;
    }
  }

  CVector x = CVector::Zero(cols);
  for (int k = result.rank - 1; k >= 0; --k) {
    const Eigen::Index pc = pivot_col_of_row[static_cast<size_t>(k)];
    Complex acc = rhs(k);
    for (Eigen::Index c = pc + 1; c < cols; ++c) acc -= m(k, c) * x(c);
    x(pc) = acc / m(k, pc);
  }

  result.solution = x;
  result.residual = (B * x - b).lpNorm<Eigen::Infinity>();
  result.consistent = result.residual <= tol.feas * rhs_scale;
  return result;
}

}  // namespace cgt
