#include "cgt/lp.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace cgt {

RealEmbeddedLP make_polytope_lp(const StrategyPolytope& poly, int extra_vars,
                                const std::vector<std::string>& extra_names) {
  if (extra_vars < 0 || static_cast<size_t>(extra_vars) != extra_names.size())
    throw std::invalid_argument("make_polytope_lp: bad extra variable spec");
  const int m = poly.m;
  const int n_vars = 2 * m + extra_vars;
  const double slope = std::tan(poly.a0);

  RealEmbeddedLP lp;
  lp.maximize = true;
  lp.objective = RVector::Zero(n_vars);
  lp.nonneg.assign(static_cast<size_t>(n_vars), false);
  for (int i = 0; i < m; ++i) {
    lp.nonneg[static_cast<size_t>(i)] = true;  // x_i >= 0
    lp.names.push_back("x" + std::to_string(i + 1));
  }
  for (int i = 0; i < m; ++i) lp.names.push_back("y" + std::to_string(i + 1));
  for (const auto& name : extra_names) lp.names.push_back(name);

  // |y_i| <= tan(a0) x_i, written as two one-sided rows.
  for (int i = 0; i < m; ++i) {
    RVector upper = RVector::Zero(n_vars);
    upper(i) = slope;
    upper(m + i) = -1.0;
    lp.rows.push_back({upper, Relation::Ge, 0.0});
    RVector lower = RVector::Zero(n_vars);
    lower(i) = slope;
    lower(m + i) = 1.0;
    lp.rows.push_back({lower, Relation::Ge, 0.0});
  }
  RVector sum_x = RVector::Zero(n_vars);
  sum_x.head(m).setOnes();
  lp.rows.push_back({sum_x, Relation::Eq, 1.0});
  RVector sum_y = RVector::Zero(n_vars);
  sum_y.segment(m, m).setOnes();
  lp.rows.push_back({sum_y, Relation::Eq, 0.0});
  return lp;
}

namespace {

// Dense two-phase tableau. Free variables are split into differences of
// nonnegative parts before standardization.
class Tableau {
 public:
  Tableau(const RealEmbeddedLP& lp, const Tolerances& tol) : tol_(tol) {
    const int n_orig = lp.num_vars();
    for (int v = 0; v < n_orig; ++v) {
      column_var_.push_back(v);
      column_sign_.push_back(1.0);
      if (!lp.nonneg[static_cast<size_t>(v)]) {
        column_var_.push_back(v);
        column_sign_.push_back(-1.0);
      }
    }
    n_struct_ = static_cast<int>(column_var_.size());
    const int n_rows = static_cast<int>(lp.rows.size());

    // Count slack and artificial columns after normalizing rhs signs.
    std::vector<Relation> rel(lp.rows.size());
    std::vector<double> sign(lp.rows.size(), 1.0);
    int n_slack = 0;
    int n_art = 0;
    for (size_t r = 0; r < lp.rows.size(); ++r) {
      rel[r] = lp.rows[r].relation;
      if (lp.rows[r].rhs < 0.0) {
        sign[r] = -1.0;
        if (rel[r] == Relation::Le)
          rel[r] = Relation::Ge;
        else if (rel[r] == Relation::Ge)
          rel[r] = Relation::Le;
      }
      if (rel[r] == Relation::Le) {
        ++n_slack;
      } else if (rel[r] == Relation::Ge) {
        ++n_slack;
        ++n_art;
      } else {
        ++n_art;
      }
    }

    n_total_ = n_struct_ + n_slack + n_art;
    first_art_ = n_struct_ + n_slack;
    a_ = RMatrix::Zero(n_rows, n_total_);
    rhs_ = RVector::Zero(n_rows);
    basis_.assign(static_cast<size_t>(n_rows), -1);

    int slack_col = n_struct_;
    int art_col = first_art_;
    for (int r = 0; r < n_rows; ++r) {
      const auto& row = lp.rows[static_cast<size_t>(r)];
      // Row equilibration: normalizing each row to unit scale keeps mixed
      // payoff/membership coefficient magnitudes from fighting each other.
      const double row_scale =
          std::max(row.coeffs.lpNorm<Eigen::Infinity>(), std::abs(row.rhs));
      const double s =
          sign[static_cast<size_t>(r)] / (row_scale > 0.0 ? row_scale : 1.0);
      for (int c = 0; c < n_struct_; ++c)
        a_(r, c) = s * column_sign_[static_cast<size_t>(c)] *
                   row.coeffs(column_var_[static_cast<size_t>(c)]);
      rhs_(r) = s * row.rhs;
      switch (rel[static_cast<size_t>(r)]) {
        case Relation::Le:
          a_(r, slack_col) = 1.0;
          basis_[static_cast<size_t>(r)] = slack_col++;
          break;
        case Relation::Ge:
          a_(r, slack_col++) = -1.0;
          a_(r, art_col) = 1.0;
          basis_[static_cast<size_t>(r)] = art_col++;
          break;
        case Relation::Eq:
          a_(r, art_col) = 1.0;
          basis_[static_cast<size_t>(r)] = art_col++;
          break;
      }
    }
    a_start_ = a_;
    rhs_start_ = rhs_;
    row_ids_.resize(static_cast<size_t>(n_rows));
    std::iota(row_ids_.begin(), row_ids_.end(), 0);

    // Min-form structural objective.
    cost_ = RVector::Zero(n_total_);
    for (int c = 0; c < n_struct_; ++c)
      cost_(c) = (lp.maximize ? -1.0 : 1.0) * column_sign_[static_cast<size_t>(c)] *
                 lp.objective(column_var_[static_cast<size_t>(c)]);
  }

  SimplexResult run(const RealEmbeddedLP& lp) {
    SimplexResult result;

    // Phase 1: minimize the artificial sum. Artificials start basic and
    // only ever leave, so the entering scan never revisits them.
    RVector phase1 = RVector::Zero(n_total_);
    for (int c = first_art_; c < n_total_; ++c) phase1(c) = 1.0;
    reprice(phase1);
    const bool phase1_ok = iterate(phase1, result.iterations);
    if (!phase1_ok || current_objective() > tol_.feas) {
      result.status = SimplexResult::Status::Infeasible;
      return result;
    }
    purge_artificials();

    // Phase 2 with the structural objective over the surviving rows.
    reprice(cost_);
    const bool bounded = iterate(cost_, result.iterations);
    if (!bounded) {
      result.status = SimplexResult::Status::Unbounded;
      return result;
    }

    // A polluted tableau must never pass as an optimum.
    RVector basic = RVector::Zero(n_total_);
    for (size_t r = 0; r < basis_.size(); ++r)
      basic(basis_[r]) = rhs_(static_cast<Eigen::Index>(r));
    const double residual = (a_start_ * basic - rhs_start_).lpNorm<Eigen::Infinity>();
    if (residual > 1e-6 * std::max(1.0, rhs_start_.lpNorm<Eigen::Infinity>()))
      throw NumericsError("simplex lost feasibility (residual " +
                          std::to_string(residual) + ")");

    result.status = SimplexResult::Status::Optimal;
    const double min_obj = current_objective();
    result.objective = lp.maximize ? -min_obj : min_obj;
    result.solution = RVector::Zero(lp.num_vars());
    for (size_t r = 0; r < basis_.size(); ++r) {
      const int col = basis_[r];
      if (col < n_struct_)
        result.solution(column_var_[static_cast<size_t>(col)]) +=
            column_sign_[static_cast<size_t>(col)] * rhs_(static_cast<Eigen::Index>(r));
    }
    return result;
  }

 private:
  double current_objective() const { return -offset_; }

  // Recomputes reduced costs and the objective offset for the current basis.
  void reprice(const RVector& phase_cost) {
    reduced_ = phase_cost;
    offset_ = 0.0;
    for (size_t r = 0; r < basis_.size(); ++r) {
      const int col = basis_[r];
      const double c = phase_cost(col);
      if (c == 0.0) continue;
      reduced_ -= c * a_.row(static_cast<Eigen::Index>(r)).transpose();
      offset_ -= c * rhs_(static_cast<Eigen::Index>(r));
    }
    for (int b : basis_) reduced_(b) = 0.0;
  }

  // Rebuilds the dictionary for the current basis directly from the original
  // standardized system, discarding accumulated pivot drift. Returns false
  // if the basis matrix has become numerically singular.
  bool refactorize(const RVector& phase_cost) {
    const int nr = static_cast<int>(basis_.size());
    RMatrix fresh(nr, n_total_);
    RVector fresh_rhs(nr);
    RMatrix basis_mat(nr, nr);
    for (int r = 0; r < nr; ++r) {
      fresh.row(r) = a_start_.row(row_ids_[static_cast<size_t>(r)]);
      fresh_rhs(r) = rhs_start_(row_ids_[static_cast<size_t>(r)]);
      for (int k = 0; k < nr; ++k)
        basis_mat(r, k) = fresh(r, basis_[static_cast<size_t>(k)]);
    }
    const Eigen::PartialPivLU<RMatrix> lu(basis_mat);
    RMatrix solved = lu.solve(fresh);
    RVector solved_rhs = lu.solve(fresh_rhs);
    if (!solved.allFinite() || !solved_rhs.allFinite()) return false;
    if ((basis_mat * solved_rhs - fresh_rhs).lpNorm<Eigen::Infinity>() >
        1e-7 * std::max(1.0, fresh_rhs.lpNorm<Eigen::Infinity>()))
      return false;
    a_ = std::move(solved);
    rhs_ = std::move(solved_rhs);
    for (int r = 0; r < nr; ++r) {
      a_.col(basis_[static_cast<size_t>(r)]).setZero();
      a_(r, basis_[static_cast<size_t>(r)]) = 1.0;
      if (rhs_(r) < 0.0 && rhs_(r) > -1e-9) rhs_(r) = 0.0;
    }
    reprice(phase_cost);
    return true;
  }

  // Dantzig entering (most negative reduced cost) with largest-pivot ratio
  // tie-breaks for stability; Bland's lowest-index rule engages after a
  // degenerate streak as the anti-cycling device. Pivot entries are screened
  // against their row and column scales so cancellation residue in a
  // blown-up tableau counts as the zero it really is, and the dictionary is
  // refactorized periodically and before any optimal/unbounded conclusion.
  bool iterate(const RVector& phase_cost, int& iterations) {
    const int n_rows = static_cast<int>(basis_.size());
    int since_refactor = 0;
    int degenerate_streak = 0;
    bool fresh = false;
    for (;;) {
      if (iterations > 100000)
        throw NumericsError("simplex failed to converge (iteration cap)");
      const bool bland = degenerate_streak >= 40;

      int entering = -1;
      double most_negative = -tol_.feas;
      for (int c = 0; c < first_art_; ++c) {
        if (reduced_(c) >= most_negative || is_basic(c)) continue;
        entering = c;
        if (bland) break;
        most_negative = reduced_(c);
      }
      if (entering < 0) {
        if (fresh || !refactorize(phase_cost)) return true;  // optimal
        fresh = true;
        since_refactor = 0;
        continue;
      }

      int leaving = -1;
      double best_ratio = 0.0;
      const double col_scale = a_.col(entering).lpNorm<Eigen::Infinity>();
      for (int r = 0; r < n_rows; ++r) {
        const double entry = a_(r, entering);
        const double scale =
            std::max({1.0, col_scale, a_.row(r).lpNorm<Eigen::Infinity>()});
        if (entry <= tol_.rank * scale) continue;
        const double ratio = rhs_(r) / entry;
        bool better = leaving < 0 || ratio < best_ratio;
        if (!better && ratio == best_ratio) {
          better = bland ? basis_[static_cast<size_t>(r)] <
                               basis_[static_cast<size_t>(leaving)]
                         : entry > a_(leaving, entering);
        }
        if (better) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        if (fresh || !refactorize(phase_cost)) return false;  // unbounded
        fresh = true;
        since_refactor = 0;
        continue;
      }

      degenerate_streak = best_ratio <= tol_.rank ? degenerate_streak + 1 : 0;
      pivot(leaving, entering);
      ++iterations;
      fresh = false;
      if (++since_refactor >= 25) {
        refactorize(phase_cost);
        since_refactor = 0;
      }
    }
  }

  bool is_basic(int col) const {
    for (int b : basis_)
      if (b == col) return true;
    return false;
  }

  void pivot(int row, int col) {
    const double p = a_(row, col);
    a_.row(row) /= p;
    rhs_(row) /= p;
    a_(row, col) = 1.0;
    for (int r = 0; r < a_.rows(); ++r) {
      if (r == row) continue;
      const double factor = a_(r, col);
      if (factor == 0.0) continue;
      a_.row(r) -= factor * a_.row(row);
      a_(r, col) = 0.0;
      rhs_(r) -= factor * rhs_(row);
      if (rhs_(r) < 0.0 && rhs_(r) > -1e-13) rhs_(r) = 0.0;
    }
    const double cfac = reduced_(col);
    if (cfac != 0.0) {
      reduced_ -= cfac * a_.row(row).transpose();
      reduced_(col) = 0.0;
      offset_ -= cfac * rhs_(row);
    }
    basis_[static_cast<size_t>(row)] = col;
  }

  // Pivot artificial variables out of the basis; rows that cannot be
  // repaired are redundant and get dropped.
  void purge_artificials() {
    std::vector<int> keep;
    for (int r = 0; r < static_cast<int>(basis_.size()); ++r) {
      if (basis_[static_cast<size_t>(r)] < first_art_) {
        keep.push_back(r);
        continue;
      }
      int col = -1;
      const double row_scale = std::max(1.0, a_.row(r).lpNorm<Eigen::Infinity>());
      for (int c = 0; c < first_art_; ++c) {
        if (std::abs(a_(r, c)) > tol_.rank * row_scale && !is_basic(c)) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        pivot(r, col);
        keep.push_back(r);
      }
      // else: dependent row, dropped below
    }
    if (keep.size() == basis_.size()) return;
    RMatrix na(static_cast<Eigen::Index>(keep.size()), n_total_);
    RVector nr(static_cast<Eigen::Index>(keep.size()));
    std::vector<int> nb;
    std::vector<int> nids;
    for (size_t k = 0; k < keep.size(); ++k) {
      na.row(static_cast<Eigen::Index>(k)) = a_.row(keep[k]);
      nr(static_cast<Eigen::Index>(k)) = rhs_(keep[k]);
      nb.push_back(basis_[static_cast<size_t>(keep[k])]);
      nids.push_back(row_ids_[static_cast<size_t>(keep[k])]);
    }
    a_ = std::move(na);
    rhs_ = std::move(nr);
    basis_ = std::move(nb);
    row_ids_ = std::move(nids);
  }

  Tolerances tol_;
  int n_struct_ = 0;
  int n_total_ = 0;
  int first_art_ = 0;
  std::vector<int> column_var_;
  std::vector<double> column_sign_;
  RMatrix a_;
  RVector rhs_;
  RMatrix a_start_;  // standardized system as built, for refactorization
  RVector rhs_start_;
  std::vector<int> row_ids_;  // surviving row -> original standardized row
  std::vector<int> basis_;
  RVector cost_;
  RVector reduced_;
  double offset_ = 0.0;
};

}  // namespace

SimplexResult simplex_solve(const RealEmbeddedLP& lp, const Tolerances& tol) {
  if (lp.num_vars() == 0) throw std::invalid_argument("simplex_solve: empty program");
  for (const auto& row : lp.rows)
    if (row.coeffs.size() != lp.objective.size())
      throw std::invalid_argument("simplex_solve: ragged constraint row");
  if (lp.nonneg.size() != static_cast<size_t>(lp.num_vars()))
    throw std::invalid_argument("simplex_solve: variable bound list mismatch");
  Tableau tableau(lp, tol);
  return tableau.run(lp);
}

RealEmbeddedLP embed_player(const ComplexGame& g, PlayerSide side) {
  if (side == PlayerSide::I) {
    const StrategyPolytope own = g.row_polytope();
    RealEmbeddedLP lp = make_polytope_lp(own, 1, {"t"});
    const int m = own.m;
    lp.maximize = true;
    lp.objective(2 * m) = 1.0;
    for (const auto& idx : extreme_point_indices(g.cols())) {
      const CVector c = g.A * extreme_point(g.col_polytope(), idx);
      RVector row = RVector::Zero(lp.num_vars());
      for (int i = 0; i < m; ++i) {
        row(i) = c(i).real();
        row(m + i) = c(i).imag();
      }
      row(2 * m) = -1.0;
      lp.rows.push_back({row, Relation::Ge, 0.0});
    }
    return lp;
  }
  const StrategyPolytope own = g.col_polytope();
  RealEmbeddedLP lp = make_polytope_lp(own, 1, {"t"});
  const int n = own.m;
  lp.maximize = false;
  lp.objective(2 * n) = 1.0;
  for (const auto& idx : extreme_point_indices(g.rows())) {
    const Eigen::RowVectorXcd r =
        extreme_point(g.row_polytope(), idx).adjoint() * g.A;
    RVector row = RVector::Zero(lp.num_vars());
    for (int j = 0; j < n; ++j) {
      row(j) = r(j).real();
      row(n + j) = -r(j).imag();
    }
    row(2 * n) = -1.0;
    lp.rows.push_back({row, Relation::Le, 0.0});
  }
  return lp;
}

MinimaxResult minimax(const ComplexGame& g, const Tolerances& tol) {
  const SimplexResult lo = simplex_solve(embed_player(g, PlayerSide::I), tol);
  const SimplexResult hi = simplex_solve(embed_player(g, PlayerSide::II), tol);
  if (lo.status != SimplexResult::Status::Optimal ||
      hi.status != SimplexResult::Status::Optimal)
    throw NumericsError(
        "minimax: embedded program failed to solve (expected feasible and bounded)");

  MinimaxResult result;
  result.v_low = lo.objective;
  result.v_high = hi.objective;
  result.gap = result.v_high - result.v_low;
  const int m = g.rows();
  const int n = g.cols();
  result.z_opt = CVector(m);
  for (int i = 0; i < m; ++i)
    result.z_opt(i) = Complex{lo.solution(i), lo.solution(m + i)};
  result.w_opt = CVector(n);
  for (int j = 0; j < n; ++j)
    result.w_opt(j) = Complex{hi.solution(j), hi.solution(n + j)};

  if (std::abs(result.gap) > tol.value) {
    std::ostringstream msg;
    msg << "minimax: duality gap " << result.gap << " exceeds tolerance " << tol.value
        << " (v_low=" << result.v_low << ", v_high=" << result.v_high << ")";
    throw NumericsError(msg.str());
  }
  return result;
}

ComplexLCPInstance build_lcp(const ComplexGame& g) {
  const int m = g.rows();
  const int n = g.cols();
  const int p = m + n + 2;
  ComplexLCPInstance inst;
  inst.M = CMatrix::Zero(p, p);
  inst.M.block(0, m, m, n) = -g.A;
  inst.M.block(0, m + n, m, 1) = -CVector::Ones(m);
  inst.M.block(m, 0, n, m) = g.A.adjoint();
  inst.M.block(m, m + n + 1, n, 1) = -CVector::Ones(n);
  inst.M.block(m + n, 0, 1, m) = Eigen::RowVectorXcd::Ones(m);
  inst.M.block(m + n + 1, m, 1, n) = Eigen::RowVectorXcd::Ones(n);

  inst.q = CVector::Zero(p);
  inst.q.head(m).setOnes();
  inst.q.segment(m, n).setConstant(Complex{-1.0, 0.0});

  inst.gamma = RVector::Zero(p);
  inst.gamma.head(m).setConstant(g.alpha);
  inst.gamma.segment(m, n).setConstant(g.beta);
  inst.gamma(m + n) = std::numbers::pi / 2;
  inst.gamma(m + n + 1) = std::numbers::pi / 2;
  return inst;
}

LcpVerification verify_lcp(const ComplexLCPInstance& inst, const CVector& x,
                           const Tolerances& tol) {
  const Eigen::Index p = inst.M.rows();
  if (inst.M.cols() != p || inst.q.size() != p || inst.gamma.size() != p ||
      x.size() != p)
    throw std::invalid_argument("verify_lcp: dimension mismatch");
  require_finite(x, "verify_lcp");

  LcpVerification report;
  report.y = inst.q + inst.M * x;
  const double half_pi = std::numbers::pi / 2;
  for (Eigen::Index k = 0; k < p; ++k) {
    if (!cone_contains(x(k), inst.gamma(k), tol))
      report.x_violations.push_back(static_cast<int>(k) + 1);
    if (!cone_contains(report.y(k), half_pi - inst.gamma(k), tol))
      report.y_violations.push_back(static_cast<int>(k) + 1);
  }
  report.x_in_cone = report.x_violations.empty();
  report.y_in_cone = report.y_violations.empty();
  report.complementarity_residual = std::abs((x.adjoint() * report.y).value().real());
  report.pass = report.x_in_cone && report.y_in_cone &&
                report.complementarity_residual <= tol.feas;
  return report;
}

CVector lcp_candidate_from_minimax(const ComplexGame& g, const MinimaxResult& mm) {
  const double v = 0.5 * (mm.v_low + mm.v_high);
  if (!(v > 0.0))
    throw std::domain_error(
        "lcp_candidate_from_minimax: game value must be positive for the scaled "
        "candidate");
  const int m = g.rows();
  const int n = g.cols();
  CVector x = CVector::Zero(m + n + 2);
  x.head(m) = mm.z_opt / v;
  x.segment(m, n) = mm.w_opt / v;
  return x;
}

}  // namespace cgt
