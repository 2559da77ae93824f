#include "cgt/domination.hpp"

#include "cgt/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cgt {

namespace {

// Payoff of the pure line (row or column `index`, 1-based) against every
// opponent extreme point, canonical order.
RVector line_payoffs(const ComplexGame& g, Axis axis, int index) {
  if (axis == Axis::Row) {
    CVector e = CVector::Zero(g.rows());
    e(index - 1) = Complex{1.0, 0.0};
    return payoffs_vs_extreme_points(g, PlayerSide::I, e);
  }
  CVector e = CVector::Zero(g.cols());
  e(index - 1) = Complex{1.0, 0.0};
  return payoffs_vs_extreme_points(g, PlayerSide::II, e);
}

void check_line_index(const ComplexGame& g, Axis axis, int index, const char* what) {
  const int limit = axis == Axis::Row ? g.rows() : g.cols();
  if (index < 1 || index > limit)
    throw std::out_of_range(std::string(what) + ": line index out of range");
}

// target <= mix everywhere / strictly, in the orientation of the axis
// (a dominated column has the LARGER payoff to player I).
bool weakly_below(Axis axis, const RVector& target, const RVector& mix, double eps,
                  bool* witness) {
  bool any_strict = false;
  for (Eigen::Index k = 0; k < target.size(); ++k) {
    const double t = target(k);
    const double c = mix(k);
    if (axis == Axis::Row) {
      if (t > c + eps) return false;
      if (t < c - eps) any_strict = true;
    } else {
      if (t < c - eps) return false;
      if (t > c + eps) any_strict = true;
    }
  }
  if (witness) *witness = any_strict;
  return true;
}

bool strictly_below(Axis axis, const RVector& target, const RVector& mix, double eps) {
  for (Eigen::Index k = 0; k < target.size(); ++k) {
    if (axis == Axis::Row ? target(k) >= mix(k) - eps : target(k) <= mix(k) + eps)
      return false;
  }
  return true;
}

ComplexGame drop_line(const ComplexGame& g, Axis axis, int index) {
  if (axis == Axis::Row) {
    CMatrix a(g.rows() - 1, g.cols());
    int r = 0;
    for (int i = 0; i < g.rows(); ++i)
      if (i != index - 1) a.row(r++) = g.A.row(i);
    return ComplexGame(std::move(a), g.alpha, g.beta);
  }
  CMatrix a(g.rows(), g.cols() - 1);
  int c = 0;
  for (int j = 0; j < g.cols(); ++j)
    if (j != index - 1) a.col(c++) = g.A.col(j);
  return ComplexGame(std::move(a), g.alpha, g.beta);
}

}  // namespace

bool dominates_single(const ComplexGame& g, Axis axis, int target, int candidate,
                      bool strict, const Tolerances& tol) {
  check_line_index(g, axis, target, "dominates_single");
  check_line_index(g, axis, candidate, "dominates_single");
  if (target == candidate) return false;
  const RVector t = line_payoffs(g, axis, target);
  const RVector c = line_payoffs(g, axis, candidate);
  if (strict) return strictly_below(axis, t, c, tol.value);
  bool witness = false;
  return weakly_below(axis, t, c, tol.value, &witness) && witness;
}

std::optional<PairDomination> find_pair_domination(const ComplexGame& g, Axis axis,
                                                   int target, const Tolerances& tol) {
  check_line_index(g, axis, target, "find_pair_domination");
  const int lines = axis == Axis::Row ? g.rows() : g.cols();
  if (lines < 3) return std::nullopt;

  const RVector t = line_payoffs(g, axis, target);
  std::vector<RVector> payoffs(static_cast<size_t>(lines) + 1);
  for (int k = 1; k <= lines; ++k)
    if (k != target) payoffs[static_cast<size_t>(k)] = line_payoffs(g, axis, k);

  for (int i1 = 1; i1 <= lines; ++i1) {
    if (i1 == target) continue;
    for (int i2 = 1; i2 <= lines; ++i2) {
      if (i2 == target || i2 == i1) continue;
      const RVector& a = payoffs[static_cast<size_t>(i1)];
      const RVector& b = payoffs[static_cast<size_t>(i2)];

      // Each opponent extreme point bounds lambda linearly; intersect.
      double lo = 0.0, hi = 1.0;
      bool empty = false;
      for (Eigen::Index k = 0; k < t.size() && !empty; ++k) {
        const double delta = a(k) - b(k);
        // Row: t <= lambda*a + (1-lambda)*b + eps; column reversed.
        const double bound = axis == Axis::Row ? t(k) - b(k) - tol.value
                                               : t(k) - b(k) + tol.value;
        const double dust = 1e-14 * (1.0 + std::abs(a(k)) + std::abs(b(k)));
        if (std::abs(delta) <= dust) {
          if (axis == Axis::Row ? bound > 0.0 : bound < 0.0) empty = true;
          continue;
        }
        const double cut = bound / delta;
        const bool lower_bound = axis == Axis::Row ? delta > 0.0 : delta < 0.0;
        if (lower_bound)
          lo = std::max(lo, cut);
        else
          hi = std::min(hi, cut);
      }
      if (empty || lo > hi) continue;

      const double lambda = 0.5 * (lo + hi);
      if (!(lambda > 0.0) || !(lambda < 1.0)) continue;
      const RVector mix = lambda * a + (1.0 - lambda) * b;
      bool witness = false;
      if (!weakly_below(axis, t, mix, tol.value, &witness) || !witness) continue;
      return PairDomination{i1, i2, lambda, strictly_below(axis, t, mix, tol.value)};
    }
  }
  return std::nullopt;
}

std::optional<MixedDomination> find_mixed_domination(const ComplexGame& g, Axis axis,
                                                     int target, const Tolerances& tol) {
  check_line_index(g, axis, target, "find_mixed_domination");
  const StrategyPolytope own =
      axis == Axis::Row ? g.row_polytope() : g.col_polytope();
  const PlayerSide side = axis == Axis::Row ? PlayerSide::I : PlayerSide::II;
  const RVector t = line_payoffs(g, axis, target);
  const int opp_count = static_cast<int>(t.size());
  const int m = own.m;

  // Payoff row coefficients for the searched strategy against opponent
  // extreme point k, on the (x, y) embedding variables.
  const auto payoff_coeffs = [&](int k, int width) {
    RVector row = RVector::Zero(width);
    const auto indices = extreme_point_indices(
        side == PlayerSide::I ? g.cols() : g.rows());
    if (side == PlayerSide::I) {
      const CVector c =
          g.A * extreme_point(g.col_polytope(), indices[static_cast<size_t>(k)]);
      for (int i = 0; i < m; ++i) {
        row(i) = c(i).real();
        row(m + i) = c(i).imag();
      }
    } else {
      const Eigen::RowVectorXcd r =
          extreme_point(g.row_polytope(), indices[static_cast<size_t>(k)]).adjoint() *
          g.A;
      for (int j = 0; j < m; ++j) {
        row(j) = r(j).real();
        row(m + j) = -r(j).imag();
      }
    }
    return row;
  };

  const auto extract_strategy = [&](const RVector& sol) {
    CVector s(m);
    for (int i = 0; i < m; ++i) s(i) = Complex{sol(i), sol(m + i)};
    return s;
  };

  // Uniform-slack program: strict domination iff the optimum is positive.
  {
    RealEmbeddedLP lp = make_polytope_lp(own, 1, {"s"});
    lp.maximize = true;
    lp.objective(2 * m) = 1.0;
    for (int k = 0; k < opp_count; ++k) {
      RVector row = payoff_coeffs(k, lp.num_vars());
      row(2 * m) = -1.0;
      // Row axis: payoff(strategy) - s >= t_k; column axis: payoff + s <= t_k.
      if (axis == Axis::Row) {
        lp.rows.push_back({row, Relation::Ge, t(k)});
      } else {
        row(2 * m) = 1.0;
        lp.rows.push_back({row, Relation::Le, t(k)});
      }
    }
    const SimplexResult res = simplex_solve(lp, tol);
    if (res.status != SimplexResult::Status::Optimal)
      throw NumericsError("find_mixed_domination: slack program failed to solve");
    if (res.objective > tol.value)
      return MixedDomination{extract_strategy(res.solution), true, res.objective};
  }

  // Summed-slack program decides weak domination.
  {
    std::vector<std::string> names;
    for (int k = 0; k < opp_count; ++k) names.push_back("s" + std::to_string(k + 1));
    RealEmbeddedLP lp = make_polytope_lp(own, opp_count, names);
    lp.maximize = true;
    for (int k = 0; k < opp_count; ++k) {
      lp.objective(2 * m + k) = 1.0;
      lp.nonneg[static_cast<size_t>(2 * m + k)] = true;
    }
    for (int k = 0; k < opp_count; ++k) {
      RVector row = payoff_coeffs(k, lp.num_vars());
      if (axis == Axis::Row) {
        row(2 * m + k) = -1.0;
        lp.rows.push_back({row, Relation::Ge, t(k)});
      } else {
        row(2 * m + k) = 1.0;
        lp.rows.push_back({row, Relation::Le, t(k)});
      }
    }
    const SimplexResult res = simplex_solve(lp, tol);
    if (res.status != SimplexResult::Status::Optimal)
      throw NumericsError("find_mixed_domination: slack-sum program failed to solve");
    if (res.objective > tol.value)
      return MixedDomination{extract_strategy(res.solution), false, res.objective};
  }
  return std::nullopt;
}

std::pair<ComplexGame, EliminationTrace> iterated_eliminate(const ComplexGame& g,
                                                            const Tolerances& tol) {
  ComplexGame cur = g;
  EliminationTrace trace;
  trace.surviving_rows.resize(static_cast<size_t>(g.rows()));
  trace.surviving_cols.resize(static_cast<size_t>(g.cols()));
  std::iota(trace.surviving_rows.begin(), trace.surviving_rows.end(), 1);
  std::iota(trace.surviving_cols.begin(), trace.surviving_cols.end(), 1);

  const auto eliminate = [&](Axis axis, int index, DominationClaim claim) {
    auto& map = axis == Axis::Row ? trace.surviving_rows : trace.surviving_cols;
    map.erase(map.begin() + (index - 1));
    trace.claims.push_back(std::move(claim));
    cur = drop_line(cur, axis, index);
  };

  for (;;) {
    bool progressed = false;

    const auto scan_single = [&](Axis axis) {
      const int lines = axis == Axis::Row ? cur.rows() : cur.cols();
      if (lines < 2) return false;
      const auto& map =
          axis == Axis::Row ? trace.surviving_rows : trace.surviving_cols;
      for (int target = 1; target <= lines; ++target) {
        for (int cand = 1; cand <= lines; ++cand) {
          if (cand == target) continue;
          if (!dominates_single(cur, axis, target, cand, /*strict=*/false, tol))
            continue;
          const bool strict =
              dominates_single(cur, axis, target, cand, /*strict=*/true, tol);
          DominationClaim claim{axis, map[static_cast<size_t>(target - 1)],
                                DominationClaim::Single{map[static_cast<size_t>(cand - 1)]},
                                strict};
          eliminate(axis, target, std::move(claim));
          return true;
        }
      }
      return false;
    };

    const auto scan_pair = [&](Axis axis) {
      const int lines = axis == Axis::Row ? cur.rows() : cur.cols();
      if (lines < 3) return false;
      const auto& map =
          axis == Axis::Row ? trace.surviving_rows : trace.surviving_cols;
      for (int target = 1; target <= lines; ++target) {
        const auto found = find_pair_domination(cur, axis, target, tol);
        if (!found) continue;
        DominationClaim claim{
            axis, map[static_cast<size_t>(target - 1)],
            DominationClaim::PairMix{map[static_cast<size_t>(found->first - 1)],
                                     map[static_cast<size_t>(found->second - 1)],
                                     found->lambda},
            found->strict};
        eliminate(axis, target, std::move(claim));
        return true;
      }
      return false;
    };

    progressed = scan_single(Axis::Row) || scan_single(Axis::Column) ||
                 scan_pair(Axis::Row) || scan_pair(Axis::Column);
    if (!progressed) break;
  }
  return {cur, trace};
}

ComplexGame apply_trace(const ComplexGame& original, const EliminationTrace& trace) {
  std::vector<int> rows(static_cast<size_t>(original.rows()));
  std::vector<int> cols(static_cast<size_t>(original.cols()));
  std::iota(rows.begin(), rows.end(), 1);
  std::iota(cols.begin(), cols.end(), 1);
  for (const auto& claim : trace.claims) {
    auto& map = claim.axis == Axis::Row ? rows : cols;
    const auto it = std::find(map.begin(), map.end(), claim.target);
    if (it == map.end())
      throw std::invalid_argument("apply_trace: claim targets an already-removed line");
    map.erase(it);
  }
  CMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          original.A(rows[i] - 1, cols[j] - 1);
  return ComplexGame(std::move(a), original.alpha, original.beta);
}

std::vector<EliminationConditionCheck> check_elimination_condition(
    const ComplexGame& original, const EliminationTrace& trace, const CVector& z,
    const CVector& w, const Tolerances& tol) {
  if (z.size() != original.rows() || w.size() != original.cols())
    throw std::invalid_argument(
        "check_elimination_condition: strategies must use the original dimensions");
  require_finite(z, "check_elimination_condition");
  require_finite(w, "check_elimination_condition");

  const CVector against_rows = original.A * w;              // entry i: (e^i)^* A w
  const Eigen::RowVectorXcd against_cols = z.adjoint() * original.A;  // entry j: z^* A e^j

  std::vector<EliminationConditionCheck> out;
  out.reserve(trace.claims.size());
  for (const auto& claim : trace.claims) {
    const auto im_of = [&](int index) {
      return claim.axis == Axis::Row ? against_rows(index - 1).imag()
                                     : against_cols(index - 1).imag();
    };
    EliminationConditionCheck check;
    check.axis = claim.axis;
    check.target = claim.target;
    check.lhs_im = im_of(claim.target);
    if (const auto* single = std::get_if<DominationClaim::Single>(&claim.dominator)) {
      check.rhs_im = im_of(single->index);
    } else if (const auto* pair =
                   std::get_if<DominationClaim::PairMix>(&claim.dominator)) {
      check.rhs_im =
          pair->lambda * im_of(pair->first) + (1.0 - pair->lambda) * im_of(pair->second);
    } else {
      throw std::invalid_argument(
          "check_elimination_condition: mixed-strategy claims are diagnostic only");
    }
    check.met = std::abs(check.lhs_im - check.rhs_im) <= tol.value;
    out.push_back(check);
  }
  return out;
}

}  // namespace cgt
