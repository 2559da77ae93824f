#include "cgt/lp.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace cgt;
using std::numbers::pi;

namespace {

ComplexGame reduced_game() {
  CMatrix a(2, 2);
  a << Complex{2, 0}, Complex{1, 1},
       Complex{3, 1}, Complex{3, 0};
  return ComplexGame(a, pi / 4, 5 * pi / 12);
}

}  // namespace

TEST_CASE("simplex on scalar toy programs") {
  // maximize t subject to t <= 1
  RealEmbeddedLP lp;
  lp.maximize = true;
  lp.objective = RVector::Ones(1);
  lp.nonneg = {false};
  lp.names = {"t"};
  RVector row = RVector::Ones(1);
  lp.rows.push_back({row, Relation::Le, 1.0});
  auto res = simplex_solve(lp);
  REQUIRE(res.status == SimplexResult::Status::Optimal);
  CHECK(res.objective == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.solution(0) == doctest::Approx(1.0).epsilon(1e-12));

  // Remove the cap: unbounded.
  lp.rows.clear();
  lp.rows.push_back({row, Relation::Ge, -5.0});
  res = simplex_solve(lp);
  CHECK(res.status == SimplexResult::Status::Unbounded);

  // t >= 2 and t <= 1 cannot both hold.
  lp.rows.clear();
  lp.rows.push_back({row, Relation::Ge, 2.0});
  lp.rows.push_back({row, Relation::Le, 1.0});
  res = simplex_solve(lp);
  CHECK(res.status == SimplexResult::Status::Infeasible);
}

TEST_CASE("simplex handles a classic dense program") {
  // maximize 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18; optimum 36 at (2, 6).
  RealEmbeddedLP lp;
  lp.maximize = true;
  lp.objective = RVector(2);
  lp.objective << 3.0, 5.0;
  lp.nonneg = {true, true};
  lp.names = {"x", "y"};
  RVector r1(2), r2(2), r3(2);
  r1 << 1, 0;
  r2 << 0, 2;
  r3 << 3, 2;
  lp.rows.push_back({r1, Relation::Le, 4.0});
  lp.rows.push_back({r2, Relation::Le, 12.0});
  lp.rows.push_back({r3, Relation::Le, 18.0});
  const auto res = simplex_solve(lp);
  REQUIRE(res.status == SimplexResult::Status::Optimal);
  CHECK(res.objective == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(res.solution(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(res.solution(1) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("player embedding has the expected shape and coefficients") {
  const ComplexGame g = reduced_game();
  const RealEmbeddedLP lp = embed_player(g, PlayerSide::I);
  CHECK(lp.num_vars() == 5);  // x1 x2 y1 y2 t
  CHECK(lp.names.back() == "t");
  // Membership rows: 2 per coordinate + two sum rows; then 4 payoff rows.
  REQUIRE(lp.rows.size() == 2u * 2 + 2 + 4);

  // First payoff row corresponds to the opponent's e1: c = A e1 = (2, 3+i).
  const auto& first_payoff = lp.rows[6];
  CHECK(first_payoff.coeffs(0) == doctest::Approx(2.0));
  CHECK(first_payoff.coeffs(1) == doctest::Approx(3.0));
  CHECK(first_payoff.coeffs(2) == doctest::Approx(0.0));
  CHECK(first_payoff.coeffs(3) == doctest::Approx(1.0));
  CHECK(first_payoff.coeffs(4) == doctest::Approx(-1.0));
  CHECK(first_payoff.relation == Relation::Ge);

  // The uniform real strategy with a tiny value satisfies every row.
  RVector witness = RVector::Zero(5);
  witness(0) = witness(1) = 0.5;
  witness(4) = -100.0;
  for (const auto& row : lp.rows) {
    const double lhs = row.coeffs.dot(witness);
    if (row.relation == Relation::Ge) CHECK(lhs >= row.rhs - 1e-12);
    if (row.relation == Relation::Le) CHECK(lhs <= row.rhs + 1e-12);
    if (row.relation == Relation::Eq) CHECK(lhs == doctest::Approx(row.rhs));
  }

  const auto res = simplex_solve(lp);
  REQUIRE(res.status == SimplexResult::Status::Optimal);
  CHECK(res.objective == doctest::Approx(2.4).epsilon(1e-9));
}

TEST_CASE("minimax solves the worked reduced game") {
  const MinimaxResult mm = minimax(reduced_game());
  CHECK(mm.v_low == doctest::Approx(2.4).epsilon(1e-9));
  CHECK(mm.v_high == doctest::Approx(2.4).epsilon(1e-9));
  CHECK(std::abs(mm.gap) <= 1e-7);
}

TEST_CASE("minimax value of the symmetric example is zero") {
  CMatrix a(2, 2);
  a << Complex{0, 0}, Complex{1, 1}, Complex{-1, 1}, Complex{0, 0};
  const MinimaxResult mm = minimax(ComplexGame(a, pi / 4, pi / 4));
  CHECK(std::abs(mm.v_low) <= 1e-7);
  CHECK(std::abs(mm.v_high) <= 1e-7);
}

TEST_CASE("random games: gap, sandwich, membership, verification") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    const double args[] = {pi / 6, pi / 4, pi / 3};
    const ComplexGame g(oracle::random_matrix(m, n, 5.0, rng), args[rng() % 3],
                        args[rng() % 3]);
    const MinimaxResult mm = minimax(g);
    CHECK(mm.v_low <= mm.v_high + 1e-7);  // weak duality
    CHECK(std::abs(mm.gap) <= 1e-7);
    CHECK(contains(g.row_polytope(), mm.z_opt));
    CHECK(contains(g.col_polytope(), mm.w_opt));
    Tolerances wide;
    wide.value = 1e-6;  // 10x the value tolerance
    CHECK(verify_equilibrium(g, {mm.z_opt, mm.w_opt}, wide).pass);
  }
}

TEST_CASE("simplex is deterministic") {
  const ComplexGame g = reduced_game();
  const RealEmbeddedLP lp = embed_player(g, PlayerSide::I);
  const auto a = simplex_solve(lp);
  const auto b = simplex_solve(lp);
  CHECK(a.iterations == b.iterations);
  CHECK(a.objective == b.objective);
  for (Eigen::Index k = 0; k < a.solution.size(); ++k)
    CHECK(a.solution(k) == b.solution(k));
}

TEST_CASE("LP value agrees with a densely sampled security level") {
  // For m = 2 the coordinate sum pins z2 = 1 - z1, leaving two real degrees
  // of freedom; a dense two-stage grid over z1 samples well over 1e5
  // members and brackets the true max-min value to ~1e-5.
  std::mt19937 rng(99);
  for (int trial = 0; trial < 3; ++trial) {
    const ComplexGame g(oracle::random_matrix(2, 2, 2.0, rng), pi / 4, pi / 4);
    const MinimaxResult mm = minimax(g);

    const StrategyPolytope poly = g.row_polytope();
    const auto envelope_at = [&](double re, double im) {
      CVector z(2);
      z << Complex{re, im}, Complex{1.0 - re, -im};
      if (!contains(poly, z)) return -1e300;
      return payoffs_vs_extreme_points(g, PlayerSide::I, z).minCoeff();
    };

    double best_value = -1e300, best_re = 0.5, best_im = 0.0;
    const auto scan = [&](double re_lo, double re_hi, double im_lo, double im_hi,
                          int steps) {
      for (int a = 0; a <= steps; ++a) {
        const double re = re_lo + (re_hi - re_lo) * a / steps;
        for (int b = 0; b <= steps; ++b) {
          const double im = im_lo + (im_hi - im_lo) * b / steps;
          const double value = envelope_at(re, im);
          if (value > best_value) {
            best_value = value;
            best_re = re;
            best_im = im;
          }
        }
      }
    };
    scan(0.0, 1.0, -0.55, 0.55, 500);
    const double h = 1.0 / 500;
    scan(best_re - 2 * h, best_re + 2 * h, best_im - 2 * h, best_im + 2 * h, 400);
    CHECK(mm.v_low == doctest::Approx(best_value).epsilon(1e-3));
    CHECK(mm.v_low >= best_value - 1e-6);  // the LP can only do better
  }
}

TEST_CASE("LCP blocks for the worked reduced game") {
  const ComplexGame g = reduced_game();
  const ComplexLCPInstance inst = build_lcp(g);
  REQUIRE(inst.M.rows() == 6);  // m + n + 2

  // q = (1, 1, -1, -1, 0, 0) exactly.
  CHECK(inst.q(0) == Complex{1, 0});
  CHECK(inst.q(1) == Complex{1, 0});
  CHECK(inst.q(2) == Complex{-1, 0});
  CHECK(inst.q(3) == Complex{-1, 0});
  CHECK(inst.q(4) == Complex{0, 0});
  CHECK(inst.q(5) == Complex{0, 0});

  // gamma = (alpha, alpha, beta, beta, pi/2, pi/2) exactly.
  CHECK(inst.gamma(0) == pi / 4);
  CHECK(inst.gamma(1) == pi / 4);
  CHECK(inst.gamma(2) == 5 * pi / 12);
  CHECK(inst.gamma(3) == 5 * pi / 12);
  CHECK(inst.gamma(4) == pi / 2);
  CHECK(inst.gamma(5) == pi / 2);

  // Block (1,2) is -A entrywise; block (2,1) is A*.
  CHECK((inst.M.block(0, 2, 2, 2) + g.A).norm() == 0.0);
  CHECK((inst.M.block(2, 0, 2, 2) - g.A.adjoint()).norm() == 0.0);
  // All-ones blocks realized as column vectors / scalar rows.
  CHECK(inst.M(0, 4) == Complex{-1, 0});
  CHECK(inst.M(2, 5) == Complex{-1, 0});
  CHECK(inst.M(4, 0) == Complex{1, 0});
  CHECK(inst.M(5, 2) == Complex{1, 0});
}

TEST_CASE("LCP verification: zero candidate and cone violations") {
  const ComplexGame g = reduced_game();
  const ComplexLCPInstance inst = build_lcp(g);

  // x = 0: complementarity holds exactly; y = q sits inside the scalar
  // cones but violates the strategy ones (arg(-1) = pi).
  const CVector zero = CVector::Zero(6);
  const auto rep = verify_lcp(inst, zero);
  CHECK(rep.complementarity_residual == 0.0);
  CHECK(rep.x_in_cone);
  CHECK_FALSE(rep.y_in_cone);

  CVector bad = CVector::Zero(6);
  bad(0) = Complex{0.0, 1.0};  // arg = pi/2 > gamma_0 = pi/4
  const auto rep2 = verify_lcp(inst, bad);
  CHECK_FALSE(rep2.x_in_cone);
  REQUIRE(rep2.x_violations.size() == 1);
  CHECK(rep2.x_violations[0] == 1);
}

TEST_CASE("scaled minimax solution satisfies complementarity") {
  const ComplexGame g = reduced_game();
  const MinimaxResult mm = minimax(g);
  const CVector x = lcp_candidate_from_minimax(g, mm);
  const auto rep = verify_lcp(build_lcp(g), x);
  CHECK(rep.complementarity_residual <= 1e-9);
  CHECK(rep.x_in_cone);  // strategies scaled by a positive value keep their args
}
