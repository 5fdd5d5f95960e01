#include <doctest.h>

#include <cmath>

#include "glcp/census.h"
#include "glcp/errors.h"
#include "glcp/face_lp.h"
#include "glcp/fixtures.h"
#include "glcp/independence.h"
#include "glcp/theorems.h"
#include "glcp/thresholds.h"
#include "helpers.h"
#include "oracles.h"

using namespace glcp;

namespace {

bool contains_vector(const SolutionCensus& c, const std::vector<double>& x) {
  return c.find(x).has_value();
}

}  // namespace

TEST_SUITE("sol_oracle") {

TEST_CASE("face LP basics") {
  // max y1 + y2  s.t.  y1 + y2 = 1,  y1 >= 0.25.
  LinearProgram lp;
  lp.eq = Eigen::MatrixXd{{1.0, 1.0}};
  lp.eq_rhs = Eigen::VectorXd::Ones(1);
  lp.ge = Eigen::MatrixXd{{1.0, 0.0}};
  lp.ge_rhs = Eigen::VectorXd::Constant(1, 0.25);
  lp.objective = Eigen::VectorXd{{1.0, 2.0}};
  LpResult r = maximize(lp);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.value == doctest::Approx(1.75));
  CHECK(r.solution(0) == doctest::Approx(0.25));

  // Redundant equality rows.
  lp.eq = Eigen::MatrixXd{{1.0, 1.0}, {2.0, 2.0}};
  lp.eq_rhs = Eigen::VectorXd{{1.0, 2.0}};
  r = maximize(lp);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.value == doctest::Approx(1.75));

  lp.ge_rhs(0) = 2.0;
  CHECK(maximize(lp).status == LpStatus::kInfeasible);

  LinearProgram open;
  open.eq = Eigen::MatrixXd(0, 1);
  open.eq_rhs = Eigen::VectorXd(0);
  open.ge = Eigen::MatrixXd{{1.0}};
  open.ge_rhs = Eigen::VectorXd::Ones(1);
  open.objective = Eigen::VectorXd::Ones(1);
  CHECK(maximize(open).status == LpStatus::kUnbounded);
}

TEST_CASE("census order") {
  const auto order = census_support_order(3);
  const std::vector<std::uint32_t> want{0b000, 0b001, 0b010, 0b100,
                                        0b011, 0b101, 0b110, 0b111};
  CHECK(order == want);
  CHECK(census_support_order(0) == std::vector<std::uint32_t>{0});
  CHECK(census_support_order(12).size() == 4096);
}

TEST_CASE("K3 has a single solution") {
  const SolutionCensus c = enumerate_solutions(LcpInstance(complete_graph(3), 0.5));
  REQUIRE(c.solutions.size() == 1);
  for (double v : c.solutions[0].x()) CHECK(v == doctest::Approx(0.5));
  CHECK(c.max_sol->value == doctest::Approx(1.5));
  CHECK(c.max_ics->value == doctest::Approx(1.5));
  CHECK(c.diagnostics.supports == 8);
  CHECK(c.integer_solutions.empty());
}

TEST_CASE("11-vertex maxima") {
  const Graph t = tight_eta_graph();
  const SolutionCensus hi = enumerate_solutions(LcpInstance(t, 0.7));
  CHECK(hi.max_sol->value == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(hi.max_sol_witness().x() == characteristic_vector(t, {1, 3, 5, 7, 9, 11}));
  CHECK(hi.max_ics->value == doctest::Approx(hi.max_sol->value).epsilon(1e-12));

  const SolutionCensus lo = enumerate_solutions(LcpInstance(t, 0.6));
  CHECK(lo.max_sol->value == doctest::Approx(10 / 1.6).epsilon(1e-12));
  CHECK(lo.max_sol_witness().support() == VertexSet{1, 2, 4, 5, 6, 7, 8, 9, 10, 11});
}

TEST_CASE("maxima through the convenience wrappers") {
  const LcpInstance p4(tight_gamma_graph(), 0.7);
  const CensusWitness m = max_sol(p4);
  CHECK(m.value == doctest::Approx(1 + 2 / 1.7));
  CHECK(m.witness.x()[0] == 1.0);
  CHECK(m.witness.x()[1] == 0.0);
  CHECK(m.witness.x()[2] == doctest::Approx(1 / 1.7));
  const auto mi = max_ics(p4);
  REQUIRE(mi.has_value());
  CHECK(mi->value == doctest::Approx(m.value));

  const auto one = max_sol(LcpInstance(edgeless_graph(1), 0.3));
  CHECK(one.value == 1.0);
  CHECK(one.witness.x() == std::vector<double>{1.0});

  const std::vector<double> w{1.0, 3.0, 0.5, 2.0, 1.0};
  const LcpInstance bull(bull_graph(), 1.2);
  CHECK(max_sol(bull, w).value == doctest::Approx(weighted_alpha(bull_graph(), w).value));
  CHECK_THROWS_AS(max_sol(bull, std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(max_sol(bull, std::vector<double>{1, 1, 1, 1, -1}),
                  std::invalid_argument);
}

TEST_CASE("integer solutions") {
  CHECK(integer_solutions(LcpInstance(cycle_graph(4), 0.5)) ==
        std::vector<VertexSet>{{1, 3}, {2, 4}});
  CHECK(integer_solutions(LcpInstance(cycle_graph(5), 0.5)).empty());
  const Graph p = petersen_graph();
  const auto maximal = oracle::dominating_independent_sets(p, 1);
  CHECK(integer_solutions(LcpInstance(p, 1.0)) == maximal);
  for (const auto& g : testing::sweep_graphs(25, 10, 53)) {
    for (double d : {0.3, 0.5, 0.9, 1.0, 1.5}) {
      const LcpInstance inst(g, d);
      const auto sets = integer_solutions(inst);
      CHECK(sets == oracle::dominating_independent_sets(g, inst.domination_order()));
      CHECK(enumerate_solutions(inst).integer_solutions == sets);
    }
  }
}

TEST_CASE("caps and degenerate sizes") {
  CHECK_THROWS_AS(enumerate_solutions(LcpInstance(edgeless_graph(21), 0.5)), CapExceeded);
  CensusOptions small;
  small.cap = 3;
  CHECK_THROWS_AS(enumerate_solutions(LcpInstance(path_graph(4), 0.5), small), CapExceeded);
  CHECK_THROWS_AS(integer_solutions(LcpInstance(path_graph(4), 0.5), 3), CapExceeded);
  const SolutionCensus empty = enumerate_solutions(LcpInstance(Graph(), 0.5));
  REQUIRE(empty.solutions.size() == 1);
  CHECK(empty.solutions[0].x().empty());
  CHECK(empty.max_sol->value == 0.0);
}

TEST_CASE("singular supports go through the face LP") {
  // delta = 1 makes every edge system singular. Solutions of P2 at delta 1
  // form the segment x1 + x2 = 1; the census keeps its endpoints.
  const SolutionCensus c = enumerate_solutions(LcpInstance(path_graph(2), 1.0));
  CHECK(c.diagnostics.singular_faces == 1);
  CHECK(c.solutions.size() == 2);
  CHECK(contains_vector(c, {1.0, 0.0}));
  CHECK(contains_vector(c, {0.0, 1.0}));
  CHECK(c.max_sol->value == doctest::Approx(1.0));

  // K3 at delta 1 as well: the face is the simplex x1 + x2 + x3 = 1.
  const SolutionCensus k3 = enumerate_solutions(LcpInstance(complete_graph(3), 1.0));
  CHECK(k3.max_sol->value == doctest::Approx(1.0));
  for (const auto& s : k3.solutions) CHECK(s.l1() == doctest::Approx(1.0));

  // Weighted objective picks the heavy endpoint.
  CensusOptions w;
  w.weights = {1.0, 2.0};
  const SolutionCensus cw = enumerate_solutions(LcpInstance(path_graph(2), 1.0), w);
  CHECK(cw.max_sol->value == doctest::Approx(2.0));
  CHECK(cw.max_sol_witness().x() == std::vector<double>{0.0, 1.0});
}

TEST_CASE("census invariants") {
  for (const auto& g : testing::sweep_graphs(25, 9, 59)) {
    for (double d : {0.35, 0.5, 0.75, 1.0, 1.3}) {
      const LcpInstance inst(g, d);
      const SolutionCensus c = enumerate_solutions(inst);
      REQUIRE(c.max_sol.has_value());
      for (const auto& s : c.solutions) {
        CHECK(verify_solution(inst, s.x()).valid());
        CHECK(s.l1() <= c.max_sol->value + 1e-12);
      }
      if (c.max_ics) CHECK(c.max_ics->value <= c.max_sol->value + 1e-12);
      for (const auto& s : c.integer_solutions) {
        CHECK(static_cast<double>(s.size()) <= (c.max_ics ? c.max_ics->value : 0) + 1e-9);
      }
      CHECK(c.diagnostics.supports == (1u << g.num_vertices()));
      CHECK(c.diagnostics.supports == c.diagnostics.nonsingular_solutions +
                                          c.diagnostics.singular_faces +
                                          c.diagnostics.infeasible);
    }
  }
}

TEST_CASE("worker count does not change the census") {
  for (const auto& g : {petersen_graph(), tight_eta_graph(), bull_graph()}) {
    for (double d : {0.6, 1.0}) {
      const LcpInstance inst(g, d);
      const SolutionCensus one = enumerate_solutions(inst);
      for (int workers : {2, 3, 8}) {
        CensusOptions o;
        o.workers = workers;
        const SolutionCensus many = enumerate_solutions(inst, o);
        CHECK(many.solutions == one.solutions);
        CHECK(many.max_sol == one.max_sol);
        CHECK(many.max_ics == one.max_ics);
        CHECK(many.diagnostics == one.diagnostics);
      }
    }
  }
}

TEST_CASE("fixed-point iteration finds nothing the census misses") {
  for (const auto& g : testing::sweep_graphs(10, 8, 61)) {
    for (double d : {0.45, 0.8, 1.3}) {
      const LcpInstance inst(g, d);
      const SolutionCensus c = enumerate_solutions(inst);
      const auto rep = oracle::fixed_point_search(inst, 20, 7);
      for (const auto& x : rep.found) CHECK(contains_vector(c, x));
    }
  }
}

TEST_CASE("optimality theorem report") {
  const Graph t = tight_eta_graph();
  const std::vector<double> grid{0.7, 0.8, 1.0, 1.3};
  TheoremOptions opts;
  opts.trials = 2;
  const TheoremReport rep = check_optimality_theorems(t, grid, opts);
  CHECK(rep.checks.size() == 20);
  CHECK(rep.all_passed());
  for (const auto& c : rep.checks) {
    if (c.delta < 1.0 && c.name == std::string(kCheckUniqueMis)) {
      CHECK(c.outcome == CheckOutcome::kPassed);
    }
  }

  const std::vector<double> low{0.6};
  const TheoremReport below = check_optimality_theorems(t, low, opts);
  CHECK(below.checks[0].name == std::string(kCheckIcsOptimal));
  CHECK(below.checks[0].outcome == CheckOutcome::kSkipped);
  CHECK(below.checks[0].detail == "below eta");

  const SolutionCensus two = enumerate_solutions(
      LcpInstance(disjoint_union(complete_graph(3), complete_graph(3)), 0.5));
  REQUIRE(two.solutions.size() == 1);
  for (double v : two.solutions[0].x()) CHECK(v == doctest::Approx(0.5));
}

}  // TEST_SUITE
