#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "glcp/census.h"
#include "glcp/clique_cover.h"
#include "glcp/errors.h"
#include "glcp/fixtures.h"
#include "glcp/lcp.h"
#include "glcp/thresholds.h"
#include "helpers.h"
#include "oracles.h"

using namespace glcp;
using testing::kGolden;

TEST_SUITE("lcp_model") {

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(LcpInstance(path_graph(2), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(LcpInstance(path_graph(2), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(LcpInstance(path_graph(2), 0.5, -1e-9), std::invalid_argument);
  CHECK_THROWS_AS(LcpInstance(path_graph(2), std::nan("")), std::invalid_argument);
  CHECK(LcpInstance(path_graph(2), 0.5).domination_order() == 2);
  CHECK(LcpInstance(path_graph(2), 0.3).domination_order() == 4);
  CHECK(LcpInstance(path_graph(2), 1.0).domination_order() == 1);
  CHECK(LcpInstance(path_graph(2), 2.5).domination_order() == 1);
}

TEST_CASE("discounted closed neighborhood") {
  for (double d : {0.3, 0.7, 1.4}) {
    const LcpInstance inst(tight_gamma_graph(), d);
    const auto c = discounted_closed_neighborhood(
        inst, std::vector<double>{1, 0, 1 / (1 + d), 1 / (1 + d)});
    CHECK(c[1] == doctest::Approx(d * (1 + 1 / (1 + d))));
    CHECK(discounted_closed_neighborhood(inst, std::vector<double>(4, 0.0)) ==
          std::vector<double>(4, 0.0));
  }
  const LcpInstance k3(complete_graph(3), 0.5);
  for (double v : discounted_closed_neighborhood(k3, std::vector<double>(3, 0.5))) {
    CHECK(v == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(discounted_closed_neighborhood(k3, std::vector<double>(2, 0.5)),
                  std::invalid_argument);
}

TEST_CASE("verify_solution") {
  const std::vector<double> ok{1, 0, 1 / 1.7, 1 / 1.7};
  CHECK(verify_solution(LcpInstance(tight_gamma_graph(), 0.7), ok).valid());

  const Verdict bad = verify_solution(LcpInstance(tight_gamma_graph(), 0.5),
                                      std::vector<double>{1, 0, 1 / 1.5, 1 / 1.5});
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].vertex == 2);
  CHECK(bad.violations[0].condition == Condition::kFeasibility);
  CHECK(bad.violations[0].residual + 1.0 == doctest::Approx(0.5 * (1 + 1 / 1.5)));

  const Verdict zero =
      verify_solution(LcpInstance(petersen_graph(), 0.6), std::vector<double>(10, 0.0));
  CHECK(zero.violations.size() == 10);
  for (const auto& v : zero.violations) CHECK(v.condition == Condition::kFeasibility);

  const Verdict neg = verify_solution(LcpInstance(path_graph(2), 0.5),
                                      std::vector<double>{-0.1, 1.0});
  CHECK(neg.violations.front().condition == Condition::kNonnegativity);
  const Verdict comp = verify_solution(LcpInstance(path_graph(2), 0.5),
                                       std::vector<double>{1.0, 1.0});
  CHECK(comp.violations.size() == 2);
  CHECK(comp.violations[0].condition == Condition::kComplementarity);

  CHECK_THROWS_AS(verify_solution(LcpInstance(path_graph(2), 0.5),
                                  std::vector<double>{1.0, std::nan("")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_solution(LcpInstance(path_graph(2), 0.5),
                                  std::vector<double>{1.0}),
                  std::invalid_argument);
}

TEST_CASE("integer solutions") {
  const LcpInstance c4(cycle_graph(4), 0.5);
  CHECK(check_integer_characterization(c4, {1, 3}));
  CHECK(is_integer_solution(c4, std::vector<double>{1, 0, 1, 0}));
  const LcpInstance k3(complete_graph(3), 0.5);
  CHECK_FALSE(check_integer_characterization(k3, {1}));
  CHECK_FALSE(is_integer_solution(k3, std::vector<double>{1, 0, 0}));
  CHECK_THROWS_AS(is_integer_solution(k3, std::vector<double>{0.5, 0, 0}),
                  std::invalid_argument);
  const Graph p = petersen_graph();
  for (const auto& s : alpha(p).witnesses) {
    CHECK(check_integer_characterization(LcpInstance(p, 1.0), s));
  }
}

TEST_CASE("potential and stationarity") {
  const Graph t = tight_eta_graph();
  for (double d : {0.3, 0.9, 1.7}) {
    const LcpInstance inst(t, d);
    const VertexSet s{1, 3, 5, 7, 9, 11};
    CHECK(potential(inst, characteristic_vector(t, s)) == doctest::Approx(3.0));
    CHECK(potential(inst, std::vector<double>(11, 0.0)) == 0.0);
    CHECK_FALSE(is_stationary_point(inst, std::vector<double>(11, 0.0)));
  }
  const LcpInstance p4(tight_gamma_graph(), 0.7);
  CHECK(is_stationary_point(p4, std::vector<double>{1, 0, 1 / 1.7, 1 / 1.7}));
  CHECK_THROWS_AS(potential(p4, std::vector<double>{-1, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("stationary points are exactly the solutions") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution zero(0.4);
  for (const auto& g : testing::sweep_graphs(20, 8, 23)) {
    for (double d : {0.4, 0.8, 1.3}) {
      const LcpInstance inst(g, d);
      for (int t = 0; t < 30; ++t) {
        std::vector<double> x(g.num_vertices());
        for (double& v : x) v = zero(rng) ? 0.0 : unit(rng);
        CHECK(is_stationary_point(inst, x) == verify_solution(inst, x).valid());
      }
      for (const auto& s : enumerate_solutions(inst).solutions) {
        CHECK(is_stationary_point(inst, s.x()));
      }
    }
  }
}

TEST_CASE("gamma_mn and the two-clique condition") {
  CHECK(gamma_mn(2, 1) == doctest::Approx(kGolden).epsilon(1e-14));
  CHECK(gamma_mn(1, 1) == 0.5);
  CHECK_THROWS_AS(gamma_mn(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(gamma_mn(2, 0), std::invalid_argument);
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      const double g = gamma_mn(m, n);
      CHECK(g > 0.0);
      CHECK(g <= 1.0);
      const double q = (m + n - 2) * g * g + (3 - m) * g - 1;
      CHECK(std::abs(q) < 1e-12);
      if (n > 1) CHECK(g <= gamma_mn(m, n - 1) + 1e-15);
      if (m > 1) CHECK(g >= gamma_mn(m - 1, n) - 1e-15);
    }
  }

  CHECK(two_clique_condition(0.7, 2, 1));
  CHECK_FALSE(two_clique_condition(0.5, 1, 2));
  for (int w = 1; w <= 6; ++w) CHECK(two_clique_condition(0.999, w, w));
  CHECK_THROWS_AS(two_clique_condition(1.0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(two_clique_condition(0.0, 1, 1), std::invalid_argument);
  for (double d = 0.05; d < 1.0; d += 0.0137) {
    for (int m = 1; m <= 5; ++m) {
      for (int n = 1; n <= 5; ++n) {
        const bool direct = d * (n / (1 + (n - 1) * d) + 1 / (1 + (m - 1) * d)) >= 1 - 1e-12;
        CHECK(two_clique_condition(d, n, m) == (d >= gamma_mn(m, n) - 1e-9));
        CHECK(two_clique_condition(d, n, m) == direct);
      }
    }
  }

  // Vertex 2 of P4 sees the whole clique {1} and part of {3, 4}.
  const LcpInstance p4(tight_gamma_graph(), 0.7);
  CHECK(two_clique_condition(p4, 2, {1}, {3, 4}));
  CHECK_FALSE(two_clique_condition(p4.with_delta(0.5), 2, {1}, {3, 4}));
  CHECK_THROWS_AS(two_clique_condition(p4, 2, {3, 4}, {1}), HypothesisNotMet);
  CHECK_THROWS_AS(two_clique_condition(p4, 1, {2}, {3}), HypothesisNotMet);
}

TEST_CASE("threshold reports") {
  const ThresholdReport t = compute_thresholds(tight_eta_graph());
  CHECK(t.alpha == 6);
  CHECK(t.omega == 2);
  CHECK(std::abs(*t.gamma - kGolden) < 1e-12);
  CHECK(std::abs(t.kappa - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(*t.eta - 2.0 / 3.0) < 1e-12);
  CHECK(*t.eta > *t.gamma);

  const ThresholdReport k3 = compute_thresholds(complete_graph(3));
  CHECK(std::abs(*k3.gamma - std::sqrt(2.0) / 2.0) < 1e-12);
  CHECK(k3.kappa == doctest::Approx(-0.5));
  CHECK(*k3.eta == *k3.gamma);
  CHECK(std::abs(k3.uniqueness_threshold - 1.0) < 1e-9);

  CHECK(std::abs(uniqueness_threshold(tight_gamma_graph()) - kGolden) < 1e-9);

  const ThresholdReport e = compute_thresholds(edgeless_graph(3));
  CHECK_FALSE(e.gamma.has_value());
  CHECK_FALSE(e.eta.has_value());
  CHECK(e.kappa == -std::numeric_limits<double>::infinity());
  CHECK(e.uniqueness_threshold == std::numeric_limits<double>::infinity());
}

TEST_CASE("threshold invariants over the sweep") {
  for (const auto& g : testing::sweep_graphs(40, 10, 29)) {
    const ThresholdReport r = compute_thresholds(g);
    if (g.num_edges() == 0) {
      CHECK_FALSE(r.gamma.has_value());
      continue;
    }
    CHECK(*r.gamma == gamma_mn(r.omega, 1));
    CHECK(*r.gamma >= kGolden - 1e-15);
    CHECK(*r.gamma < 1.0);
    CHECK(*r.eta == std::max(*r.gamma, r.kappa));
    CHECK(*r.eta >= *r.gamma);
    CHECK(r.uniqueness_threshold > 0.0);
  }
}

TEST_CASE("a single solution below the uniqueness threshold") {
  for (const auto& g : testing::sweep_graphs(20, 10, 31)) {
    const double u = uniqueness_threshold(g);
    for (double f : {0.5, 0.9}) {
      const double d = std::isinf(u) ? 0.5 : u * f;
      CHECK(enumerate_solutions(LcpInstance(g, d)).solutions.size() == 1);
    }
  }
}

TEST_CASE("ICS recognition") {
  CHECK(verify_ics(LcpInstance(tight_gamma_graph(), 0.7),
                   std::vector<double>{1, 0, 1 / 1.7, 1 / 1.7}));
  CHECK(verify_ics(LcpInstance(complete_graph(3), 0.5), std::vector<double>(3, 0.5)));
  // P3 at delta 0.4: the unique solution has full support, which is a P3.
  const LcpInstance p3(path_graph(3), 0.4);
  const auto c = enumerate_solutions(p3);
  REQUIRE(c.solutions.size() == 1);
  CHECK(c.solutions[0].support() == VertexSet{1, 2, 3});
  CHECK(verify_solution(p3, c.solutions[0].x()).valid());
  CHECK_FALSE(verify_ics(p3, c.solutions[0].x()));
}

TEST_CASE("candidate vectors of clique covers") {
  for (double d : {0.2, 0.6, 0.95}) {
    const LcpInstance p4(tight_gamma_graph(), d);
    const CliqueCover cover{{{1}, {3, 4}}, {}};
    const auto x = candidate_ics(p4, cover);
    CHECK(x.x()[0] == 1.0);
    CHECK(x.x()[1] == 0.0);
    CHECK(x.x()[2] == doctest::Approx(1 / (1 + d)));
    CHECK(x.l1() == doctest::Approx(candidate_l1(cover, d)));
  }
  const Graph t = tight_eta_graph();
  const CliqueCover k2{{{1, 2}, {4, 5}, {6, 7}, {8, 9}, {10, 11}}, {}};
  const auto x = candidate_ics(LcpInstance(t, 0.6), k2);
  for (Vertex v : k2.support()) CHECK(x.x()[v - 1] == doctest::Approx(0.625));
  CHECK(x.l1() == doctest::Approx(6.25));
  const CliqueCover singles{{{1}, {3}, {5}}, {}};
  CHECK(candidate_ics(LcpInstance(t, 0.6), singles).x() ==
        characteristic_vector(t, {1, 3, 5}));
  CHECK_THROWS_AS(candidate_ics(LcpInstance(t, 0.6), CliqueCover{{{1}, {2}}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(candidate_ics(LcpInstance(t, 0.6), CliqueCover{{{1, 3}}, {}}),
                  std::invalid_argument);
}

}  // TEST_SUITE
