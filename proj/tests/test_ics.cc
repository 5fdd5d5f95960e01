#include <doctest.h>

#include "glcp/census.h"
#include "glcp/errors.h"
#include "glcp/fixtures.h"
#include "glcp/ics.h"
#include "glcp/independence.h"
#include "glcp/thresholds.h"
#include "helpers.h"

using namespace glcp;
using testing::kGolden;

TEST_SUITE("ics_construct") {

TEST_CASE("P4 cover from the lexicographic seed") {
  const IcsResult r = build_ics(tight_gamma_graph());
  CHECK(r.trace.seed == VertexSet{1, 3});
  CHECK(r.trace.single_contact == VertexSet{4});
  CHECK(r.cover.cliques == std::vector<VertexSet>{{1}, {3, 4}});
  CHECK(r.cover.anchors == std::vector<Vertex>{1, 3});
  for (double d : {0.3, 0.7}) {
    const auto x = r.trace.evaluate(d);
    CHECK(x == evaluate_ics(r.cover, LcpInstance(tight_gamma_graph(), d)).x());
    CHECK(x[2] == doctest::Approx(1 / (1 + d)));
  }
  CHECK(check_trace_invariants(tight_gamma_graph(), r).empty());

  CHECK(verify_ics(LcpInstance(tight_gamma_graph(), 0.7), r.trace.evaluate(0.7)));
  const Verdict low = verify_solution(LcpInstance(tight_gamma_graph(), 0.5),
                                      r.trace.evaluate(0.5));
  REQUIRE(low.violations.size() == 1);
  CHECK(low.violations[0].vertex == 2);
  CHECK_FALSE(verify_ics(LcpInstance(tight_gamma_graph(), kGolden - 0.01),
                         r.trace.evaluate(kGolden - 0.01)));
  CHECK(verify_ics(LcpInstance(tight_gamma_graph(), kGolden + 0.01),
                   r.trace.evaluate(kGolden + 0.01)));
}

TEST_CASE("seed choice") {
  const IcsResult r = build_ics(tight_gamma_graph(), VertexSet{2, 4});
  CHECK(r.cover.cliques == std::vector<VertexSet>{{1, 2}, {4}});
  CHECK_THROWS_AS(build_ics(tight_gamma_graph(), VertexSet{1}), std::invalid_argument);
  CHECK_THROWS_AS(build_ics(tight_gamma_graph(), VertexSet{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(build_ics(tight_gamma_graph(), VertexSet{1, 9}), std::out_of_range);
}

TEST_CASE("edgeless graphs give singleton covers") {
  const IcsResult r = build_ics(edgeless_graph(4));
  CHECK(r.cover.cliques.size() == 4);
  CHECK(r.trace.single_contact.empty());
  CHECK(r.trace.evaluate(0.4) == std::vector<double>(4, 1.0));
  CHECK(build_ics(Graph()).cover.cliques.empty());
}

TEST_CASE("11-vertex graph") {
  const Graph t = tight_eta_graph();
  const IcsResult r = build_ics(t);
  CHECK(r.trace.seed == VertexSet{1, 3, 5, 7, 9, 11});
  CHECK(r.trace.single_contact.empty());
  CHECK(r.cover.cliques.size() == 6);
  CHECK(r.cover.support() == VertexSet{1, 3, 5, 7, 9, 11});
  const auto x = evaluate_ics(r.cover, LcpInstance(t, 0.7));
  CHECK(verify_ics(LcpInstance(t, 0.7), x.x()));
  CHECK(x.l1() == doctest::Approx(6.0));
  CHECK(check_trace_invariants(t, r).empty());
}

TEST_CASE("Algorithm output over the sweep") {
  for (const auto& g : testing::sweep_graphs(40, 10, 41)) {
    const IcsResult r = build_ics(g);
    CHECK(check_trace_invariants(g, r).empty());
    CHECK(static_cast<int>(r.cover.cliques.size()) == alpha(g).size);
    for (const auto& c : r.cover.cliques) CHECK(is_clique(g, c));
    for (std::size_t a = 0; a < r.cover.cliques.size(); ++a) {
      for (std::size_t b = a + 1; b < r.cover.cliques.size(); ++b) {
        CHECK(are_cliques_independent(g, r.cover.cliques[a], r.cover.cliques[b]));
      }
    }
    const double lo = gamma(g).value_or(0.0) + 1e-9;
    std::vector<VertexSet> supports;
    for (double f : {0.0, 0.37, 0.8}) {
      const double d = lo + f * (1.0 - lo);
      const LcpInstance inst(g, d);
      const auto x = evaluate_ics(r.cover, inst);
      CHECK(verify_ics(inst, x.x()));
      supports.push_back(x.support());
    }
    CHECK(supports[0] == supports[1]);
    CHECK(supports[1] == supports[2]);

    // Off the support, C_j(x(delta)) does not decrease in delta.
    std::vector<double> prev;
    for (int k = 0; k < 10; ++k) {
      const double d = lo + k * (1.0 - lo) / 10.0;
      const auto c = discounted_closed_neighborhood(LcpInstance(g, d), r.trace.evaluate(d));
      for (Vertex j = 1; j <= g.num_vertices(); ++j) {
        if (r.cover.support().contains(j) || prev.empty()) continue;
        CHECK(c[j - 1] >= prev[j - 1] - 1e-12);
      }
      prev = c;
    }
  }
}

TEST_CASE("persistence above a valid delta") {
  const IcsResult p4 = build_ics(tight_gamma_graph());
  const LcpInstance at(tight_gamma_graph(), 0.62);
  CHECK(persistence_check(p4.cover, at, std::vector<double>{0.7, 0.8, 0.9, 0.99}));
  CHECK(persistence_check(p4.cover, at, {}));
  CHECK_THROWS_AS(persistence_check(p4.cover, at, std::vector<double>{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(persistence_check(p4.cover, at, std::vector<double>{0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(persistence_check(p4.cover, at.with_delta(0.5), {}), HypothesisNotMet);

  const CliqueCover k2{{{1, 2}, {4, 5}, {6, 7}, {8, 9}, {10, 11}}, {}};
  const LcpInstance t(tight_eta_graph(), 0.25);
  CHECK(persistence_check(k2, t, std::vector<double>{0.3, 0.6, 0.99}));
  CHECK_THROWS_AS(persistence_check(k2, t.with_delta(0.24), {}), HypothesisNotMet);
}

TEST_CASE("supergraph extension") {
  const Graph p4 = tight_gamma_graph();
  const CliqueCover cover = build_ics(p4).cover;
  // Vertex 5 sees all of {3,4} and also 1; the triangle {3,4,5} pushes
  // gamma of the supergraph to sqrt(2)/2.
  const Graph plus = add_vertex(p4, {1, 3, 4});
  CHECK(*gamma(plus) == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK_THROWS_AS(supergraph_extension_check(LcpInstance(p4, 0.7), plus, cover),
                  HypothesisNotMet);
  CHECK(supergraph_extension_check(LcpInstance(p4, 0.75), plus, cover));

  const Graph other = add_vertex(p4, {1, 3});
  CHECK(supergraph_extension_check(LcpInstance(p4, 0.7), other, cover));

  CHECK_THROWS_AS(supergraph_extension_check(LcpInstance(p4, 0.7), add_vertex(p4, {3, 4}), cover),
                  HypothesisNotMet);
  CHECK_THROWS_AS(supergraph_extension_check(LcpInstance(p4, 0.7), add_vertex(p4, {3}), cover),
                  HypothesisNotMet);
  CHECK_THROWS_AS(supergraph_extension_check(LcpInstance(p4, 0.7), p4, cover),
                  HypothesisNotMet);
  CHECK_THROWS_AS(supergraph_extension_check(LcpInstance(p4, 0.5), other, cover),
                  HypothesisNotMet);
}

TEST_CASE("supergraph extension over random covers") {
  int exercised = 0;
  for (const auto& g : testing::sweep_graphs(40, 9, 43)) {
    const CliqueCover cover = build_ics(g).cover;
    if (cover.cliques.size() < 2) continue;
    for (std::size_t a = 0; a < cover.cliques.size(); ++a) {
      for (std::size_t b = 0; b < cover.cliques.size(); ++b) {
        if (a == b) continue;
        VertexSet attach = set_union(cover.cliques[a], VertexSet{cover.cliques[b].front()});
        const Graph plus = add_vertex(g, attach);
        const double d = std::max(gamma(plus).value_or(0.0), gamma(g).value_or(0.0)) + 1e-6;
        if (d >= 1.0) continue;
        CHECK(supergraph_extension_check(LcpInstance(g, d), plus, cover));
        ++exercised;
      }
    }
  }
  CHECK(exercised > 20);
}

TEST_CASE("cover validation") {
  const Graph p4 = tight_gamma_graph();
  CHECK(is_valid_cover(p4, CliqueCover{{{1}, {3, 4}}, {1, 3}}));
  CHECK_FALSE(is_valid_cover(p4, CliqueCover{{{1}, {3, 4}}, {2, 3}}));
  CHECK_FALSE(is_valid_cover(p4, CliqueCover{{{1}, {2}}, {}}));
  CHECK_FALSE(is_valid_cover(p4, CliqueCover{{{1, 3}}, {}}));
  CHECK_FALSE(is_valid_cover(p4, CliqueCover{{{1}, {1}}, {}}));
  CHECK_FALSE(is_valid_cover(p4, CliqueCover{{{}}, {}}));
  CHECK(cover_from_support(p4, {1, 3, 4}).cliques == std::vector<VertexSet>{{1}, {3, 4}});
  CHECK(is_union_of_independent_cliques(p4, {1, 3, 4}));
  CHECK_FALSE(is_union_of_independent_cliques(p4, {1, 2, 3}));
}

}  // TEST_SUITE
