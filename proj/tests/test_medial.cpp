#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "circnet/boundary_data.hpp"
#include "circnet/error.hpp"
#include "circnet/medial.hpp"
#include "support/generators.hpp"

using namespace circnet;
using namespace circnet::testing;

namespace {

StrandPermutation make_tau(int n, std::initializer_list<std::pair<int, int>> pairs) {
  StrandPermutation tau{n, std::vector<int>(2 * static_cast<std::size_t>(n), 0)};
  for (const auto& [a, b] : pairs) {
    tau.pairing[static_cast<std::size_t>(a) - 1] = b;
    tau.pairing[static_cast<std::size_t>(b) - 1] = a;
  }
  return tau;
}

}  // namespace

TEST_CASE("star strands reproduce the published pairing") {
  const CircularNetwork star = unit_star();
  CHECK(strand_permutation(star) == make_tau(3, {{1, 4}, {2, 5}, {3, 6}}));

  const MedialTrace trace = medial_trace(star);
  CHECK(trace.strands.size() == 3);
  for (const StrandRecord& s : trace.strands) CHECK(s.crossings.size() == 2);
  CHECK(trace.closed_loops.empty());
  CHECK(is_minimal(star).minimal);
}

TEST_CASE("single edge pairs across the crossing") {
  CHECK(strand_permutation(single_edge(Rat(1))) == make_tau(2, {{1, 3}, {2, 4}}));
  CHECK(is_minimal(single_edge(Rat(1))).minimal);
}

TEST_CASE("series doubling creates a lens and same-side pairing") {
  // Both strands cross the path's axis twice (once per edge), so each joins
  // same-side endpoints; the boundary pairing is (1 4)(2 3) while the series
  // reduction of the path keeps (1 3)(2 4) at the boundary-data level.
  const CircularNetwork path = path_two_boundary();
  CHECK(strand_permutation(path) == make_tau(2, {{1, 4}, {2, 3}}));

  const MedialTrace trace = medial_trace(path);
  CHECK(trace.strands.size() == 2);
  for (const StrandRecord& s : trace.strands) CHECK(s.crossings.size() == 2);
  const MinimalityReport report = is_minimal(path);
  CHECK(!report.minimal);
  REQUIRE(report.defects.size() == 1);
  CHECK(report.defects[0].kind == DefectKind::DoubleCrossing);
  CHECK(report.defects[0].edges.size() == 2);
}

TEST_CASE("a self-loop kinks its strand into a self-intersection") {
  std::vector<Edge> edges{{1, 1, 2, Rat(1)}, {2, 2, 2, Rat(1)}};
  std::map<VertexId, std::vector<EdgeId>> rotation{{1, {1}}, {2, {1, 2, 2}}};
  const CircularNetwork net(2, 2, std::move(edges), std::move(rotation));
  const MinimalityReport report = is_minimal(net);
  CHECK(!report.minimal);
  bool has_self = false;
  for (const Defect& d : report.defects) has_self = has_self || d.kind == DefectKind::SelfIntersection;
  CHECK(has_self);
}

TEST_CASE("a triple edge is a lens, seen as a triple crossing") {
  const CircularNetwork theta = theta_network();
  const MedialTrace trace = medial_trace(theta);
  CHECK(trace.strands.size() == 2);
  const MinimalityReport report = is_minimal(theta);
  CHECK(!report.minimal);
  REQUIRE(report.defects.size() == 1);
  CHECK(report.defects[0].kind == DefectKind::DoubleCrossing);
  CHECK(report.defects[0].edges.size() == 3);
}

TEST_CASE("a bigon at an inner dead end produces a closed strand") {
  const CircularNetwork net = inner_bigon_network();
  const MedialTrace trace = medial_trace(net);
  REQUIRE(trace.closed_loops.size() == 1);
  CHECK(trace.closed_loops[0].size() == 2);  // circles the bigon face
  const MinimalityReport report = is_minimal(net);
  CHECK(!report.minimal);
  bool has_loop = false;
  for (const Defect& d : report.defects) has_loop = has_loop || d.kind == DefectKind::ClosedLoop;
  CHECK(has_loop);
}

TEST_CASE("4-cycle strands pair non-adjacent endpoints and stay minimal") {
  const CircularNetwork cycle = cycle_network(4);
  CHECK(strand_permutation(cycle) == make_tau(4, {{1, 6}, {2, 5}, {3, 8}, {4, 7}}));
  CHECK(is_minimal(cycle).minimal);
}

TEST_CASE("medial operations demand rotations only when ambiguous") {
  std::vector<Edge> edges{{1, 1, 4, Rat(1)}, {2, 2, 4, Rat(1)}, {3, 3, 4, Rat(1)}};
  const CircularNetwork no_rotation(3, 4, std::move(edges));
  CHECK_THROWS_AS(medial_trace(no_rotation), Error);

  // Degree <= 2 inner and degree <= 1 boundary vertices default their fans.
  std::vector<Edge> path_edges{{1, 1, 3, Rat(1)}, {2, 3, 2, Rat(1)}};
  const CircularNetwork bare_path(2, 3, std::move(path_edges));
  CHECK(strand_permutation(bare_path) == make_tau(2, {{1, 4}, {2, 3}}));
}

TEST_CASE("medial operations reject disconnected networks") {
  const CircularNetwork empty(2, 2, {});
  CHECK_THROWS_AS(medial_trace(empty), Error);
}

TEST_CASE("zero-conductance edges are invisible to the trace") {
  std::vector<Edge> edges{{1, 1, 2, Rat(1)}, {2, 1, 2, Rat(0)}};
  std::map<VertexId, std::vector<EdgeId>> rotation{{1, {1, 2}}, {2, {2, 1}}};
  const CircularNetwork net(2, 2, std::move(edges), std::move(rotation));
  CHECK(strand_permutation(net) == make_tau(2, {{1, 3}, {2, 4}}));
}

TEST_CASE("star-triangle transform leaves the strand pairing unchanged") {
  const CircularNetwork star = unit_star();
  const CircularNetwork triangle = star_triangle(star, 4);
  CHECK(strand_permutation(triangle) == strand_permutation(star));
  CHECK(is_minimal(triangle).minimal);
}

TEST_CASE("every positive edge is crossed exactly twice") {
  Rng rng(89);
  for (int t = 0; t < 20; ++t) {
    const CircularNetwork net = random_planar_network(rng, rng.uniform(2, 6));
    const MedialTrace trace = medial_trace(net);
    std::map<EdgeId, int> counts;
    for (const StrandRecord& s : trace.strands)
      for (EdgeId e : s.crossings) ++counts[e];
    for (const auto& loop : trace.closed_loops)
      for (EdgeId e : loop) ++counts[e];
    for (const Edge& e : net.edges()) {
      if (sign(e.conductance) > 0)
        CHECK(counts[e.id] == 2);
      else
        CHECK(counts.find(e.id) == counts.end());
    }
    // strand_permutation validates the fixed-point-free involution shape.
    strand_permutation(net);
  }
}

TEST_CASE("well-connected pairings trace back to themselves minimally") {
  for (int n = 3; n <= 5; ++n) {
    const CircularNetwork net = well_connected(n);
    const MinimalityReport report = is_minimal(net);
    CHECK(report.minimal);
    const StrandPermutation tau = strand_permutation(net);
    for (int i = 1; i <= 2 * n; ++i) {
      int expected = i + n;
      if (expected > 2 * n) expected -= 2 * n;
      CHECK(tau.apply(i) == expected);
    }
  }
}
