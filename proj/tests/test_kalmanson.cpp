#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circnet/boundary_data.hpp"
#include "circnet/error.hpp"
#include "circnet/kalmanson.hpp"
#include "support/generators.hpp"

using namespace circnet;
using namespace circnet::testing;

namespace {

MetricMatrix star_metric() {
  RatMatrix r(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) r.at(i, j) = 2;
  return MetricMatrix(std::move(r));
}

MetricMatrix cycle_metric() {
  return MetricMatrix(effective_resistance_matrix(cycle_network(4)).entries());
}

MetricMatrix scrambled_cycle_metric() {
  const RatMatrix r = effective_resistance_matrix(cycle_network(4)).entries();
  const std::vector<std::size_t> perm{0, 2, 1, 3};
  RatMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.at(i, j) = r.at(perm[i], perm[j]);
  return MetricMatrix(std::move(out));
}

RatMatrix negated(const RatMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = -m.at(i, j);
  return out;
}

}  // namespace

TEST_CASE("triangle inequality verdicts") {
  CHECK(is_metric(star_metric()).ok);
  CHECK(is_metric(MetricMatrix(RatMatrix(3, 3))).ok);  // pseudometric accepted

  RatMatrix bad(3, 3);
  bad.at(0, 2) = bad.at(2, 0) = 5;
  bad.at(0, 1) = bad.at(1, 0) = 1;
  bad.at(1, 2) = bad.at(2, 1) = 1;
  const MetricVerdict verdict = is_metric(MetricMatrix(bad));
  CHECK(!verdict.ok);
  CHECK(verdict.witness->i == 1);
  CHECK(verdict.witness->j == 2);
  CHECK(verdict.witness->k == 3);
}

TEST_CASE("Kalmanson verdicts on the 4-cycle and its scrambling") {
  CHECK(is_kalmanson(cycle_metric()).ok);
  const KalmansonVerdict verdict = is_kalmanson(scrambled_cycle_metric());
  CHECK(!verdict.ok);
  CHECK(verdict.witness.has_value());
}

TEST_CASE("three points never violate Kalmanson vacuously") {
  Rng rng(61);
  CHECK(is_kalmanson(MetricMatrix(random_symmetric_metric(rng, 3))).ok);
}

TEST_CASE("split decomposition negates the second differences") {
  CHECK(split_decomposition(star_metric()).entries() ==
        RatMatrix{{Rat(-2), Rat(1), Rat(1)}, {Rat(1), Rat(-2), Rat(1)}, {Rat(1), Rat(1), Rat(-2)}});
  CHECK(split_decomposition(MetricMatrix(RatMatrix(3, 3))).entries() == RatMatrix(3, 3));

  const RatMatrix cyc = split_decomposition(cycle_metric()).entries();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(cyc.at(i, j) == (i == j ? make_rat(-3, 4) : make_rat(1, 4)));

  Rng rng(67);
  for (int t = 0; t < 10; ++t) {
    const MetricMatrix d(random_symmetric_metric(rng, rng.uniform(2, 7)));
    const RatMatrix sum_check = split_decomposition(d).entries();
    const RatMatrix diff = second_differences(d.entries()).entries();
    for (std::size_t i = 0; i < sum_check.rows(); ++i)
      for (std::size_t j = 0; j < sum_check.cols(); ++j)
        CHECK(sign(sum_check.at(i, j) + diff.at(i, j)) == 0);
  }
}

TEST_CASE("circular response test accepts the unit triangle Laplacian") {
  RatMatrix laplacian{{Rat(2), Rat(-1), Rat(-1)}, {Rat(-1), Rat(2), Rat(-1)},
                      {Rat(-1), Rat(-1), Rat(2)}};
  CHECK(is_circular_response_matrix(laplacian));
}

TEST_CASE("circular response test rejects structural violations") {
  RatMatrix positive_off{{Rat(1), Rat(1), Rat(-2)},
                         {Rat(1), Rat(1), Rat(-2)},
                         {Rat(-2), Rat(-2), Rat(4)}};
  CHECK(!is_circular_response_matrix(positive_off));

  RatMatrix bad_rows{{Rat(2), Rat(-1), Rat(-1)}, {Rat(-1), Rat(2), Rat(-1)},
                     {Rat(-1), Rat(-1), Rat(3)}};
  CHECK(!is_circular_response_matrix(bad_rows));
}

TEST_CASE("response matrices of planar networks pass the circular minor test") {
  Rng rng(71);
  for (int t = 0; t < 15; ++t) {
    const CircularNetwork net = random_planar_network(rng, rng.uniform(2, 6));
    CHECK(is_circular_response_matrix(response_matrix(net).entries()));
  }
}

TEST_CASE("characterize accepts the star and identifies the dual triangle") {
  const CharacterizationReport report = characterize(star_metric());
  CHECK(report.metric.ok);
  CHECK(report.kalmanson.ok);
  CHECK(report.tnn.ok());
  CHECK(report.delta_even == Rat(3));
  CHECK(report.dual_response_valid);
  CHECK(report.electrical);

  // The dual of the unit star is the unit triangle (not the star-triangle
  // image, whose conductances are 1/3).
  const RatMatrix dual = negated(split_decomposition(star_metric()).entries());
  CHECK(dual == RatMatrix{{Rat(2), Rat(-1), Rat(-1)}, {Rat(-1), Rat(2), Rat(-1)},
                          {Rat(-1), Rat(-1), Rat(2)}});
  CHECK(dual == response_matrix(cycle_network(3)).entries());
}

TEST_CASE("characterize accepts the unit 4-cycle resistances") {
  const CharacterizationReport report = characterize(cycle_metric());
  CHECK(report.electrical);
  CHECK(sign(report.delta_even) != 0);
  CHECK(report.dual_response_valid);
}

TEST_CASE("characterize rejects a scrambled circular order with a witness") {
  const CharacterizationReport report = characterize(scrambled_cycle_metric());
  CHECK(!report.electrical);
  CHECK(!report.kalmanson.ok);
  CHECK(report.kalmanson.witness.has_value());
}

TEST_CASE("a single circular split is Kalmanson but not electrical") {
  // One split has Delta_even = 0: it is a degenerate pseudometric on the
  // boundary of the cone, not a resistance matrix of a connected network.
  // Its dual matrix is realized by a *disconnected* network (one edge, two
  // isolated nodes), so the raw circular-minor test accepts it -- both
  // characterization routes assume a genuine metric.
  RatMatrix d(4, 4);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      const bool in_i = i <= 2;
      const bool in_j = j <= 2;
      if (in_i != in_j) {
        d.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1) = 1;
        d.at(static_cast<std::size_t>(j) - 1, static_cast<std::size_t>(i) - 1) = 1;
      }
    }
  const MetricMatrix metric(std::move(d));
  CHECK(is_kalmanson(metric).ok);
  const CharacterizationReport report = characterize(metric);
  CHECK(!report.electrical);
  CHECK(sign(report.delta_even) == 0);
  CHECK(report.dual_response_valid);
}

TEST_CASE("two crossing splits give a proper Kalmanson metric that is not electrical") {
  // Splits {2,3} and {3,4}: every distance is positive, all Kalmanson
  // inequalities hold, but the dual would need the crossing chords 1-3 and
  // 2-4 of a single disk -- not circular planar. Both routes must reject.
  RatMatrix d{{Rat(0), Rat(1), Rat(2), Rat(1)},
              {Rat(1), Rat(0), Rat(1), Rat(2)},
              {Rat(2), Rat(1), Rat(0), Rat(1)},
              {Rat(1), Rat(2), Rat(1), Rat(0)}};
  const MetricMatrix metric(std::move(d));
  CHECK(is_metric(metric).ok);
  CHECK(is_kalmanson(metric).ok);
  const CharacterizationReport report = characterize(metric);
  CHECK(!report.electrical);
  CHECK(!report.dual_response_valid);
  const bool witnessed = !report.tnn.ok() || sign(report.delta_even) == 0;
  CHECK(witnessed);
}

TEST_CASE("both characterization routes agree on planar network corpora") {
  Rng rng(73);
  for (int t = 0; t < 15; ++t) {
    const CircularNetwork net = random_planar_network(rng, rng.uniform(2, 5));
    const CharacterizationReport report =
        characterize(MetricMatrix(effective_resistance_matrix(net).entries()));
    CHECK(report.electrical);
    CHECK(report.dual_response_valid);
    CHECK(report.metric.ok);
  }
}

TEST_CASE("positive scaling preserves every verdict in the report") {
  Rng rng(79);
  const RatMatrix r = effective_resistance_matrix(random_planar_network(rng, 4)).entries();
  RatMatrix scaled(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) scaled.at(i, j) = make_rat(9, 5) * r.at(i, j);
  const CharacterizationReport a = characterize(MetricMatrix(r));
  const CharacterizationReport b = characterize(MetricMatrix(scaled));
  CHECK(a.electrical == b.electrical);
  CHECK(a.kalmanson.ok == b.kalmanson.ok);
  CHECK(a.tnn.ok() == b.tnn.ok());
  CHECK(a.dual_response_valid == b.dual_response_valid);
  CHECK((sign(a.delta_even) != 0) == (sign(b.delta_even) != 0));
}

TEST_CASE("Kalmanson verdicts are rotation and reflection invariant") {
  Rng rng(83);
  for (int t = 0; t < 10; ++t) {
    const int n = rng.uniform(4, 6);
    const RatMatrix d = random_circular_split_metric(rng, n);
    const bool base = is_kalmanson(MetricMatrix(d)).ok;

    RatMatrix rotated(d.rows(), d.cols());
    RatMatrix reflected(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) {
        rotated.at(i, j) = d.at((i + 1) % d.rows(), (j + 1) % d.cols());
        reflected.at(i, j) = d.at(d.rows() - 1 - i, d.cols() - 1 - j);
      }
    CHECK(is_kalmanson(MetricMatrix(rotated)).ok == base);
    CHECK(is_kalmanson(MetricMatrix(reflected)).ok == base);
  }
}

TEST_CASE("metric matrices reject structural violations") {
  RatMatrix asym(3, 3);
  asym.at(0, 1) = 1;
  CHECK_THROWS_AS(MetricMatrix{asym}, Error);
  RatMatrix negative(2, 2);
  negative.at(0, 1) = negative.at(1, 0) = -1;
  CHECK_THROWS_AS(MetricMatrix{negative}, Error);
}
