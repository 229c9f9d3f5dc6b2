#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circnet/boundary_data.hpp"
#include "circnet/error.hpp"
#include "circnet/kalmanson.hpp"
#include "circnet/linalg.hpp"
#include "circnet/omega.hpp"
#include "support/generators.hpp"

using namespace circnet;
using namespace circnet::testing;

namespace {

RatMatrix star_resistances() {
  RatMatrix r(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) r.at(i, j) = 2;
  return r;
}

ColumnMask mask_of(std::initializer_list<int> cols) {
  ColumnMask m = 0;
  for (int c : cols) m |= ColumnMask{1} << (c - 1);
  return m;
}

RatMatrix scaled(const RatMatrix& m, const Rat& factor) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = factor * m.at(i, j);
  return out;
}

}  // namespace

TEST_CASE("second differences of the zero matrix vanish") {
  const RatMatrix zero(3, 3);
  const RatMatrix m = second_differences(zero).entries();
  CHECK(m == RatMatrix(3, 3));
}

TEST_CASE("second differences of the star resistances") {
  const RatMatrix m = second_differences(star_resistances()).entries();
  CHECK(m == RatMatrix{{Rat(2), Rat(-1), Rat(-1)},
                       {Rat(-1), Rat(2), Rat(-1)},
                       {Rat(-1), Rat(-1), Rat(2)}});
}

TEST_CASE("second differences of the unit 4-cycle resistances") {
  const RatMatrix r = effective_resistance_matrix(cycle_network(4)).entries();
  const RatMatrix m = second_differences(r).entries();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(m.at(i, j) == (i == j ? make_rat(3, 4) : make_rat(-1, 4)));
}

TEST_CASE("second differences reject bad shapes") {
  RatMatrix asym(2, 2);
  asym.at(0, 1) = 1;
  CHECK_THROWS_AS(second_differences(asym), Error);
  RatMatrix diag(2, 2);
  diag.at(0, 0) = 1;
  diag.at(0, 1) = diag.at(1, 0) = 1;
  CHECK_THROWS_AS(second_differences(diag), Error);
}

TEST_CASE("second-difference rows and columns telescope to zero") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const int n = rng.uniform(2, 7);
    const RatMatrix m = second_differences(random_symmetric_metric(rng, n)).entries();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      CHECK(sign(m.row_sum(i)) == 0);
      Rat col = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) col += m.at(r, i);
      CHECK(sign(col) == 0);
    }
  }
}

TEST_CASE("omega matrix of the star matches the worked rows") {
  const OmegaMatrix omega = omega_matrix(star_resistances());
  CHECK(omega.entries() == RatMatrix{{Rat(1), Rat(2), Rat(1), Rat(1), Rat(0), Rat(-1)},
                                     {Rat(0), Rat(1), Rat(1), Rat(2), Rat(1), Rat(1)},
                                     {Rat(-1), Rat(-1), Rat(0), Rat(1), Rat(1), Rat(2)}});
}

TEST_CASE("omega matrix of the doubled single edge repeats one row") {
  RatMatrix r(2, 2);
  r.at(0, 1) = r.at(1, 0) = make_rat(1, 2);
  const OmegaMatrix omega = omega_matrix(r);
  const RatMatrix expected_row{{Rat(1), make_rat(1, 2), Rat(1), make_rat(1, 2)}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t c = 0; c < 4; ++c) CHECK(omega.entries().at(i, c) == expected_row.at(0, c));
}

TEST_CASE("omega matrix of the zero input keeps only the incidence pattern") {
  const OmegaMatrix omega = omega_matrix(RatMatrix(4, 4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(sign(omega.entries().at(i, 2 * j + 1)) == 0);
  CHECK(omega.entries().at(0, 0) == Rat(1));
  CHECK(omega.entries().at(3, 0) == Rat(1));  // (-1)^n with n = 4
}

TEST_CASE("row space rank is n-1 on the fixtures") {
  CHECK(row_space_rank(omega_matrix(star_resistances())) == 2);
  RatMatrix r(2, 2);
  r.at(0, 1) = r.at(1, 0) = make_rat(1, 2);
  CHECK(row_space_rank(omega_matrix(r)) == 1);
}

TEST_CASE("row space rank is n-1 for every symmetric zero-diagonal input") {
  // The alternating row dependency holds identically (even columns telescope,
  // odd columns are structural), and the odd columns alone span n-1
  // dimensions, so the rank never moves.
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    const int n = rng.uniform(2, 7);
    const OmegaMatrix omega = omega_matrix(random_symmetric_metric(rng, n));
    CHECK(row_space_rank(omega) == static_cast<std::size_t>(n) - 1);
    for (std::size_t c = 0; c < 2 * static_cast<std::size_t>(n); ++c) {
      Rat alt = 0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        if (i % 2 == 0)
          alt -= omega.entries().at(i, c);
        else
          alt += omega.entries().at(i, c);
      }
      CHECK(sign(alt) == 0);
    }
  }
}

TEST_CASE("Pluecker coordinates of the star") {
  const GrassmannPoint point = pluecker_coordinates(omega_matrix(star_resistances()));
  CHECK(point.coordinates.size() == 15);
  CHECK(point.coordinate(mask_of({1, 2})) == Rat(1));
  CHECK(point.coordinate(mask_of({2, 4})) == Rat(3));
  CHECK(point.coordinate(mask_of({2, 6})) == Rat(3));
  CHECK(point.coordinate(mask_of({5, 6})) == Rat(1));
  for (const auto& [mask, value] : point.coordinates) CHECK(value >= Rat(1));
}

TEST_CASE("Pluecker coordinates of the single edge are the first-row entries") {
  RatMatrix r(2, 2);
  r.at(0, 1) = r.at(1, 0) = make_rat(1, 2);
  const GrassmannPoint point = pluecker_coordinates(omega_matrix(r));
  CHECK(point.coordinate(mask_of({1})) == Rat(1));
  CHECK(point.coordinate(mask_of({2})) == make_rat(1, 2));
  CHECK(point.coordinate(mask_of({3})) == Rat(1));
  CHECK(point.coordinate(mask_of({4})) == make_rat(1, 2));
}

TEST_CASE("rank-deficient raw input raises RankMismatch") {
  const OmegaMatrix raw = OmegaMatrix::from_raw(RatMatrix(3, 6));
  CHECK_THROWS_AS(pluecker_coordinates(raw), Error);
  CHECK(!is_tnn_point(raw).is_point);
}

TEST_CASE("Pluecker enumeration refuses n beyond the cap") {
  Rng rng(41);
  const RatMatrix d = random_symmetric_metric(rng, 5);
  MinorOptions options;
  options.max_n = 4;
  CHECK_THROWS_AS(pluecker_coordinates(omega_matrix(d), options), Error);
}

TEST_CASE("minors agree with Laplace expansion along another column") {
  Rng rng(43);
  const RatMatrix r = effective_resistance_matrix(random_planar_network(rng, 4)).entries();
  const OmegaMatrix omega = omega_matrix(r);
  const GrassmannPoint point = pluecker_coordinates(omega);
  const std::size_t k = point.k;
  for (int trial = 0; trial < 12; ++trial) {
    const auto& [mask, value] =
        point.coordinates[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(point.coordinates.size()) - 1))];
    const std::vector<int> cols = mask_to_columns(mask);
    const std::size_t pivot = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(k) - 1));
    Rat total = 0;
    for (std::size_t row = 0; row < k; ++row) {
      RatMatrix minor(k - 1, k - 1);
      std::size_t rr = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (i == row) continue;
        std::size_t cc = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == pivot) continue;
          minor.at(rr, cc) =
              omega.entries().at(i, static_cast<std::size_t>(cols[j]) - 1);
          ++cc;
        }
        ++rr;
      }
      Rat cofactor = exact_determinant(minor);
      if ((row + pivot) % 2 != 0) cofactor = -cofactor;
      total += omega.entries().at(row, static_cast<std::size_t>(cols[pivot]) - 1) * cofactor;
    }
    CHECK(total == value);
  }
}

TEST_CASE("TNN membership holds for random connected planar networks") {
  Rng rng(47);
  for (int t = 0; t < 25; ++t) {
    const int n = rng.uniform(2, 6);
    const RatMatrix r = effective_resistance_matrix(random_planar_network(rng, n)).entries();
    const TnnVerdict verdict = is_tnn_point(omega_matrix(r));
    CHECK(verdict.ok());
  }
}

TEST_CASE("a broken Kalmanson quadruple forces a mixed-sign witness") {
  // Relabeling the 4-cycle by swapping 2 and 3 keeps the numbers but breaks
  // the circular order.
  const RatMatrix r = effective_resistance_matrix(cycle_network(4)).entries();
  const std::vector<std::size_t> perm{0, 2, 1, 3};
  RatMatrix scrambled(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) scrambled.at(i, j) = r.at(perm[i], perm[j]);
  CHECK(!is_kalmanson(MetricMatrix(scrambled)).ok);
  const TnnVerdict verdict = is_tnn_point(omega_matrix(scrambled));
  CHECK(!verdict.ok());
  CHECK(verdict.mixed_sign_witness.has_value());
}

TEST_CASE("positive scaling preserves the verdict and the zero pattern") {
  Rng rng(53);
  const RatMatrix r = effective_resistance_matrix(random_planar_network(rng, 4)).entries();
  const Rat lambda = make_rat(7, 3);
  const GrassmannPoint base = pluecker_coordinates(omega_matrix(r));
  const GrassmannPoint big = pluecker_coordinates(omega_matrix(scaled(r, lambda)));
  REQUIRE(base.coordinates.size() == big.coordinates.size());
  for (std::size_t i = 0; i < base.coordinates.size(); ++i) {
    CHECK(base.coordinates[i].first == big.coordinates[i].first);
    CHECK(sign(base.coordinates[i].second) == sign(big.coordinates[i].second));
  }
  CHECK(is_tnn_point(omega_matrix(scaled(r, lambda))).ok());
}

TEST_CASE("minor enumeration is deterministic across thread counts") {
  Rng rng(59);
  const RatMatrix r = effective_resistance_matrix(random_planar_network(rng, 6)).entries();
  const OmegaMatrix omega = omega_matrix(r);
  MinorOptions serial;
  MinorOptions parallel;
  parallel.threads = 8;
  const GrassmannPoint a = pluecker_coordinates(omega, serial);
  const GrassmannPoint b = pluecker_coordinates(omega, parallel);
  CHECK(a.coordinates == b.coordinates);
}

TEST_CASE("the even coordinate mask lists 2,4,...,2n-2") {
  CHECK(mask_to_columns(even_coordinate_mask(2)) == std::vector<int>{2});
  CHECK(mask_to_columns(even_coordinate_mask(3)) == std::vector<int>{2, 4});
  CHECK(mask_to_columns(even_coordinate_mask(5)) == std::vector<int>{2, 4, 6, 8});
}
