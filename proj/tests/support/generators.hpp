#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "circnet/kalmanson.hpp"
#include "circnet/medial.hpp"
#include "circnet/network.hpp"

namespace circnet::testing {

/// Deterministic rng for test corpora; all sampling goes through the raw
/// engine so results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return uniform(1, 100) <= percent; }
  Rat small_positive_rational(int max = 10) {
    return make_rat(uniform(1, max), uniform(1, max));
  }

 private:
  std::mt19937_64 engine_;
};

// Fixtures used throughout the suites.
CircularNetwork unit_star();                       // 3 boundary, unit spokes
CircularNetwork single_edge(const Rat& w);         // n = 2
CircularNetwork path_two_boundary();               // 1 - inner - 2, unit
CircularNetwork cycle_network(int n);              // unit n-cycle, all boundary
CircularNetwork theta_network();                   // triple edge, n = 2
CircularNetwork inner_bigon_network();             // doubled edge at an inner
                                                   // degree-2 vertex, n = 2
CircularNetwork well_connected(int n);             // antipodal pairing, unit

/// Random connected multigraph (not necessarily planar) with rational
/// conductances whose numerators and denominators stay <= 10. May contain
/// parallel edges, self-loops, and zero-conductance extras.
CircularNetwork random_connected_network(Rng& rng, int max_vertices);

/// Random fixed-point-free involution on 2n points.
StrandPermutation random_involution(Rng& rng, int n);

/// Random connected circular planar network with a valid rotation system:
/// built from a random pairing, then roughened by series/parallel splits,
/// random conductances and occasional zero-conductance parallels.
CircularNetwork random_planar_network(Rng& rng, int n_boundary);

/// Random symmetric zero-diagonal non-negative matrix (generic, almost never
/// Kalmanson).
RatMatrix random_symmetric_metric(Rng& rng, int n);

/// Random non-negative combination of circular split pseudometrics; always
/// Kalmanson.
RatMatrix random_circular_split_metric(Rng& rng, int n);

}  // namespace circnet::testing
