#pragma once

#include <utility>
#include <vector>

#include "circnet/kalmanson.hpp"
#include "circnet/medial.hpp"
#include "circnet/network.hpp"
#include "circnet/omega.hpp"

namespace circnet {

/// Column rank pattern of an omega matrix: g(i) is the first column index j
/// past i (cyclically) with A_i in span(A_{i+1}, ..., A_j).
struct RankPattern {
  int n = 0;           // 2n columns
  std::vector<int> g;  // 1-based, g[i-1] in 1..2n

  int apply(int i) const { return g[static_cast<std::size_t>(i) - 1]; }
};

RankPattern column_rank_pattern(const OmegaMatrix& omega);

/// Strand permutation recovered from boundary data alone: tau = g + 1 mod 2n.
StrandPermutation tau_from_resistance(const MetricMatrix& r);

/// Chords {i, tau(i)} on 2n circle points with the crossing order along each
/// chord induced by a deterministic exact rational straight-line embedding.
/// Interleaving chords cross exactly once, so the wiring is lens-free.
struct ChordDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> chords;     // (a, b) with a < b, ascending
  std::vector<std::pair<int, int>> crossings;  // chord index pairs, id order
  std::vector<std::vector<int>> order_along;   // per chord: crossing ids from
                                               // the lower endpoint
};

ChordDiagram chord_diagram(const StrandPermutation& tau);

/// Rebuilds a network topology realizing tau: planar arrangement of the chord
/// diagram, faces two-colored (anchored at the boundary arcs flanking the
/// vertex positions), vertex-colored faces become vertices and crossings
/// become unit-conductance edges. The round-trip law
/// strand_permutation(result) = tau is enforced whenever the result is
/// connected.
CircularNetwork network_from_tau(const StrandPermutation& tau);

struct ReconstructionResult {
  CharacterizationReport report;
  RankPattern g;
  StrandPermutation tau;
  CircularNetwork network;
  bool round_trip_ok = false;
};

/// Full inverse pipeline: characterize, recover tau, rebuild the topology.
/// Throws NotElectrical (with the failing certificate) when the input is not
/// the resistance matrix of a connected circular planar network.
ReconstructionResult reconstruct_topology(const MetricMatrix& r, const MinorOptions& options = {});

}  // namespace circnet
