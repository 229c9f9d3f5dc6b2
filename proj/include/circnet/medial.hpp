#pragma once

#include <map>
#include <utility>
#include <vector>

#include "circnet/network.hpp"

namespace circnet {

/// Pairing of the 2n medial strand endpoints: a fixed-point-free involution.
/// Endpoints 2i-1 and 2i flank boundary vertex i (2i-1 clockwise-before,
/// 2i clockwise-after).
struct StrandPermutation {
  int n = 0;                 // boundary vertex count; 2n endpoints
  std::vector<int> pairing;  // 1-based: pairing[p-1] = tau(p)

  int apply(int p) const { return pairing[static_cast<std::size_t>(p) - 1]; }
  bool operator==(const StrandPermutation& other) const = default;
};

struct StrandRecord {
  int start_endpoint;
  int end_endpoint;
  std::vector<EdgeId> crossings;  // network edges in traversal order
};

/// Result of tracing every strand of the medial graph combinatorially from
/// the rotation system. Each positive edge is crossed by exactly two strand
/// passages.
struct MedialTrace {
  int boundary_count = 0;
  std::vector<StrandRecord> strands;              // open strands, traced from
                                                  // ascending start endpoints
  std::vector<std::vector<EdgeId>> closed_loops;  // strands never reaching the boundary
  // Crossing lists keyed by owner index pairs (a <= b). Owners 0..S-1 are the
  // open strands, S..S+L-1 the closed loops; (a, a) records self-crossings.
  std::map<std::pair<int, int>, std::vector<EdgeId>> crossings_between;
};

MedialTrace medial_trace(const CircularNetwork& net);

StrandPermutation strand_permutation(const CircularNetwork& net);

enum class DefectKind { SelfIntersection, DoubleCrossing, ClosedLoop };

struct Defect {
  DefectKind kind;
  int strand_a = -1;  // open strand index, or loop index for ClosedLoop
  int strand_b = -1;
  std::vector<EdgeId> edges;
};

/// Minimality per the medial criteria: no strand self-intersections, no
/// strand pair crossing twice (lens), no closed strands.
struct MinimalityReport {
  bool minimal = false;
  std::vector<Defect> defects;
};

MinimalityReport is_minimal(const CircularNetwork& net);

}  // namespace circnet
