#pragma once

#include <map>
#include <vector>

#include "circnet/rational.hpp"

namespace circnet {

using VertexId = int;  // boundary vertices are 1..n clockwise, inner ones n+1..|V|
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Rat conductance;  // siemens, >= 0; zero edges are kept but ignored by solvers
};

/// Planar-embeddable weighted graph with ordered boundary nodes. The
/// clockwise rotation (edge ids per vertex; a self-loop id appears twice) is
/// optional and only required by the medial operations. For a boundary vertex
/// the listed order starts at the edge nearest the gap that follows the vertex
/// in clockwise boundary order.
class CircularNetwork {
 public:
  CircularNetwork(int boundary_count, int vertex_count, std::vector<Edge> edges,
                  std::map<VertexId, std::vector<EdgeId>> rotation = {});

  int boundary_count() const { return boundary_count_; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<VertexId, std::vector<EdgeId>>& rotation() const { return rotation_; }

  bool is_boundary(VertexId v) const { return v >= 1 && v <= boundary_count_; }
  const Edge& edge_by_id(EdgeId id) const;

  /// True iff the conductance > 0 subgraph connects every vertex.
  bool connected() const { return connected_; }

  /// Count of incident positive-conductance edge ends (self-loops count twice).
  int positive_degree(VertexId v) const;

 private:
  void validate() const;
  void compute_connectivity();

  int boundary_count_;
  int vertex_count_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::vector<EdgeId>> rotation_;
  std::map<EdgeId, std::size_t> edge_index_;
  bool connected_ = false;
};

enum class VoltageScope { BoundaryOnly, AllVertices };

/// Voltages indexed by vertex id (volts).
struct VoltageVector {
  VoltageScope scope;
  std::vector<Rat> values;  // values[i] is the voltage at vertex i+1

  const Rat& at(VertexId v) const { return values[static_cast<std::size_t>(v) - 1]; }
};

/// Boundary currents (amperes), one entry per boundary node; entries sum to
/// zero for any harmonic state.
struct CurrentVector {
  std::vector<Rat> values;

  const Rat& at(VertexId v) const { return values[static_cast<std::size_t>(v) - 1]; }
};

}  // namespace circnet
