#include "circnet/network.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "circnet/error.hpp"

namespace circnet {

CircularNetwork::CircularNetwork(int boundary_count, int vertex_count, std::vector<Edge> edges,
                                 std::map<VertexId, std::vector<EdgeId>> rotation)
    : boundary_count_(boundary_count),
      vertex_count_(vertex_count),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)) {
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_index_[edges_[i].id] = i;
  validate();
  compute_connectivity();
}

const Edge& CircularNetwork::edge_by_id(EdgeId id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end())
    fail(ErrorKind::Internal, "unknown edge id " + std::to_string(id));
  return edges_[it->second];
}

int CircularNetwork::positive_degree(VertexId v) const {
  int deg = 0;
  for (const Edge& e : edges_) {
    if (sign(e.conductance) <= 0) continue;
    if (e.u == v) ++deg;
    if (e.v == v) ++deg;
  }
  return deg;
}

void CircularNetwork::validate() const {
  if (boundary_count_ < 2)
    fail(ErrorKind::ValidationError, "need at least 2 boundary nodes");
  if (vertex_count_ < boundary_count_)
    fail(ErrorKind::ValidationError, "vertex count below boundary count");
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.u > vertex_count_ || e.v < 1 || e.v > vertex_count_)
      fail(ErrorKind::ValidationError, "edge " + std::to_string(e.id) + " references unknown vertex");
    if (sign(e.conductance) < 0)
      fail(ErrorKind::ValidationError, "edge " + std::to_string(e.id) + " has negative conductance");
  }
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].id == edges_[i - 1].id)
      fail(ErrorKind::ValidationError, "duplicate edge id " + std::to_string(edges_[i].id));

  for (const auto& [v, order] : rotation_) {
    if (v < 1 || v > vertex_count_)
      fail(ErrorKind::ValidationError, "rotation for unknown vertex " + std::to_string(v));
    // Must list each incident edge end exactly once (self-loops twice).
    std::vector<EdgeId> incident;
    for (const Edge& e : edges_) {
      if (e.u == v) incident.push_back(e.id);
      if (e.v == v) incident.push_back(e.id);
    }
    std::vector<EdgeId> listed = order;
    std::sort(incident.begin(), incident.end());
    std::sort(listed.begin(), listed.end());
    if (incident != listed)
      fail(ErrorKind::ValidationError,
           "rotation at vertex " + std::to_string(v) + " does not list each incident edge end exactly once");
  }
}

void CircularNetwork::compute_connectivity() {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : edges_) {
    if (sign(e.conductance) <= 0) continue;
    int a = find(e.u - 1);
    int b = find(e.v - 1);
    if (a != b) parent[a] = b;
  }
  int root = find(0);
  connected_ = true;
  for (int i = 1; i < vertex_count_; ++i)
    if (find(i) != root) {
      connected_ = false;
      break;
    }
}

}  // namespace circnet
